#include "pathalg/mpoly.hpp"

#include <algorithm>

#include "pathalg/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pathalg {

MPoly MPoly::constant(int nvars, int cap, const Rat& c) {
	MPoly p(nvars, cap);
	p.add_term(Expo(nvars, 0), c);
	return p;
}

MPoly MPoly::var(int nvars, int cap, int i) {
	if (i < 1 || i > nvars)
		throw dimension_error("variable index out of range");
	Expo e(nvars, 0);
	e[i - 1] = 1;
	return monomial(nvars, cap, e, Rat(1));
}

MPoly MPoly::monomial(int nvars, int cap, const Expo& e, const Rat& c) {
	MPoly p(nvars, cap);
	p.add_term(e, c);
	return p;
}

void MPoly::check_compatible(const MPoly& o, const char* what) const {
	if (nvars_ != o.nvars_ || cap_ != o.cap_)
		throw dimension_error(std::string(what) + ": operands have different nvars or cap");
}

Rat MPoly::coeff(const Expo& e) const {
	auto it = terms_.find(e);
	return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const {
	return coeff(Expo(nvars_, 0));
}

void MPoly::add_term(const Expo& e, const Rat& c) {
	if ((int)e.size() != nvars_)
		throw dimension_error("exponent vector has wrong length");
	for (int k : e)
		if (k < 0)
			throw domain_error("negative exponent");
	if (c.is_zero() || expo_deg(e) > cap_)
		return;
	auto [it, inserted] = terms_.emplace(e, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

MPoly MPoly::operator-() const {
	MPoly r(nvars_, cap_);
	for (const auto& [e, c] : terms_)
		r.terms_.emplace(e, -c);
	return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
	check_compatible(o, "add");
	for (const auto& [e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
	check_compatible(o, "sub");
	for (const auto& [e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

MPoly MPoly::scaled(const Rat& c) const {
	MPoly r(nvars_, cap_);
	if (c.is_zero())
		return r;
	for (const auto& [e, v] : terms_)
		r.terms_.emplace(e, v * c);
	return r;
}

MPoly MPoly::mul_serial(const MPoly& a, const MPoly& b) {
	a.check_compatible(b, "mul");
	MPoly r(a.nvars_, a.cap_);
	Expo e(a.nvars_);
	for (const auto& [ea, ca] : a.terms_) {
		int da = expo_deg(ea);
		for (const auto& [eb, cb] : b.terms_) {
			if (da + expo_deg(eb) > a.cap_)
				break;  // b terms are degree-sorted
			for (int k = 0; k < a.nvars_; ++k)
				e[k] = ea[k] + eb[k];
			auto [it, inserted] = r.terms_.emplace(e, ca * cb);
			if (!inserted) {
				it->second += ca * cb;
				if (it->second.is_zero())
					r.terms_.erase(it);
			}
		}
	}
	return r;
}

MPoly MPoly::mul_parallel(const MPoly& a, const MPoly& b) {
#ifdef _OPENMP
	a.check_compatible(b, "mul");
	std::vector<const std::pair<const Expo, Rat>*> at;
	at.reserve(a.terms_.size());
	for (const auto& t : a.terms_)
		at.push_back(&t);
	int nthreads = omp_get_max_threads();
	std::vector<TermMap> local((std::size_t)nthreads);
#pragma omp parallel num_threads(nthreads)
	{
		TermMap& mine = local[(std::size_t)omp_get_thread_num()];
		Expo e((std::size_t)a.nvars_);
#pragma omp for schedule(static)
		for (long k = 0; k < (long)at.size(); ++k) {
			const auto& [ea, ca] = *at[(std::size_t)k];
			int da = expo_deg(ea);
			for (const auto& [eb, cb] : b.terms_) {
				if (da + expo_deg(eb) > a.cap_)
					break;
				for (int j = 0; j < a.nvars_; ++j)
					e[(std::size_t)j] = ea[(std::size_t)j] + eb[(std::size_t)j];
				auto [it, inserted] = mine.emplace(e, ca * cb);
				if (!inserted)
					it->second += ca * cb;
			}
		}
	}
	MPoly r(a.nvars_, a.cap_);
	for (auto& m : local)
		for (auto& [e, c] : m)
			r.add_term(e, c);
	return r;
#else
	return mul_serial(a, b);
#endif
}

MPoly operator*(const MPoly& a, const MPoly& b) {
	// Exact arithmetic: the parallel kernel and the serial reference agree
	// term for term; dispatch is purely a size heuristic.
	if (a.terms_.size() * b.terms_.size() >= 16384)
		return MPoly::mul_parallel(a, b);
	return MPoly::mul_serial(a, b);
}

MPoly MPoly::partial(int i) const {
	if (i < 1 || i > nvars_)
		throw dimension_error("partial: variable index out of range");
	MPoly r(nvars_, cap_);
	for (const auto& [e, c] : terms_) {
		int k = e[i - 1];
		if (k == 0)
			continue;
		Expo e2 = e;
		--e2[i - 1];
		r.terms_.emplace(e2, c * Rat(k));
	}
	return r;
}

MPoly MPoly::degree_slice(int d) const {
	MPoly r(nvars_, cap_);
	for (const auto& [e, c] : terms_)
		if (expo_deg(e) == d)
			r.terms_.emplace(e, c);
	return r;
}

Rat MPoly::eval(const std::vector<Rat>& pt) const {
	if ((int)pt.size() != nvars_)
		throw dimension_error("eval: wrong point dimension");
	Rat s(0);
	for (const auto& [e, c] : terms_) {
		Rat t = c;
		for (int k = 0; k < nvars_; ++k)
			if (e[k] > 0)
				t *= pt[k].pow((unsigned)e[k]);
		s += t;
	}
	return s;
}

std::vector<Rat> MPoly::eval_line(const std::vector<Rat>& base, const std::vector<Rat>& dir) const {
	if ((int)base.size() != nvars_ || (int)dir.size() != nvars_)
		throw dimension_error("eval_line: wrong point dimension");
	std::vector<Rat> out(1, Rat(0));
	auto acc = [&](std::size_t k, const Rat& v) {
		if (out.size() <= k)
			out.resize(k + 1, Rat(0));
		out[k] += v;
	};
	for (const auto& [e, c] : terms_) {
		// product over variables of (base_k + t dir_k)^{e_k}
		std::vector<Rat> f(1, c);
		for (int k = 0; k < nvars_; ++k) {
			for (int rep = 0; rep < e[k]; ++rep) {
				std::vector<Rat> g(f.size() + 1, Rat(0));
				for (std::size_t j = 0; j < f.size(); ++j) {
					g[j] += f[j] * base[k];
					g[j + 1] += f[j] * dir[k];
				}
				f = std::move(g);
			}
		}
		for (std::size_t j = 0; j < f.size(); ++j)
			acc(j, f[j]);
	}
	while (out.size() > 1 && out.back().is_zero())
		out.pop_back();
	return out;
}

}
