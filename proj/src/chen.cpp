#include "pathalg/chen.hpp"

#include <functional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathalg/errors.hpp"
#include "pathalg/ncop.hpp"

namespace pathalg {

PLPath::PLPath(int n_, std::vector<std::vector<Rat>> points_)
	: n(n_), points(std::move(points_)) {
	if (n < 1)
		throw dimension_error("path: need at least one coordinate");
	if (points.size() < 2)
		throw dimension_error("path: need at least two points");
	for (const auto& p : points)
		if ((int)p.size() != n)
			throw dimension_error("path: point dimension mismatch");
}

IntMap seg_integrals(const std::vector<Rat>& v, int cap) {
	if (cap < 0)
		throw domain_error("seg_integrals: negative cap");
	const int n = (int)v.size();
	IntMap r;
	Word w;
	// Depth-first over words, carrying the running product v_{i1}..v_{ip}.
	std::function<void(const Rat&)> rec = [&](const Rat& prod) {
		Rat fact(1);
		for (std::size_t k = 2; k <= w.size(); ++k)
			fact *= Rat((long long)k);
		r.emplace(w, prod / fact);
		if ((int)w.size() == cap)
			return;
		for (int i = 1; i <= n; ++i) {
			if (v[(std::size_t)(i - 1)].is_zero())
				continue;
			w.push_back(i);
			rec(prod * v[(std::size_t)(i - 1)]);
			w.pop_back();
		}
	};
	rec(Rat(1));
	return r;
}

static IntMap concat_impl(const IntMap& a, const IntMap& b, int n, int cap, bool parallel) {
	for (const auto& m : {&a, &b})
		for (const auto& [w, c] : *m)
			for (int l : w)
				if (l < 1 || l > n)
					throw dimension_error("concat_integrals: letter out of range");
	std::vector<const std::pair<const Word, Rat>*> av;
	av.reserve(a.size());
	for (const auto& t : a)
		av.push_back(&t);
	auto merge_from = [&](IntMap& dst, const std::pair<const Word, Rat>& ta) {
		for (const auto& [v, cv] : b) {
			if ((int)(ta.first.size() + v.size()) > cap)
				break;  // b is length-sorted
			Rat p = ta.second * cv;
			if (p.is_zero())
				continue;
			Word w = word_cat(ta.first, v);
			auto [it, fresh] = dst.emplace(std::move(w), p);
			if (!fresh) {
				it->second += p;
				if (it->second.is_zero())
					dst.erase(it);
			}
		}
	};
	if (parallel) {
#ifdef _OPENMP
		IntMap out;
		#pragma omp parallel
		{
			IntMap local;
			#pragma omp for schedule(static) nowait
			for (long long k = 0; k < (long long)av.size(); ++k)
				merge_from(local, *av[(std::size_t)k]);
			#pragma omp for ordered schedule(static, 1)
			for (int t = 0; t < omp_get_num_threads(); ++t) {
				#pragma omp ordered
				{
					for (auto& [w, c] : local) {
						auto [it, fresh] = out.emplace(w, c);
						if (!fresh) {
							it->second += c;
							if (it->second.is_zero())
								out.erase(it);
						}
					}
				}
			}
		}
		return out;
#endif
	}
	IntMap out;
	for (const auto* t : av)
		merge_from(out, *t);
	return out;
}

IntMap concat_integrals(const IntMap& a, const IntMap& b, int n, int cap) {
	return concat_impl(a, b, n, cap, true);
}

IntMap concat_integrals_serial(const IntMap& a, const IntMap& b, int n, int cap) {
	return concat_impl(a, b, n, cap, false);
}

ChenSeries::ChenSeries(int n, int cap, std::vector<Rat> target)
	: n_(n), cap_(cap), target_(std::move(target)) {
	if (n_ < 1 || cap_ < 1)
		throw dimension_error("chen series: bad shape");
	if ((int)target_.size() != n_)
		throw dimension_error("chen series: target dimension mismatch");
	terms_.emplace(Word{}, Rat(1));
}

Rat ChenSeries::coeff(const Word& w) const {
	auto it = terms_.find(w);
	return it == terms_.end() ? Rat(0) : it->second;
}

void ChenSeries::set_coeff(const Word& w, const Rat& c) {
	if ((int)w.size() > cap_)
		throw dimension_error("chen series: word beyond cap");
	for (int l : w)
		if (l < 1 || l > n_)
			throw dimension_error("chen series: letter out of range");
	if (w.empty() && c != Rat(1))
		throw domain_error("chen series: empty-word coefficient must be 1");
	if (c.is_zero())
		terms_.erase(w);
	else
		terms_.insert_or_assign(w, c);
}

ChenSeries chen_series(const PLPath& path, int cap) {
	ChenSeries e(path.n, cap, path.end());
	// Fold the segments of the reversed path through Chen's relation.
	IntMap acc;
	acc.emplace(Word{}, Rat(1));
	for (std::size_t s = path.points.size() - 1; s-- > 0;) {
		std::vector<Rat> v(path.points[s]);
		for (int i = 0; i < path.n; ++i)
			v[(std::size_t)i] -= path.points[s + 1][(std::size_t)i];
		acc = concat_integrals(acc, seg_integrals(v, cap), path.n, cap);
	}
	for (auto& [w, c] : acc)
		if (!w.empty())
			e.set_coeff(w, c);
	return e;
}

static void all_words_rec(int n, int len, Word& w, std::vector<Word>& out) {
	if ((int)w.size() == len) {
		out.push_back(w);
		return;
	}
	for (int i = 1; i <= n; ++i) {
		w.push_back(i);
		all_words_rec(n, len, w, out);
		w.pop_back();
	}
}

bool grouplike_check(const ChenSeries& e) {
	// Coefficient of D_u (x) D_v in the deconcatenation coproduct.
	std::map<std::pair<Word, Word>, Rat, TensorOp::KeyLess> delta;
	for (const auto& [w, c] : e.integrals())
		for (const auto& [u, v] : word_unshuffles(w)) {
			auto [it, fresh] = delta.emplace(std::make_pair(u, v), c);
			if (!fresh)
				it->second += c;
		}
	for (int lu = 0; lu <= e.cap(); ++lu)
		for (int lv = 0; lv + lu <= e.cap(); ++lv) {
			std::vector<Word> us, vs;
			Word scratch;
			all_words_rec(e.n(), lu, scratch, us);
			all_words_rec(e.n(), lv, scratch, vs);
			for (const auto& u : us)
				for (const auto& v : vs) {
					auto it = delta.find(std::make_pair(u, v));
					Rat lhs = it == delta.end() ? Rat(0) : it->second;
					if (lhs != e.coeff(u) * e.coeff(v))
						return false;
				}
		}
	return true;
}

Rat source_eval(const ChenSeries& e, const MPoly& a) {
	if (a.nvars() != e.n())
		throw dimension_error("source_eval: variable count mismatch");
	if (a.degree() > e.cap())
		throw domain_error("source_eval: polynomial degree exceeds cap");
	Rat out(0);
	for (const auto& [w, c] : e.integrals()) {
		MPoly d = a;
		for (int i : w) {
			d = d.partial(i);
			if (d.is_zero())
				break;
		}
		if (!d.is_zero())
			out += c * d.eval(e.target());
	}
	return out;
}

ChenSeries compose(const ChenSeries& e1, const ChenSeries& e2) {
	if (e1.n() != e2.n() || e1.cap() != e2.cap())
		throw dimension_error("compose: shape mismatch");
	for (int i = 1; i <= e1.n(); ++i) {
		MPoly xi = MPoly::var(e1.n(), e1.cap(), i);
		if (source_eval(e1, xi) != e2.target()[(std::size_t)(i - 1)])
			throw domain_error("compose: endpoint mismatch");
	}
	IntMap folded = concat_integrals(e1.integrals(), e2.integrals(), e1.n(), e1.cap());
	ChenSeries r(e1.n(), e1.cap(), e1.target());
	for (auto& [w, c] : folded)
		if (!w.empty())
			r.set_coeff(w, c);
	return r;
}

RatMat transport(const ChenSeries& e, const Connection& c) {
	if (e.n() != c.n())
		throw dimension_error("transport: variable count mismatch");
	// M_w by suffix recursion: M_{i.w} = d_i M_w - A_i M_w.
	std::map<Word, MatPoly, LenLexLess> memo;
	memo.emplace(Word{}, MatPoly::identity(c.N(), c.n(), c.cap()));
	std::function<const MatPoly&(const Word&)> get = [&](const Word& w) -> const MatPoly& {
		auto it = memo.find(w);
		if (it != memo.end())
			return it->second;
		Word suf(w.begin() + 1, w.end());
		const MatPoly& m = get(suf);
		MatPoly v = m.partial(w[0]) - c.A(w[0]) * m;
		return memo.emplace(w, std::move(v)).first->second;
	};
	RatMat out(c.N());
	for (const auto& [w, coef] : e.integrals())
		out += get(w).eval(e.target()).scaled(coef);
	return out;
}

// Univariate polynomial helpers over Rat (exact, uncapped in t).
using UPoly = std::vector<Rat>;

static UPoly umul(const UPoly& a, const UPoly& b) {
	if (a.empty() || b.empty())
		return {};
	UPoly r(a.size() + b.size() - 1, Rat(0));
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (a[i].is_zero())
			continue;
		for (std::size_t j = 0; j < b.size(); ++j)
			r[i + j] += a[i] * b[j];
	}
	return r;
}

static UPoly uintegrate(const UPoly& a) {
	UPoly r(a.size() + 1, Rat(0));
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i + 1] = a[i] / Rat((long long)(i + 1));
	return r;
}

static Rat ueval1(const UPoly& a) {
	Rat s(0);
	for (const auto& c : a)
		s += c;
	return s;
}

std::vector<RatMat> picard_orders(const PLPath& path, const Connection& c, int cap) {
	if (path.n != c.n())
		throw dimension_error("picard_transport: variable count mismatch");
	if (cap < 0)
		throw domain_error("picard_transport: negative cap");
	const int N = c.N();
	std::vector<RatMat> total((std::size_t)cap + 1, RatMat(N));
	total[0] = RatMat::identity(N);
	using UMat = std::vector<UPoly>;  // N*N entries, row major
	for (std::size_t s = 0; s + 1 < path.points.size(); ++s) {
		const auto& base = path.points[s];
		std::vector<Rat> v(path.points[s + 1]);
		for (int i = 0; i < path.n; ++i)
			v[(std::size_t)i] -= base[(std::size_t)i];
		// B(t) = sum_i v_i A_i(base + t v).
		UMat B((std::size_t)(N * N));
		for (int i = 1; i <= path.n; ++i) {
			if (v[(std::size_t)(i - 1)].is_zero())
				continue;
			for (int r = 0; r < N; ++r)
				for (int q = 0; q < N; ++q) {
					UPoly line = c.A(i).at(r, q).eval_line(base, v);
					UPoly& dst = B[(std::size_t)(r * N + q)];
					if (dst.size() < line.size())
						dst.resize(line.size(), Rat(0));
					for (std::size_t k = 0; k < line.size(); ++k)
						dst[k] += v[(std::size_t)(i - 1)] * line[k];
				}
		}
		// Picard: U_j(t) = integral of B U_{j-1}; U_j has exactly j A-factors.
		std::vector<RatMat> seg((std::size_t)cap + 1, RatMat(N));
		seg[0] = RatMat::identity(N);
		UMat prev((std::size_t)(N * N));
		for (int r = 0; r < N; ++r)
			prev[(std::size_t)(r * N + r)] = UPoly{Rat(1)};
		for (int j = 1; j <= cap; ++j) {
			UMat cur((std::size_t)(N * N));
			bool nonzero = false;
			for (int r = 0; r < N; ++r)
				for (int q = 0; q < N; ++q) {
					UPoly acc;
					for (int k = 0; k < N; ++k) {
						UPoly p = umul(B[(std::size_t)(r * N + k)], prev[(std::size_t)(k * N + q)]);
						if (p.size() > acc.size())
							acc.resize(p.size(), Rat(0));
						for (std::size_t t = 0; t < p.size(); ++t)
							acc[t] += p[t];
					}
					UPoly integ = uintegrate(acc);
					for (const auto& cc : integ)
						if (!cc.is_zero()) {
							nonzero = true;
							break;
						}
					cur[(std::size_t)(r * N + q)] = std::move(integ);
					seg[(std::size_t)j].at(r, q) = ueval1(cur[(std::size_t)(r * N + q)]);
				}
			prev = std::move(cur);
			if (!nonzero)
				break;
		}
		// Later segments multiply on the left; grade by combined order.
		std::vector<RatMat> next((std::size_t)cap + 1, RatMat(N));
		for (int j = 0; j <= cap; ++j)
			for (int k = 0; j + k <= cap; ++k)
				next[(std::size_t)(j + k)] += seg[(std::size_t)j] * total[(std::size_t)k];
		total = std::move(next);
	}
	return total;
}

RatMat picard_transport(const PLPath& path, const Connection& c, int cap) {
	std::vector<RatMat> orders = picard_orders(path, c, cap);
	RatMat out(c.N());
	for (const auto& m : orders)
		out += m;
	return out;
}

}
