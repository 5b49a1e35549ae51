#include "pathalg/sampling.hpp"

#include "pathalg/errors.hpp"
#include "pathalg/freelie.hpp"

namespace pathalg {

int Sampler::uniform(int lo, int hi) {
	if (hi < lo)
		throw domain_error("sampler: empty range");
	return lo + (int)(next() % (std::uint64_t)(hi - lo + 1));
}

Rat Sampler::rat(int max_abs_num, int max_den) {
	long long num = uniform(-max_abs_num, max_abs_num);
	long long den = uniform(1, max_den);
	return Rat(num, den);
}

MPoly Sampler::mpoly(int n, int cap, int max_deg, int terms) {
	MPoly p(n, cap);
	for (int t = 0; t < terms; ++t) {
		int deg = uniform(0, max_deg);
		Expo e((std::size_t)n, 0);
		for (int k = 0; k < deg; ++k)
			++e[(std::size_t)uniform(0, n - 1)];
		Rat c = rat(4, 3);
		if (c.is_zero())
			c = Rat(1);
		p.add_term(e, c);
	}
	return p;
}

Word Sampler::word(int n, int len) {
	Word w((std::size_t)len);
	for (auto& l : w)
		l = uniform(1, n);
	return w;
}

Word Sampler::lyndon(int n, int deg) {
	auto basis = lyndon_words(n, deg);
	return basis[(std::size_t)uniform(0, (int)basis.size() - 1)];
}

NCOp Sampler::ncop(const AnchorFrame& fr, int max_len, int coeff_deg, int terms) {
	NCOp p(fr);
	for (int t = 0; t < terms; ++t) {
		Word w = word(fr.n(), uniform(0, max_len));
		p.add_term(w, mpoly(fr.n(), fr.cap(), coeff_deg, 2));
	}
	return p;
}

PElem Sampler::pelem(int n, int cap, int min_hall, int max_hall, int coeff_deg,
                     int terms) {
	PElem x(n, cap);
	for (int t = 0; t < terms; ++t) {
		Word h = lyndon(n, uniform(min_hall, max_hall));
		x.add_term(h, mpoly(n, cap, coeff_deg, 2));
	}
	return x;
}

RatMat Sampler::ratmat(int N, int max_abs) {
	RatMat m(N);
	for (int r = 0; r < N; ++r)
		for (int c = 0; c < N; ++c)
			m.at(r, c) = Rat(uniform(-max_abs, max_abs));
	return m;
}

MatPoly Sampler::matpoly(int N, int n, int cap, int max_deg, int terms_per_entry) {
	MatPoly m(N, n, cap);
	for (int r = 0; r < N; ++r)
		for (int c = 0; c < N; ++c)
			m.at(r, c) = mpoly(n, cap, max_deg, terms_per_entry);
	return m;
}

MatPoly Sampler::strict_upper(int N, int n, int cap, int max_deg, int terms_per_entry) {
	MatPoly m(N, n, cap);
	for (int r = 0; r < N; ++r)
		for (int c = r + 1; c < N; ++c)
			m.at(r, c) = mpoly(n, cap, max_deg, terms_per_entry);
	return m;
}

Connection Sampler::connection(int n, int N, int cap, int max_deg, int terms_per_entry) {
	Connection c(n, N, cap);
	for (int i = 1; i <= n; ++i)
		c.set_A(i, matpoly(N, n, cap, max_deg, terms_per_entry));
	return c;
}

Connection Sampler::strict_upper_connection(int n, int N, int cap, int max_deg,
                                            int terms_per_entry) {
	Connection c(n, N, cap);
	for (int i = 1; i <= n; ++i)
		c.set_A(i, strict_upper(N, n, cap, max_deg, terms_per_entry));
	return c;
}

GaugeTransform Sampler::restricted_gauge(int n, int N, int cap, int max_deg,
                                         int terms_per_entry) {
	MatPoly g = MatPoly::identity(N, n, cap);
	for (int r = 0; r < N; ++r)
		for (int c = 0; c < N; ++c) {
			// Degree >= 1 perturbation keeps g(0) = I.
			MPoly p = mpoly(n, cap, max_deg, terms_per_entry);
			p -= MPoly::constant(n, cap, p.constant_term());
			g.at(r, c) += p;
		}
	return GaugeTransform(g, true);
}

PLPath Sampler::path(int n, int segments, int coord_range) {
	std::vector<std::vector<Rat>> pts;
	for (int s = 0; s <= segments; ++s) {
		std::vector<Rat> p((std::size_t)n);
		for (auto& c : p)
			c = Rat(uniform(-coord_range, coord_range), uniform(1, 2));
		pts.push_back(std::move(p));
	}
	return PLPath(n, std::move(pts));
}

OpExprPtr Sampler::expr(int n, int var_budget, int depth) {
	if (depth <= 0) {
		switch (uniform(0, 2)) {
		case 0:
			return OpExpr::konst(rat(3, 2));
		case 1:
			if (var_budget >= 1)
				return OpExpr::var(uniform(1, n));
			[[fallthrough]];
		default:
			return OpExpr::gen(uniform(1, n));
		}
	}
	switch (uniform(0, 6)) {
	case 0: {
		int bl = uniform(0, var_budget);
		return OpExpr::add(expr(n, bl, depth - 1), expr(n, var_budget - bl, depth - 1));
	}
	case 1: {
		int bl = uniform(0, var_budget);
		return OpExpr::sub(expr(n, bl, depth - 1), expr(n, var_budget - bl, depth - 1));
	}
	case 2: {
		int bl = uniform(0, var_budget);
		return OpExpr::mul(expr(n, bl, depth - 1), expr(n, var_budget - bl, depth - 1));
	}
	case 3: {
		int bl = uniform(0, var_budget);
		return OpExpr::comm(expr(n, bl, depth - 1), expr(n, var_budget - bl, depth - 1));
	}
	case 4: {
		unsigned k = (unsigned)uniform(2, 3);
		return OpExpr::pow(expr(n, var_budget / (int)k, depth - 1), k);
	}
	case 5:
		return OpExpr::neg(expr(n, var_budget, depth - 1));
	default:
		return expr(n, var_budget, 0);
	}
}

}
