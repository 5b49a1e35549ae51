#include "pathalg/connection.hpp"

#include <functional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathalg/errors.hpp"
#include "pathalg/homology.hpp"

namespace pathalg {

Connection::Connection(int n, int N, int cap) : n_(n), N_(N), cap_(cap) {
	if (n < 1 || N < 1 || cap < 0)
		throw dimension_error("connection: bad shape");
	A_.assign((std::size_t)n, MatPoly(N, n, cap));
}

const MatPoly& Connection::A(int i) const {
	if (i < 1 || i > n_)
		throw dimension_error("connection: index out of range");
	return A_[(std::size_t)(i - 1)];
}

void Connection::set_A(int i, const MatPoly& a) {
	if (i < 1 || i > n_)
		throw dimension_error("connection: index out of range");
	if (a.N() != N_ || a.nvars() != n_ || a.cap() != cap_)
		throw dimension_error("connection: component shape mismatch");
	A_[(std::size_t)(i - 1)] = a;
}

GaugeTransform::GaugeTransform(MatPoly g_, bool restricted_)
	: g(std::move(g_)), restricted(restricted_) {
	RatMat c0 = g.eval_zero();
	c0.inverse();  // throws singular_error when not invertible at 0
	if (restricted && c0 != RatMat::identity(g.N()))
		throw domain_error("restricted gauge must be the identity at 0");
}

GaugeTransform GaugeTransform::identity(int N, int nvars, int cap) {
	return GaugeTransform(MatPoly::identity(N, nvars, cap), true);
}

bool is_admissible_seq(const Word& s, int n) {
	if (s.size() < 2)
		return false;
	for (int c : s)
		if (c < 1 || c > n)
			return false;
	for (std::size_t k = 0; k + 2 < s.size(); ++k)
		if (s[k] < s[k + 1])
			return false;
	return s[s.size() - 2] < s[s.size() - 1];
}

MatPoly curvature(const Connection& c, int i, int j) {
	if (i < 1 || i > c.n() || j < 1 || j > c.n())
		throw dimension_error("curvature: index out of range");
	return c.A(j).partial(i) - c.A(i).partial(j) + comm(c.A(i), c.A(j));
}

MatPoly cov_deriv(const Connection& c, int i, const MatPoly& m) {
	if (i < 1 || i > c.n())
		throw dimension_error("cov_deriv: index out of range");
	if (m.N() != c.N() || m.nvars() != c.n() || m.cap() != c.cap())
		throw dimension_error("cov_deriv: shape mismatch");
	return m.partial(i) + comm(c.A(i), m);
}

RatMat jet_value(const Connection& c, const Word& seq) {
	if (!is_admissible_seq(seq, c.n()))
		throw domain_error("jet_value: inadmissible sequence");
	const std::size_t d = seq.size();
	MatPoly m = curvature(c, seq[d - 2], seq[d - 1]);
	for (std::size_t k = d - 2; k-- > 0;)
		m = cov_deriv(c, seq[k], m);
	return m.eval_zero();
}

static std::vector<Word> jet_keys(int n, int Dmax) {
	std::vector<Word> keys;
	for (int d = 2; d <= Dmax; ++d)
		for (auto& s : generators(n, d))
			keys.push_back(s);
	return keys;
}

static JetData jets_impl(const Connection& c, int Dmax, bool parallel) {
	if (Dmax < 2)
		throw domain_error("jets: Dmax must be at least 2");
	if (Dmax > c.cap() + 2)
		throw domain_error("jets: Dmax too large for cap");
	JetData j{c.n(), c.N(), Dmax, {}};
	std::vector<Word> keys = jet_keys(c.n(), Dmax);
	std::vector<RatMat> vals(keys.size());
	if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
		for (long long k = 0; k < (long long)keys.size(); ++k)
			vals[(std::size_t)k] = jet_value(c, keys[(std::size_t)k]);
	} else {
		for (std::size_t k = 0; k < keys.size(); ++k)
			vals[k] = jet_value(c, keys[k]);
	}
	for (std::size_t k = 0; k < keys.size(); ++k)
		j.values.emplace(keys[k], vals[k]);
	return j;
}

JetData jets(const Connection& c, int Dmax) { return jets_impl(c, Dmax, true); }
JetData jets_serial(const Connection& c, int Dmax) { return jets_impl(c, Dmax, false); }

MatDiffOp MatDiffOp::identity(int n, int N, int cap) {
	MatDiffOp r(n, N, cap);
	r.add_term(Expo((std::size_t)n, 0), MatPoly::identity(N, n, cap));
	return r;
}

MatPoly MatDiffOp::coeff(const Expo& e) const {
	auto it = terms_.find(e);
	return it == terms_.end() ? MatPoly(N_, n_, cap_) : it->second;
}

void MatDiffOp::add_term(const Expo& e, const MatPoly& m) {
	if ((int)e.size() != n_)
		throw dimension_error("matdiffop: exponent size mismatch");
	if (m.N() != N_ || m.nvars() != n_ || m.cap() != cap_)
		throw dimension_error("matdiffop: coefficient shape mismatch");
	if (m.is_zero())
		return;
	auto [it, fresh] = terms_.emplace(e, m);
	if (!fresh) {
		it->second += m;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

MatDiffOp MatDiffOp::operator-() const {
	MatDiffOp r(n_, N_, cap_);
	for (auto& [e, m] : terms_)
		r.terms_.emplace(e, -m);
	return r;
}

MatDiffOp& MatDiffOp::operator+=(const MatDiffOp& o) {
	if (n_ != o.n_ || N_ != o.N_ || cap_ != o.cap_)
		throw dimension_error("matdiffop: shape mismatch");
	for (auto& [e, m] : o.terms_)
		add_term(e, m);
	return *this;
}

MatDiffOp& MatDiffOp::operator-=(const MatDiffOp& o) {
	if (n_ != o.n_ || N_ != o.N_ || cap_ != o.cap_)
		throw dimension_error("matdiffop: shape mismatch");
	for (auto& [e, m] : o.terms_)
		add_term(e, -m);
	return *this;
}

MatDiffOp MatDiffOp::scaled(const MPoly& f) const {
	MatDiffOp r(n_, N_, cap_);
	for (auto& [e, m] : terms_)
		r.add_term(e, m.scaled(f));
	return r;
}

MatDiffOp MatDiffOp::order_slice(int d) const {
	MatDiffOp r(n_, N_, cap_);
	for (auto& [e, m] : terms_)
		if (expo_deg(e) == d)
			r.terms_.emplace(e, m);
	return r;
}

// Iterated partials of a matrix polynomial by a multi-index.
static MatPoly partial_pow(MatPoly m, const Expo& k) {
	for (std::size_t i = 0; i < k.size(); ++i)
		for (int rep = 0; rep < k[i]; ++rep)
			m = m.partial((int)i + 1);
	return m;
}

MatDiffOp mdo_mul(const MatDiffOp& a, const MatDiffOp& b) {
	if (a.n() != b.n() || a.N() != b.N() || a.cap() != b.cap())
		throw dimension_error("matdiffop mul: shape mismatch");
	const int n = a.n();
	MatDiffOp r(n, a.N(), a.cap());
	for (auto& [e, M] : a.terms()) {
		for (auto& [f, Nc] : b.terms()) {
			// Leibniz: M d^e (Nc d^f) = sum_{k <= e} binom(e,k) M d^k(Nc) d^{e-k+f}.
			Expo k((std::size_t)n, 0);
			for (;;) {
				Rat binom(1);
				for (int i = 0; i < n; ++i)
					for (int t = 0; t < k[(std::size_t)i]; ++t)
						binom *= Rat(e[(std::size_t)i] - t) / Rat(t + 1);
				MatPoly dN = partial_pow(Nc, k);
				if (!dN.is_zero()) {
					Expo g((std::size_t)n, 0);
					for (int i = 0; i < n; ++i)
						g[(std::size_t)i] = e[(std::size_t)i] - k[(std::size_t)i] + f[(std::size_t)i];
					r.add_term(g, (M * dN).scaled(binom));
				}
				// Odometer over 0 <= k <= e.
				int i = 0;
				while (i < n && k[(std::size_t)i] == e[(std::size_t)i])
					k[(std::size_t)i++] = 0;
				if (i == n)
					break;
				++k[(std::size_t)i];
			}
		}
	}
	return r;
}

MatDiffOp mdo_comm(const MatDiffOp& a, const MatDiffOp& b) {
	return mdo_mul(a, b) - mdo_mul(b, a);
}

MatDiffOp holonomy_eval(const NCOp& p, const Connection& c) {
	if (!p.frame().is_coordinate())
		throw domain_error("holonomy_eval: coordinate frame required");
	if (p.n() != c.n() || p.cap() != c.cap())
		throw dimension_error("holonomy_eval: shape mismatch");
	const int n = c.n();
	std::vector<MatDiffOp> nabla;
	nabla.reserve((std::size_t)n);
	for (int i = 1; i <= n; ++i) {
		MatDiffOp d(n, c.N(), c.cap());
		Expo e((std::size_t)n, 0);
		e[(std::size_t)(i - 1)] = 1;
		d.add_term(e, MatPoly::identity(c.N(), n, c.cap()));
		d.add_term(Expo((std::size_t)n, 0), c.A(i));
		nabla.push_back(std::move(d));
	}
	std::map<Word, MatDiffOp, LenLexLess> memo;
	memo.emplace(Word{}, MatDiffOp::identity(n, c.N(), c.cap()));
	// Build nabla_w right to left so shared suffixes are reused.
	std::function<const MatDiffOp&(const Word&)> get = [&](const Word& w) -> const MatDiffOp& {
		auto it = memo.find(w);
		if (it != memo.end())
			return it->second;
		Word suf(w.begin() + 1, w.end());
		MatDiffOp v = mdo_mul(nabla[(std::size_t)(w[0] - 1)], get(suf));
		return memo.emplace(w, std::move(v)).first->second;
	};
	MatDiffOp r(n, c.N(), c.cap());
	for (auto& [w, f] : p.terms())
		r += get(w).scaled(f);
	return r;
}

MatDiffOp holonomy_eval(const PElem& x, const Connection& c) {
	return holonomy_eval(p_to_nc(x), c);
}

Connection gauge_apply(const GaugeTransform& g, const Connection& c) {
	if (g.g.N() != c.N() || g.g.nvars() != c.n() || g.g.cap() != c.cap())
		throw dimension_error("gauge_apply: shape mismatch");
	MatPoly ginv = g.g.inverse();
	Connection r(c.n(), c.N(), c.cap());
	for (int i = 1; i <= c.n(); ++i)
		r.set_A(i, ginv * c.A(i) * g.g + ginv * g.g.partial(i));
	return r;
}

std::pair<Connection, GaugeTransform> radial_gauge(const Connection& c) {
	const int n = c.n(), cap = c.cap();
	// Radial condition sum_i x_i A'_i = 0 pulled back through g reads
	// E(g) = -(sum_i x_i A_i) g with E the Euler operator, so the degree-k
	// part of g is -(1/k) times the degree-k part of the right-hand side.
	MatPoly xa(c.N(), n, cap);
	for (int i = 1; i <= n; ++i)
		xa += c.A(i).scaled(MPoly::var(n, cap, i));
	MatPoly g = MatPoly::identity(c.N(), n, cap);
	for (int k = 1; k <= cap; ++k)
		g += (xa * g).degree_slice(k).scaled(Rat(-1) / Rat(k));
	GaugeTransform gt(g, true);
	return {gauge_apply(gt, c), gt};
}

// Exponent vectors of total degree exactly d, in grlex order.
static std::vector<Expo> homog_expos(int n, int d) {
	std::vector<Expo> out;
	Expo e((std::size_t)n, 0);
	std::function<void(int, int)> rec = [&](int i, int left) {
		if (i == n - 1) {
			e[(std::size_t)i] = left;
			out.push_back(e);
			return;
		}
		for (int k = 0; k <= left; ++k) {
			e[(std::size_t)i] = k;
			rec(i + 1, left - k);
		}
	};
	rec(0, d);
	return out;
}

Connection reconstruct(const JetData& j, int cap) {
	if (j.n < 1 || j.N < 1 || j.Dmax < 2)
		throw dimension_error("reconstruct: bad jet shape");
	if (j.Dmax > cap + 1)
		throw dimension_error("reconstruct: cap too small for Dmax");
	for (auto& [s, m] : j.values) {
		if (!is_admissible_seq(s, j.n) || (int)s.size() > j.Dmax)
			throw domain_error("reconstruct: inadmissible jet key");
		if (m.N() != j.N)
			throw dimension_error("reconstruct: jet matrix size mismatch");
	}
	const int n = j.n, N = j.N;
	Connection c(n, N, cap);
	for (int k = 1; k + 1 <= j.Dmax; ++k) {
		const int d = k + 1;
		std::vector<Word> seqs = generators(n, d);
		if (seqs.empty())
			continue;
		std::vector<Expo> mono_k = homog_expos(n, k);
		std::vector<Expo> mono_k1 = homog_expos(n, k + 1);
		const std::size_t nu = (std::size_t)n * mono_k.size();
		auto unknown = [&](int i, std::size_t m) { return (std::size_t)(i - 1) * mono_k.size() + m; };
		// Kernel of (a_1..a_n) -> sum_i x_i a_i on degree-k slices.
		std::vector<std::vector<Rat>> radial_rows;
		for (auto& target : mono_k1) {
			std::vector<Rat> row(nu, Rat(0));
			for (int i = 1; i <= n; ++i) {
				if (target[(std::size_t)(i - 1)] == 0)
					continue;
				Expo src = target;
				--src[(std::size_t)(i - 1)];
				for (std::size_t m = 0; m < mono_k.size(); ++m)
					if (mono_k[m] == src)
						row[unknown(i, m)] = Rat(1);
			}
			radial_rows.push_back(std::move(row));
		}
		std::vector<std::vector<Rat>> kb = kernel_basis(std::move(radial_rows), (int)nu);
		if (kb.size() != seqs.size())
			throw singular_error("reconstruct: radial parameter count mismatch");
		// Linear jet map on a radial degree-k slice (scalar-valued per entry):
		// seq -> value at 0 of d_{i1}..d_{i_{d-2}} (d_{i_{d-1}} a_{i_d} - d_{i_d} a_{i_{d-1}}).
		auto jet_of_slice = [&](const std::vector<Rat>& v, const Word& s) {
			MPoly a_last(n, cap), a_prev(n, cap);
			for (std::size_t m = 0; m < mono_k.size(); ++m) {
				a_last.add_term(mono_k[m], v[unknown(s[s.size() - 1], m)]);
				a_prev.add_term(mono_k[m], v[unknown(s[s.size() - 2], m)]);
			}
			MPoly f = a_last.partial(s[s.size() - 2]) - a_prev.partial(s[s.size() - 1]);
			for (std::size_t t = s.size() - 2; t-- > 0;)
				f = f.partial(s[t]);
			return f.constant_term();
		};
		std::vector<std::vector<Rat>> L(seqs.size(), std::vector<Rat>(kb.size()));
		for (std::size_t r = 0; r < seqs.size(); ++r)
			for (std::size_t t = 0; t < kb.size(); ++t)
				L[r][t] = jet_of_slice(kb[t], seqs[r]);
		// Right-hand side: prescribed jets minus the lower-degree tail already
		// built in (slices <= k-2 only reach length-d jets through nonlinear
		// terms, so the current partial connection accounts for all of it).
		std::vector<std::vector<Rat>> rhs((std::size_t)(N * N),
		                                  std::vector<Rat>(seqs.size(), Rat(0)));
		for (std::size_t r = 0; r < seqs.size(); ++r) {
			RatMat want(N);
			auto it = j.values.find(seqs[r]);
			if (it != j.values.end())
				want = it->second;
			RatMat have = jet_value(c, seqs[r]);
			for (int p = 0; p < N; ++p)
				for (int q = 0; q < N; ++q)
					rhs[(std::size_t)(p * N + q)][r] = want.at(p, q) - have.at(p, q);
		}
		std::vector<std::vector<Rat>> sol = solve_linear(L, rhs);
		for (int i = 1; i <= n; ++i) {
			MatPoly a = c.A(i);
			for (int p = 0; p < N; ++p)
				for (int q = 0; q < N; ++q) {
					const auto& coords = sol[(std::size_t)(p * N + q)];
					for (std::size_t m = 0; m < mono_k.size(); ++m) {
						Rat v(0);
						for (std::size_t t = 0; t < kb.size(); ++t)
							v += coords[t] * kb[t][unknown(i, m)];
						if (!v.is_zero())
							a.at(p, q).add_term(mono_k[m], v);
					}
				}
			c.set_A(i, a);
		}
	}
	return c;
}

bool bianchi_check(const Connection& c) {
	for (int i = 1; i <= c.n(); ++i)
		for (int j = i + 1; j <= c.n(); ++j)
			for (int k = j + 1; k <= c.n(); ++k) {
				MatPoly s = cov_deriv(c, i, curvature(c, j, k));
				s += cov_deriv(c, j, curvature(c, k, i));
				s += cov_deriv(c, k, curvature(c, i, j));
				if (!s.is_zero())
					return false;
			}
	return true;
}

}
