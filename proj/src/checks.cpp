#include "pathalg/checks.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/errors.hpp"
#include "pathalg/freelie.hpp"
#include "pathalg/homology.hpp"
#include "pathalg/matpoly.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/ncop.hpp"
#include "pathalg/opexpr.hpp"
#include "pathalg/palg.hpp"
#include "pathalg/sampling.hpp"

namespace pathalg {

namespace {

struct Ctx {
	CheckResult r;

	explicit Ctx(const char* name) { r.name = name; }

	void require(bool cond, const std::string& what) {
		++r.checks;
		if (!cond && r.pass) {
			r.pass = false;
			r.detail = what;
		}
	}
};

std::string at_sample(const char* law, int k) {
	return std::string(law) + " (sample " + std::to_string(k) + ")";
}

int clamp_int(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

// Random anchor frame with coefficient degree <= 1; the rewrite D_i f ->
// f D_i + b_i(f) then never raises coefficient degree, so the exactness
// budgets below hold for anchored frames exactly as for the coordinate one.
AnchorFrame linear_frame(Sampler& smp, int n, int cap) {
	std::vector<VectorField> anchors;
	for (int i = 0; i < n; ++i) {
		VectorField v;
		for (int j = 0; j < n; ++j)
			v.comp.push_back(smp.mpoly(n, cap, 1, 2));
		anchors.push_back(std::move(v));
	}
	return AnchorFrame::from_anchors(n, cap, std::move(anchors));
}

// ---------------------------------------------------------------- hall --

CheckResult check_hall(const CheckConfig&) {
	Ctx c("hall");
	for (int n = 2; n <= 4; ++n) {
		for (int d = 1; d <= 8; ++d) {
			auto basis = lyndon_words(n, d);
			c.require((long long)basis.size() == witt_dim(n, d),
			          "basis count != witt dimension at n=" + std::to_string(n) +
			              " d=" + std::to_string(d));
			bool sorted = true, lyndon = true, split = true;
			for (std::size_t k = 0; k < basis.size(); ++k) {
				if (k > 0 && !lex_less(basis[k - 1], basis[k]))
					sorted = false;
				if (!is_lyndon(basis[k]))
					lyndon = false;
				if (d >= 2) {
					auto [u, v] = standard_factorization(basis[k]);
					if (word_cat(u, v) != basis[k] || !is_lyndon(u) || !is_lyndon(v) ||
					    !lex_less(u, v))
						split = false;
				}
			}
			c.require(sorted, "basis not strictly lex-sorted");
			c.require(lyndon, "non-Lyndon word in basis");
			c.require(split, "standard factorization violated");
			// Triangularity + round trip on the ranges that stay cheap.
			if (d <= (n == 4 ? 5 : 6)) {
				for (auto& w : basis) {
					auto exp = expand_to_words(w);
					bool tri = !exp.empty() && exp.begin()->first == w &&
					           exp.begin()->second == Rat(1);
					for (auto& [word, coef] : exp)
						if (word != w && !lex_less(w, word))
							tri = false;
					c.require(tri, "expansion not lex-triangular");
					auto back = lie_normal_form<Rat>(std::move(exp));
					c.require(back.size() == 1 && back.begin()->first == w &&
					              back.begin()->second == Rat(1),
					          "normal form round trip failed");
				}
			}
		}
	}
	return c.r;
}

// ---------------------------------------------------------------- dalg --

CheckResult check_dalg(const CheckConfig& cfg) {
	Ctx c("dalg");
	const int n = clamp_int(cfg.n, 1, 3);
	const int cap = std::max(cfg.cap, 3);
	const int samples = cfg.samples > 0 ? cfg.samples : 100;
	Sampler smp(cfg.seed);
	for (int k = 0; k < samples; ++k) {
		AnchorFrame fr = (k % 2 == 0) ? AnchorFrame::coordinate(n, cap)
		                              : linear_frame(smp, n, cap);
		// Coefficient degrees summing to <= cap keep every intermediate
		// polynomial inside the exact truncation window.
		int budget = cap;
		auto take = [&](int mx) {
			int d = smp.uniform(0, std::min(mx, budget));
			budget -= d;
			return d;
		};
		NCOp u = smp.ncop(fr, 2, take(2), 2);
		NCOp v = smp.ncop(fr, 2, take(2), 2);
		NCOp w = smp.ncop(fr, 2, take(2), 2);

		c.require(nc_mul(nc_mul(u, v), w) == nc_mul(u, nc_mul(v, w)),
		          at_sample("associativity", k));
		NCOp jac = nc_comm(nc_comm(u, v), w);
		jac += nc_comm(nc_comm(v, w), u);
		jac += nc_comm(nc_comm(w, u), v);
		c.require(jac.is_zero(), at_sample("jacobi", k));
		c.require(counit(nc_mul(u, v)) ==
		              counit(nc_mul(u, NCOp::from_mpoly(fr, counit(v)))),
		          at_sample("twisted counit", k));
		NCOp uv = nc_mul(u, v);
		if (!u.is_zero() && !v.is_zero() && !uv.is_zero())
			c.require(uv.op_deg() <= u.op_deg() + v.op_deg(),
			          at_sample("degree filtration", k));
	}
	return c.r;
}

// ---------------------------------------------------------- confluence --

CheckResult check_confluence(const CheckConfig& cfg) {
	Ctx c("confluence");
	const int n = clamp_int(cfg.n, 1, 4);
	const int cap = std::max(cfg.cap, 2);
	const int samples = cfg.samples > 0 ? cfg.samples : 100;
	Sampler smp(cfg.seed);
	for (int k = 0; k < samples; ++k) {
		AnchorFrame fr = (k % 4 == 3) ? linear_frame(smp, n, cap)
		                              : AnchorFrame::coordinate(n, cap);
		OpExprPtr e = smp.expr(n, cap, 4);
		NCOp a = nc_normalize(e, fr, NormalizeStrategy::BottomUpLeft);
		NCOp b = nc_normalize(e, fr, NormalizeStrategy::ExpandRightmost);
		c.require(a == b, at_sample("strategy agreement", k));
	}
	return c.r;
}

// ----------------------------------------------------------- bialgebra --

using Triple = std::array<Word, 3>;

struct TripleLess {
	bool operator()(const Triple& a, const Triple& b) const {
		LenLexLess less;
		for (int i = 0; i < 3; ++i)
			if (a[i] != b[i])
				return less(a[i], b[i]);
		return false;
	}
};

using TripleMap = std::map<Triple, MPoly, TripleLess>;

void add3(TripleMap& m, Triple key, const MPoly& f) {
	auto it = m.find(key);
	if (it == m.end()) {
		m.emplace(std::move(key), f);
		return;
	}
	it->second += f;
	if (it->second.is_zero())
		m.erase(it);
}

bool coassociative(const NCOp& p) {
	TensorOp t = coproduct(p);
	TripleMap left, right;
	for (auto& [uv, f] : t.terms()) {
		for (auto& [a, b] : word_unshuffles(uv.first))
			add3(left, {a, b, uv.second}, f);
		for (auto& [b, d] : word_unshuffles(uv.second))
			add3(right, {uv.first, b, d}, f);
	}
	return left == right;
}

bool counit_laws(const NCOp& p) {
	TensorOp t = coproduct(p);
	NCOp left(p.frame()), right(p.frame());
	for (auto& [uv, f] : t.terms()) {
		if (uv.first.empty())
			left.add_term(uv.second, f);
		if (uv.second.empty())
			right.add_term(uv.first, f);
	}
	return left == p && right == p;
}

CheckResult check_bialgebra(const CheckConfig& cfg) {
	Ctx c("bialgebra");
	const int n = clamp_int(cfg.n, 1, 3);
	const int cap = std::max(cfg.cap, 3);
	const int samples = cfg.samples > 0 ? cfg.samples : 50;
	Sampler smp(cfg.seed);
	AnchorFrame coord = AnchorFrame::coordinate(n, cap);

	// Every word monomial of length <= 4.
	std::vector<Word> words{Word{}};
	for (std::size_t k = 0; k < words.size(); ++k) {
		if ((int)words[k].size() >= 4)
			continue;
		for (int l = 1; l <= n; ++l)
			words.push_back(word_cat(words[k], Word{l}));
	}
	for (auto& w : words) {
		NCOp p = NCOp::from_word(coord, w);
		std::string tag = "word " + word_str(w, n);
		c.require(coassociative(p), "coassociativity at " + tag);
		c.require(counit_laws(p), "counit laws at " + tag);
		c.require(takeuchi_check(coproduct(p), 3), "takeuchi at " + tag);
	}

	for (int k = 0; k < samples; ++k) {
		AnchorFrame fr = (k % 3 == 2) ? linear_frame(smp, n, cap) : coord;
		int cp = smp.uniform(0, std::min(2, cap));
		int cq = smp.uniform(0, std::min(2, cap - cp));
		NCOp p = smp.ncop(fr, 2, cp, 2);
		NCOp q = smp.ncop(fr, 2, cq, 2);
		c.require(coproduct(nc_mul(p, q)) == tensor_mul(coproduct(p), coproduct(q)),
		          at_sample("coproduct multiplicativity", k));
		c.require(coassociative(p), at_sample("coassociativity", k));
		c.require(counit_laws(p), at_sample("counit laws", k));
		c.require(takeuchi_check(coproduct(p), 3), at_sample("takeuchi", k));
	}
	return c.r;
}

// ----------------------------------------------------------- algebroid --

CheckResult check_algebroid(const CheckConfig& cfg) {
	Ctx c("algebroid");
	const int n = clamp_int(cfg.n, 2, 3);
	const int cap = std::max(cfg.cap, 3);
	const int samples = cfg.samples > 0 ? cfg.samples : 100;
	Sampler smp(cfg.seed);
	for (int k = 0; k < samples; ++k) {
		int budget = cap;
		auto take = [&](int mx) {
			int d = smp.uniform(0, std::min(mx, budget));
			budget -= d;
			return d;
		};
		PElem x = smp.pelem(n, cap, 1, 2, take(1), 2);
		PElem y = smp.pelem(n, cap, 1, 2, take(1), 2);
		MPoly f = smp.mpoly(n, cap, take(2), 2);

		PElem lhs = p_bracket(x, y.scaled(f));
		PElem rhs = p_bracket(x, y).scaled(f) + y.scaled(vf_apply(anchor(x), f));
		c.require(lhs == rhs, at_sample("rinehart identity", k));
		c.require(anchor(p_bracket(x, y)) == vf_bracket(anchor(x), anchor(y)),
		          at_sample("anchor compatibility", k));
		c.require(nc_to_p(p_to_nc(x)) == x, at_sample("hall round trip", k));

		if (k % 2 == 0) {
			// Grading: [P_p, P_q] subset P_{p+q} for p, q >= 2; for p = 1
			// the bracket lands in P_q + P_{q+1}.
			int p = smp.uniform(2, 3), q = smp.uniform(2, 3);
			PElem xp = smp.pelem(n, cap, p, p, 1, 2);
			PElem yq = smp.pelem(n, cap, q, q, 1, 2);
			bool graded = true;
			PElem bpq = p_bracket(xp, yq);
			for (auto& [h, g] : bpq.terms())
				if ((int)h.size() != p + q)
					graded = false;
			c.require(graded, at_sample("grading p,q>=2", k));
			PElem x1 = smp.pelem(n, cap, 1, 1, 1, 2);
			bool mixed = true;
			PElem b1q = p_bracket(x1, yq);
			for (auto& [h, g] : b1q.terms())
				if ((int)h.size() != q && (int)h.size() != q + 1)
					mixed = false;
			c.require(mixed, at_sample("grading p=1", k));
		}
		if (k % 4 == 0) {
			PElem z = smp.pelem(n, cap, 1, 3, 0, 2);
			PElem jac = p_bracket(p_bracket(x, y), z);
			jac += p_bracket(p_bracket(y, z), x);
			jac += p_bracket(p_bracket(z, x), y);
			c.require(jac.is_zero(), at_sample("jacobi", k));
		}
	}
	return c.r;
}

// ----------------------------------------------------------- curvature --

CheckResult check_curvature(const CheckConfig& cfg) {
	Ctx c("curvature");
	const int n = std::max(cfg.n, 3);
	const int N = 2;
	const int deg_a = 3;
	const int cap = std::max(cfg.cap, 2 * deg_a);  // bianchi exact window
	const int samples = cfg.samples > 0 ? cfg.samples : 50;
	Sampler smp(cfg.seed);
	for (int k = 0; k < samples; ++k) {
		Connection conn = smp.connection(n, N, cap, deg_a, 2);
		c.require(bianchi_check(conn), at_sample("bianchi identity", k));

		int i = smp.uniform(1, n), j = smp.uniform(1, n);
		if (i == j)
			c.require(curvature(conn, i, j).is_zero(), at_sample("F_ii = 0", k));
		else
			c.require(curvature(conn, i, j) == -curvature(conn, j, i),
			          at_sample("curvature antisymmetry", k));

		Bivector b{n, cap, {}};
		for (int a = 1; a <= n; ++a)
			for (int d = a + 1; d <= n; ++d)
				b.add(a, d, smp.mpoly(n, cap, 2, 2));
		MatPoly want(N, n, cap);
		for (auto& [ij, g] : b.comp)
			want += curvature(conn, ij.first, ij.second).scaled(g);
		MatDiffOp expect(n, N, cap);
		if (!want.is_zero())
			expect.add_term(Expo(n, 0), want);
		c.require(holonomy_eval(c_map(b), conn) == expect,
		          at_sample("holonomy of c-map equals curvature", k));
	}
	return c.r;
}

// -------------------------------------------------------------- taylor --

CheckResult check_taylor(const CheckConfig& cfg) {
	Ctx c("taylor");
	const int n = clamp_int(cfg.n, 2, 4);
	const int N = 2;
	const int dmax = 4;
	const int cap = std::max(cfg.cap, dmax);
	const int samples = cfg.samples > 0 ? cfg.samples : 20;
	Sampler smp(cfg.seed);
	for (int k = 0; k < samples; ++k) {
		Connection conn = smp.connection(n, N, cap, 2, 2);
		JetData j = jets(conn, dmax);
		Connection rec = reconstruct(j, cap);
		c.require(jets(rec, dmax) == j, at_sample("jet round trip", k));

		MatPoly radial(N, n, cap);
		for (int i = 1; i <= n; ++i)
			radial += rec.A(i).scaled(MPoly::var(n, cap, i));
		c.require(radial.is_zero(), at_sample("reconstruction is radial", k));

		GaugeTransform g = smp.restricted_gauge(n, N, cap, 2, 2);
		c.require(jets(gauge_apply(g, conn), dmax) == j,
		          at_sample("gauge invariance of jets", k));
	}
	return c.r;
}

// ------------------------------------------------------------------ h1 --

CheckResult check_h1(const CheckConfig&) {
	Ctx c("h1");
	const long long expect2[] = {1, 2, 3, 4};
	for (int d = 2; d <= 5; ++d)
		c.require((long long)generators(2, d).size() == expect2[d - 2],
		          "generator count at n=2 d=" + std::to_string(d));
	for (int n = 2; n <= 4; ++n)
		for (int d = 2; d <= 7; ++d)
			c.require((long long)generators(n, d).size() == schur_dim(n, d),
			          "generator count vs hook tableaux at n=" + std::to_string(n) +
			              " d=" + std::to_string(d));
	for (int n = 2; n <= 3; ++n)
		for (int d = 2; d <= 6; ++d)
			c.require(h1_basis_check(n, d),
			          "generator basis of the abelianization at n=" +
			              std::to_string(n) + " d=" + std::to_string(d));
	const long long fl2[] = {1, 2, 3, 6};
	for (int n = 2; n <= 3; ++n) {
		auto rows = freeness_dims(n, 7);
		for (auto& r : rows) {
			c.require(r.fl_dim == r.free_graded_dim,
			          "graded freeness dimensions at n=" + std::to_string(n) +
			              " d=" + std::to_string(r.d));
			c.require(r.gen_count == r.schur,
			          "generator multiplicity vs hook dimension at n=" +
			              std::to_string(n) + " d=" + std::to_string(r.d));
			if (n == 2 && r.d <= 5)
				c.require(r.fl_dim == fl2[r.d - 2],
				          "frozen FL>=2 dimension at d=" + std::to_string(r.d));
		}
	}
	return c.r;
}

// ---------------------------------------------------------------- chen --

std::vector<Rat> midpoint(const std::vector<Rat>& a, const std::vector<Rat>& b) {
	std::vector<Rat> m;
	for (std::size_t i = 0; i < a.size(); ++i)
		m.push_back((a[i] + b[i]) / Rat(2));
	return m;
}

CheckResult check_chen(const CheckConfig& cfg) {
	Ctx c("chen");
	const int n = clamp_int(cfg.n, 2, 4);
	const int cap = std::max(cfg.cap, 5);
	const int samples = cfg.samples > 0 ? cfg.samples : 50;
	Sampler smp(cfg.seed);

	{
		PLPath loop(2, {{Rat(0), Rat(0)},
		                {Rat(1), Rat(0)},
		                {Rat(1), Rat(1)},
		                {Rat(0), Rat(1)},
		                {Rat(0), Rat(0)}});
		ChenSeries e = chen_series(loop, cap);
		c.require(e.coeff(Word{1}).is_zero() && e.coeff(Word{2}).is_zero(),
		          "square loop: linear coefficients vanish");
		Rat a12 = e.coeff(Word{1, 2});
		c.require(a12 + e.coeff(Word{2, 1}) == Rat(0),
		          "square loop: area antisymmetry");
		c.require(a12.abs() == Rat(1), "square loop: |area coefficient| = 1");
		c.require(grouplike_check(e), "square loop: grouplike");
	}

	for (int k = 0; k < samples; ++k) {
		PLPath p = smp.path(n, smp.uniform(1, 5), 2);
		ChenSeries e = chen_series(p, cap);
		c.require(grouplike_check(e), at_sample("grouplike", k));

		// Subdivision: splitting one segment at its midpoint is invisible.
		auto pts = p.points;
		std::size_t seg = (std::size_t)smp.uniform(0, (int)pts.size() - 2);
		pts.insert(pts.begin() + (long)seg + 1, midpoint(pts[seg], pts[seg + 1]));
		c.require(chen_series(PLPath(n, pts), cap) == e,
		          at_sample("subdivision invariance", k));

		// Backtracking: an out-and-back spur cancels.
		pts = p.points;
		std::size_t at = (std::size_t)smp.uniform(0, (int)pts.size() - 1);
		std::vector<Rat> spur;
		for (int i = 0; i < n; ++i)
			spur.push_back(smp.rat(2, 2));
		pts.insert(pts.begin() + (long)at + 1, pts[at]);
		pts.insert(pts.begin() + (long)at + 1, spur);
		c.require(chen_series(PLPath(n, pts), cap) == e,
		          at_sample("backtracking invariance", k));

		// Composition along a split reproduces the whole path.
		if (p.points.size() >= 3) {
			std::size_t cut = (std::size_t)smp.uniform(1, (int)p.points.size() - 2);
			PLPath head(n, {p.points.begin(), p.points.begin() + (long)cut + 1});
			PLPath tail(n, {p.points.begin() + (long)cut, p.points.end()});
			c.require(compose(chen_series(tail, cap), chen_series(head, cap)) == e,
			          at_sample("composition", k));
		}
	}
	return c.r;
}

// ----------------------------------------------------------- transport --

RatMat nil_exp(const RatMat& m) {
	RatMat acc = RatMat::identity(m.N());
	RatMat pw = RatMat::identity(m.N());
	Rat fact(1);
	for (int k = 1; k < m.N(); ++k) {
		pw = pw * m;
		fact *= Rat(k);
		acc += pw.scaled(Rat(1) / fact);
	}
	return acc;
}

CheckResult check_transport(const CheckConfig& cfg) {
	Ctx c("transport");
	const int n = clamp_int(cfg.n, 2, 4);
	const int N = 3;
	const int cap = std::max(cfg.cap, 5);  // >= (N-1)(deg A+1) with deg A = 1
	const int samples = cfg.samples > 0 ? cfg.samples : 20;
	Sampler smp(cfg.seed);
	for (int k = 0; k < samples; ++k) {
		// Constant strictly-upper frame: transport is a product of nilpotent
		// exponentials, later segments multiplying on the left.
		Connection cc(n, N, cap);
		std::vector<RatMat> gen;
		for (int i = 1; i <= n; ++i) {
			MatPoly a = smp.strict_upper(N, n, cap, 0, 1);
			cc.set_A(i, a);
			gen.push_back(a.eval_zero());
		}
		PLPath p = smp.path(n, smp.uniform(1, 4), 2);
		ChenSeries e = chen_series(p, cap);
		RatMat expect = RatMat::identity(N);
		for (std::size_t s = 0; s + 1 < p.points.size(); ++s) {
			RatMat m(N);
			for (int i = 1; i <= n; ++i)
				m += gen[(std::size_t)i - 1].scaled(p.points[s + 1][(std::size_t)i - 1] -
				                                    p.points[s][(std::size_t)i - 1]);
			expect = nil_exp(m) * expect;
		}
		c.require(transport(e, cc) == expect,
		          at_sample("nilpotent exponential product", k));

		// Polynomial strictly-upper frame: agree with Picard iteration.
		Connection cp = smp.strict_upper_connection(n, N, cap, 1, 2);
		PLPath p2 = smp.path(n, smp.uniform(1, 3), 1);
		ChenSeries e2 = chen_series(p2, cap);
		c.require(transport(e2, cp) == picard_transport(p2, cp, cap),
		          at_sample("picard agreement", k));

		// Source map returns the start point on coordinates.
		for (int i = 1; i <= n; ++i)
			c.require(source_eval(e, MPoly::var(n, cap, i)) ==
			              p.start()[(std::size_t)i - 1],
			          at_sample("source on coordinates", k));
		MPoly a = smp.mpoly(n, cap, 2, 3);
		c.require(source_eval(e, a) == a.eval(p.start()),
		          at_sample("source on a polynomial", k));
	}
	return c.r;
}

// -------------------------------------------------------------- symbol --

CheckResult check_symbol(const CheckConfig& cfg) {
	Ctx c("symbol");
	const int n = clamp_int(cfg.n, 1, 3);
	const int N = 2;
	const int cap = std::max(cfg.cap, 2);
	const int samples = cfg.samples > 0 ? cfg.samples : 50;
	Sampler smp(cfg.seed);
	AnchorFrame coord = AnchorFrame::coordinate(n, cap);
	for (int k = 0; k < samples; ++k) {
		NCOp p = smp.ncop(coord, 3, 2, 3);
		if (p.is_zero())
			p = NCOp::generator(coord, 1);
		const int d = p.op_deg();

		MatDiffOp expect(n, N, cap);
		for (auto& [w, f] : smbl(p, d)) {
			Expo e(n, 0);
			for (int l : w)
				++e[(std::size_t)l - 1];
			expect.add_term(e, MatPoly::identity(N, n, cap).scaled(f));
		}
		for (int variant = 0; variant < 2; ++variant) {
			Connection conn = smp.connection(n, N, cap, 2, 2);
			MatDiffOp h = holonomy_eval(p, conn);
			c.require(h.order_slice(d) == expect,
			          at_sample(variant ? "top symbol, second frame"
			                            : "top symbol", k));
		}
	}
	return c.r;
}

using SuiteFn = CheckResult (*)(const CheckConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
	static const std::vector<std::pair<std::string, SuiteFn>> table = {
	    {"hall", check_hall},         {"dalg", check_dalg},
	    {"confluence", check_confluence}, {"bialgebra", check_bialgebra},
	    {"algebroid", check_algebroid},   {"curvature", check_curvature},
	    {"taylor", check_taylor},     {"h1", check_h1},
	    {"chen", check_chen},         {"transport", check_transport},
	    {"symbol", check_symbol},
	};
	return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
	static const std::vector<std::string> names = [] {
		std::vector<std::string> v;
		for (auto& [name, fn] : suite_table())
			v.push_back(name);
		return v;
	}();
	return names;
}

CheckResult run_check(const std::string& name, const CheckConfig& cfg) {
	for (auto& [suite, fn] : suite_table())
		if (suite == name)
			return fn(cfg);
	throw domain_error("unknown check suite: " + name);
}

std::vector<CheckResult> run_checks(const std::string& name, const CheckConfig& cfg) {
	std::vector<CheckResult> out;
	if (name == "all") {
		for (auto& [suite, fn] : suite_table())
			out.push_back(fn(cfg));
		return out;
	}
	out.push_back(run_check(name, cfg));
	return out;
}

}
