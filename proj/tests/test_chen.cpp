#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathalg/chen.hpp"
#include "pathalg/sampling.hpp"

using namespace pathalg;

namespace {

std::vector<Rat> pt(long long a, long long b) { return {Rat(a), Rat(b)}; }

// Counterclockwise unit square loop based at the origin.
PLPath square() {
	return PLPath(2, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1), pt(0, 0)});
}

}

TEST_CASE("segment integrals are the exponential of the displacement") {
	auto I = seg_integrals({Rat(2), Rat(-3)}, 3);
	CHECK(I.at({}) == Rat(1));
	CHECK(I.at({1}) == Rat(2));
	CHECK(I.at({2}) == Rat(-3));
	CHECK(I.at({1, 1}) == Rat(2));        // 2^2/2!
	CHECK(I.at({1, 2}) == Rat(-3));       // 2*(-3)/2!
	CHECK(I.at({2, 1}) == Rat(-3));
	CHECK(I.at({1, 1, 1}) == Rat(4, 3));  // 2^3/3!
	CHECK(I.at({1, 2, 1}) == Rat(-2));    // 2*(-3)*2/3!
	// Words are cut at the cap.
	for (const auto& [w, c] : I)
		CHECK(w.size() <= 3);
}

TEST_CASE("concatenation is deconcatenation convolution") {
	auto a = seg_integrals({Rat(1), Rat(0)}, 4);
	auto b = seg_integrals({Rat(0), Rat(1)}, 4);
	auto ab = concat_integrals(a, b, 2, 4);
	CHECK(ab == concat_integrals_serial(a, b, 2, 4));
	// Two segments of one straight line concatenate to the full segment.
	auto h1 = seg_integrals({Rat(1, 2), Rat(3, 2)}, 4);
	auto h2 = seg_integrals({Rat(1, 2), Rat(3, 2)}, 4);
	CHECK(concat_integrals(h1, h2, 2, 4) == seg_integrals({Rat(1), Rat(3)}, 4));
}

TEST_CASE("square loop iterated integrals") {
	ChenSeries e = chen_series(square(), 4);
	CHECK(e.target() == pt(0, 0));
	// Closed loop: degree-1 integrals vanish.
	CHECK(e.coeff({1}) == Rat(0));
	CHECK(e.coeff({2}) == Rat(0));
	// Signed area terms (reversed-path convention).
	CHECK(e.coeff({1, 2}) == Rat(-1));
	CHECK(e.coeff({2, 1}) == Rat(1));
	CHECK(e.coeff({1, 1, 2}) == Rat(-1, 2));
	CHECK(e.coeff({1, 2, 1}) == Rat(1));
	CHECK(e.coeff({2, 1, 1}) == Rat(-1, 2));
	CHECK(e.coeff({1, 1, 2, 2}) == Rat(1, 4));
	CHECK(e.coeff({}) == Rat(1));
	CHECK(grouplike_check(e));
}

TEST_CASE("shuffle identity fails for a corrupted series") {
	ChenSeries e = chen_series(square(), 4);
	e.set_coeff({1, 2}, Rat(5));  // breaks I_1 I_2 = I_12 + I_21
	CHECK(!grouplike_check(e));
}

TEST_CASE("invariance under subdivision and backtracking") {
	PLPath p(2, {pt(0, 0), pt(2, 1), pt(1, 3)});
	ChenSeries e = chen_series(p, 4);
	// Insert the midpoint of the first segment.
	PLPath sub(2, {pt(0, 0), {Rat(1), Rat(1, 2)}, pt(2, 1), pt(1, 3)});
	CHECK(chen_series(sub, 4) == e);
	// Out-and-back spur contributes nothing.
	PLPath spur(2, {pt(0, 0), pt(2, 1), pt(5, 5), pt(2, 1), pt(1, 3)});
	CHECK(chen_series(spur, 4) == e);
	// Degenerate points contribute nothing.
	PLPath dup(2, {pt(0, 0), pt(0, 0), pt(2, 1), pt(1, 3), pt(1, 3)});
	CHECK(chen_series(dup, 4) == e);
}

TEST_CASE("source map evaluates functions at the start point") {
	PLPath p(2, {{Rat(1, 2), Rat(-1)}, {Rat(0), Rat(1)}, {Rat(2), Rat(1, 3)}});
	ChenSeries e = chen_series(p, 4);
	CHECK(e.target() == std::vector<Rat>{Rat(2), Rat(1, 3)});
	// a = x1^3 x2 - 2 x1 x2^2 + 7/3 x2 - 1, degree 4 <= cap.
	MPoly a(2, 4);
	a.add_term({3, 1}, Rat(1));
	a.add_term({1, 2}, Rat(-2));
	a.add_term({0, 1}, Rat(7, 3));
	a.add_term({0, 0}, Rat(-1));
	CHECK(source_eval(e, a) == Rat(-107, 24));
	CHECK(source_eval(e, a) == a.eval(p.start()));
	// Coordinates recover the start point itself.
	CHECK(source_eval(e, MPoly::var(2, 4, 1)) == Rat(1, 2));
	CHECK(source_eval(e, MPoly::var(2, 4, 2)) == Rat(-1));
}

TEST_CASE("composition follows the concatenated path") {
	Sampler smp(61);
	for (int t = 0; t < 10; ++t) {
		PLPath p = smp.path(2, 3, 2);
		ChenSeries whole = chen_series(p, 4);
		PLPath head(2, std::vector<std::vector<Rat>>(p.points.begin(),
		                                             p.points.begin() + 2));
		PLPath tail(2, std::vector<std::vector<Rat>>(p.points.begin() + 1,
		                                             p.points.end()));
		CHECK(compose(chen_series(tail, 4), chen_series(head, 4)) == whole);
	}
	// Endpoint mismatch is a domain error.
	ChenSeries a = chen_series(PLPath(2, {pt(0, 0), pt(1, 0)}), 3);
	ChenSeries b = chen_series(PLPath(2, {pt(3, 3), pt(4, 4)}), 3);
	CHECK_THROWS_AS(compose(b, a), domain_error);
}

TEST_CASE("transport of the frozen strictly upper connection") {
	// A_1 = [[0, 1+2x1, x2], [0, 0, 3x1-x2], [0,0,0]],
	// A_2 = [[0, x1x2, 2], [0, 0, 1+x1], [0,0,0]] along (0,0)->(1,0)->(1,1).
	const int n = 2, N = 3, cap = 6;
	auto x = [&](int i) { return MPoly::var(n, cap, i); };
	auto k = [&](long long v) { return MPoly::constant(n, cap, Rat(v)); };
	Connection c(n, N, cap);
	MatPoly a1(N, n, cap), a2(N, n, cap);
	a1.at(0, 1) = k(1) + x(1).scaled(Rat(2));
	a1.at(0, 2) = x(2);
	a1.at(1, 2) = x(1).scaled(Rat(3)) - x(2);
	a2.at(0, 1) = x(1) * x(2);
	a2.at(0, 2) = k(2);
	a2.at(1, 2) = k(1) + x(1);
	c.set_A(1, a1);
	c.set_A(2, a2);
	PLPath p(n, {pt(0, 0), pt(1, 0), pt(1, 1)});
	ChenSeries e = chen_series(p, cap);
	RatMat u = transport(e, c);
	RatMat expect = RatMat::identity(N);
	expect.at(0, 1) = Rat(5, 2);
	expect.at(0, 2) = Rat(14, 3);
	expect.at(1, 2) = Rat(7, 2);
	CHECK(u == expect);
	CHECK(picard_transport(p, c, cap) == expect);
}

TEST_CASE("single constant segment transports by the exponential") {
	const int n = 2, N = 3, cap = 4;
	Sampler smp(67);
	for (int t = 0; t < 8; ++t) {
		Connection c(n, N, cap);
		std::vector<RatMat> gen;
		for (int i = 1; i <= n; ++i) {
			MatPoly a = smp.strict_upper(N, n, cap, 0, 1);
			c.set_A(i, a);
			gen.push_back(a.eval_zero());
		}
		std::vector<Rat> v = {smp.rat(2, 2), smp.rat(2, 2)};
		PLPath p(n, {pt(0, 0), v});
		// exp(sum v_i A_i): nilpotent, so the series stops at N terms.
		RatMat s(N);
		for (int i = 0; i < n; ++i)
			s += gen[(std::size_t)i].scaled(v[(std::size_t)i]);
		RatMat expect = RatMat::identity(N), power = RatMat::identity(N);
		Rat fact(1);
		for (int k = 1; k < N; ++k) {
			power = power * s;
			fact *= Rat(k);
			expect += power.scaled(Rat(1) / fact);
		}
		CHECK(transport(chen_series(p, cap), c) == expect);
	}
}

TEST_CASE("transport reverses concatenation order") {
	const int n = 2, N = 3, cap = 6;
	Sampler smp(71);
	for (int t = 0; t < 6; ++t) {
		Connection c = smp.strict_upper_connection(n, N, cap, 1, 2);
		PLPath p = smp.path(n, 2, 1);
		PLPath head(n, std::vector<std::vector<Rat>>(p.points.begin(),
		                                             p.points.begin() + 2));
		PLPath tail(n, std::vector<std::vector<Rat>>(p.points.begin() + 1,
		                                             p.points.end()));
		RatMat whole = transport(chen_series(p, cap), c);
		RatMat u1 = transport(chen_series(head, cap), c);
		RatMat u2 = transport(chen_series(tail, cap), c);
		CHECK(whole == u2 * u1);
		CHECK(picard_transport(p, c, cap) == whole);
	}
}

TEST_CASE("picard orders are graded by the number of connection factors") {
	const int n = 2, N = 3, cap = 5;
	Sampler smp(73);
	Connection c = smp.strict_upper_connection(n, N, cap, 1, 2);
	PLPath p = smp.path(n, 2, 1);
	auto orders = picard_orders(p, c, cap);
	REQUIRE((int)orders.size() == cap + 1);
	CHECK(orders[0] == RatMat::identity(N));
	RatMat total(N);
	for (const auto& m : orders)
		total += m;
	CHECK(total == picard_transport(p, c, cap));
	// Strictly upper triangular: orders beyond N-1 factors vanish.
	for (std::size_t j = N; j < orders.size(); ++j)
		CHECK(orders[j].is_zero());
}
