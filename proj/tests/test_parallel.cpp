#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/sampling.hpp"

using namespace pathalg;

TEST_CASE("parallel polynomial product matches the serial kernel") {
	Sampler smp(101);
	for (int t = 0; t < 12; ++t) {
		int n = smp.uniform(2, 4), cap = smp.uniform(4, 8);
		MPoly a = smp.mpoly(n, cap, 3, 24), b = smp.mpoly(n, cap, 3, 24);
		MPoly s = MPoly::mul_serial(a, b);
		CHECK(s == MPoly::mul_parallel(a, b));
		CHECK(s == a * b);
	}
	// Degenerate shapes.
	MPoly z(2, 4), one = MPoly::constant(2, 4, Rat(1));
	CHECK(MPoly::mul_parallel(z, one).is_zero());
	CHECK(MPoly::mul_parallel(one, one) == one);
}

TEST_CASE("parallel Chen concatenation matches the serial kernel") {
	Sampler smp(103);
	for (int t = 0; t < 8; ++t) {
		int n = smp.uniform(2, 3), cap = smp.uniform(3, 6);
		PLPath p = smp.path(n, 2, 2), q = smp.path(n, 2, 2);
		auto a = chen_series(p, cap).integrals();
		auto b = chen_series(q, cap).integrals();
		CHECK(concat_integrals(a, b, n, cap) ==
		      concat_integrals_serial(a, b, n, cap));
	}
	IntMap empty{{Word{}, Rat(1)}};
	CHECK(concat_integrals(empty, empty, 2, 3) == empty);
}

TEST_CASE("parallel jet fan-out matches the serial computation") {
	Sampler smp(107);
	for (int t = 0; t < 6; ++t) {
		int n = smp.uniform(2, 3);
		Connection c = smp.connection(n, 2, 4, 2, 2);
		CHECK(jets(c, 5) == jets_serial(c, 5));
	}
}
