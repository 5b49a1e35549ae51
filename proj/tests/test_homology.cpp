#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pathalg/freelie.hpp"
#include "pathalg/homology.hpp"

using namespace pathalg;

TEST_CASE("generator sequences, frozen low-degree lists") {
	CHECK(generators(2, 2) == std::vector<Word>{{1, 2}});
	CHECK(generators(2, 3) == std::vector<Word>{{1, 1, 2}, {2, 1, 2}});
	CHECK(generators(2, 4) ==
	      std::vector<Word>{{1, 1, 1, 2}, {2, 1, 1, 2}, {2, 2, 1, 2}});
	CHECK(generators(2, 5) == std::vector<Word>{{1, 1, 1, 1, 2},
	                                            {2, 1, 1, 1, 2},
	                                            {2, 2, 1, 1, 2},
	                                            {2, 2, 2, 1, 2}});
	CHECK(generators(3, 2) == std::vector<Word>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("generator counts equal hook Schur dimensions") {
	long long g2[] = {1, 2, 3, 4, 5, 6};
	long long g3[] = {3, 8, 15, 24, 35, 48};
	long long g4[] = {6, 20, 45, 84, 140, 216};
	for (int d = 2; d <= 7; ++d) {
		CHECK((long long)generators(2, d).size() == g2[d - 2]);
		CHECK((long long)generators(3, d).size() == g3[d - 2]);
		CHECK((long long)generators(4, d).size() == g4[d - 2]);
		CHECK(schur_dim(2, d) == g2[d - 2]);
		CHECK(schur_dim(3, d) == g3[d - 2]);
		CHECK(schur_dim(4, d) == g4[d - 2]);
	}
}

TEST_CASE("generator brackets are Lie elements of the right degree") {
	// [D1, D2] = 12 - 21.
	auto b = generator_bracket({1, 2});
	REQUIRE(b.size() == 2);
	CHECK(b.at({1, 2}) == Rat(1));
	CHECK(b.at({2, 1}) == Rat(-1));
	// [D2, [D1, D2]] = 212 - 221 - 122 + 212.
	auto b3 = generator_bracket({2, 1, 2});
	CHECK(b3.at({2, 1, 2}) == Rat(2));
	CHECK(b3.at({2, 2, 1}) == Rat(-1));
	CHECK(b3.at({1, 2, 2}) == Rat(-1));
	for (int d = 2; d <= 5; ++d)
		for (const auto& s : generators(2, d)) {
			auto nf = lie_normal_form(generator_bracket(s));
			long long deg = 0;
			for (const auto& [w, c] : nf) {
				CHECK(w.size() == (std::size_t)d);
				(void)c;
				++deg;
			}
			CHECK(deg > 0);
		}
}

TEST_CASE("generator images are a basis modulo commutators") {
	for (int n = 2; n <= 3; ++n)
		for (int d = 2; d <= 6; ++d)
			CHECK(h1_basis_check(n, d));
}

TEST_CASE("graded freeness of the positive part") {
	auto rows2 = freeness_dims(2, 7);
	REQUIRE(rows2.size() == 6);  // d = 2..7
	long long fl2[] = {1, 2, 3, 6, 9, 18};
	for (std::size_t k = 0; k < rows2.size(); ++k) {
		const auto& r = rows2[k];
		CHECK(r.d == (int)k + 2);
		CHECK(r.gen_count == r.schur);
		CHECK(r.fl_dim == r.free_graded_dim);
		CHECK(r.fl_dim == fl2[k]);
	}
	auto rows3 = freeness_dims(3, 7);
	long long fl3[] = {3, 8, 18, 48, 116, 312};
	REQUIRE(rows3.size() == 6);
	for (std::size_t k = 0; k < rows3.size(); ++k) {
		CHECK(rows3[k].fl_dim == fl3[k]);
		CHECK(rows3[k].fl_dim == rows3[k].free_graded_dim);
	}
}
