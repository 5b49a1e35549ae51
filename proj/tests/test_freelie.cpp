#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pathalg/freelie.hpp"

using namespace pathalg;

namespace {

// Independent Lyndon oracle: w is strictly lex-smaller than every proper
// rotation of itself.
bool lyndon_by_rotations(const Word& w) {
	if (w.empty())
		return false;
	for (std::size_t k = 1; k < w.size(); ++k) {
		Word rot(w.begin() + (long)k, w.end());
		rot.insert(rot.end(), w.begin(), w.begin() + (long)k);
		if (!lex_less(w, rot))
			return false;
	}
	return true;
}

std::vector<Word> all_words(int n, int d) {
	std::vector<Word> out;
	Word w((std::size_t)d, 1);
	for (;;) {
		out.push_back(w);
		int i = d - 1;
		while (i >= 0 && w[(std::size_t)i] == n) {
			w[(std::size_t)i] = 1;
			--i;
		}
		if (i < 0)
			break;
		++w[(std::size_t)i];
	}
	return out;
}

LiePoly hall(const Word& w) { return LiePoly{{w, Rat(1)}}; }

// Lie bracket computed in the tensor algebra, then pulled back to Hall
// coordinates.
LiePoly tensor_bracket(const LiePoly& a, const LiePoly& b) {
	auto ea = expand_lie(a), eb = expand_lie(b);
	auto ab = word_conv(ea, eb), ba = word_conv(eb, ea);
	for (const auto& [w, c] : ba) {
		auto it = ab.find(w);
		if (it == ab.end()) {
			ab.emplace(w, -c);
		} else {
			it->second -= c;
			if (it->second.is_zero())
				ab.erase(it);
		}
	}
	return lie_normal_form(std::move(ab));
}

}

TEST_CASE("witt dimensions match the necklace counts") {
	long long w2[] = {2, 1, 2, 3, 6, 9, 18, 30};
	long long w3[] = {3, 3, 8, 18, 48, 116, 312, 810};
	long long w4[] = {4, 6, 20, 60, 204, 670, 2340, 8160};
	for (int d = 1; d <= 8; ++d) {
		CHECK(witt_dim(2, d) == w2[d - 1]);
		CHECK(witt_dim(3, d) == w3[d - 1]);
		CHECK(witt_dim(4, d) == w4[d - 1]);
	}
}

TEST_CASE("lyndon_words agrees with the rotation oracle") {
	for (int n = 2; n <= 3; ++n)
		for (int d = 1; d <= (n == 2 ? 6 : 4); ++d) {
			auto ws = lyndon_words(n, d);
			CHECK((long long)ws.size() == witt_dim(n, d));
			CHECK(std::is_sorted(ws.begin(), ws.end(),
			                     [](const Word& a, const Word& b) { return lex_less(a, b); }));
			std::vector<Word> brute;
			for (const auto& w : all_words(n, d)) {
				CHECK(is_lyndon(w) == lyndon_by_rotations(w));
				if (lyndon_by_rotations(w))
					brute.push_back(w);
			}
			CHECK(ws == brute);
		}
}

TEST_CASE("standard factorization") {
	auto [u1, v1] = standard_factorization({1, 1, 2});
	CHECK(u1 == Word{1});
	CHECK(v1 == Word{1, 2});
	auto [u2, v2] = standard_factorization({1, 2, 2});
	CHECK(u2 == Word{1, 2});
	CHECK(v2 == Word{2});
	auto [u3, v3] = standard_factorization({1, 1, 2, 1, 2});
	CHECK(u3 == Word{1, 1, 2});
	CHECK(v3 == Word{1, 2});
	// Factors of a Lyndon word are Lyndon with u < v.
	for (const auto& w : lyndon_words(3, 4)) {
		auto [u, v] = standard_factorization(w);
		CHECK(is_lyndon(u));
		CHECK(is_lyndon(v));
		CHECK(lex_less(u, v));
		CHECK(word_cat(u, v) == w);
	}
}

TEST_CASE("bracket_str") {
	CHECK(bracket_str({1}) == "1");
	CHECK(bracket_str({1, 2}) == "[1,2]");
	CHECK(bracket_str({1, 1, 2}) == "[1,[1,2]]");
	CHECK(bracket_str({1, 2, 2}) == "[[1,2],2]");
	CHECK(bracket_str({1, 1, 2, 2}) == "[1,[[1,2],2]]");
}

TEST_CASE("expand_to_words, [1,[1,2]] = 112 - 2*121 + 211") {
	auto e = expand_to_words({1, 1, 2});
	REQUIRE(e.size() == 3);
	CHECK(e.at({1, 1, 2}) == Rat(1));
	CHECK(e.at({1, 2, 1}) == Rat(-2));
	CHECK(e.at({2, 1, 1}) == Rat(1));

	// Leading (lex-smallest) word is the Lyndon word itself with coefficient 1.
	for (const auto& w : lyndon_words(2, 5)) {
		auto ex = expand_to_words(w);
		auto lead = ex.begin();
		CHECK(lead->first == w);
		CHECK(lead->second == Rat(1));
	}
}

TEST_CASE("lie_normal_form recognizes Lie elements") {
	std::map<Word, Rat, LenLexLess> comm{{{1, 2}, Rat(1)}, {{2, 1}, Rat(-1)}};
	auto nf = lie_normal_form(std::move(comm));
	REQUIRE(nf.size() == 1);
	CHECK(nf.at({1, 2}) == Rat(1));

	std::map<Word, Rat, LenLexLess> notlie{{{1, 2}, Rat(1)}};
	CHECK_THROWS_AS(lie_normal_form(std::move(notlie)), not_lie_error);

	std::map<Word, Rat, LenLexLess> mixed{{{1}, Rat(1)}, {{1, 2}, Rat(1)}};
	CHECK_THROWS_AS(lie_normal_form(std::move(mixed)), domain_error);

	// expand then normalize is the identity on every Hall basis element.
	for (int d = 1; d <= 6; ++d)
		for (const auto& w : lyndon_words(2, d)) {
			auto back = lie_normal_form(expand_to_words(w));
			REQUIRE(back.size() == 1);
			CHECK(back.begin()->first == w);
			CHECK(back.begin()->second == Rat(1));
		}
}

TEST_CASE("bracket laws via tensor-algebra round trip") {
	auto basis3 = lyndon_words(2, 3);
	auto basis2 = lyndon_words(2, 2);
	// Antisymmetry: [u,u] = 0, [u,v] = -[v,u].
	for (const auto& u : basis3) {
		CHECK(tensor_bracket(hall(u), hall(u)).empty());
		for (const auto& v : basis2) {
			auto uv = tensor_bracket(hall(u), hall(v));
			auto vu = tensor_bracket(hall(v), hall(u));
			for (auto& [w, c] : vu)
				c = -c;
			CHECK(uv == vu);
		}
	}
	// Jacobi on generators and low-degree Hall elements.
	LiePoly x = hall({1}), y = hall({2}), z = hall({1, 2});
	auto add = [](LiePoly a, const LiePoly& b) {
		for (const auto& [w, c] : b) {
			auto it = a.find(w);
			if (it == a.end()) {
				a.emplace(w, c);
			} else {
				it->second += c;
				if (it->second.is_zero())
					a.erase(it);
			}
		}
		return a;
	};
	auto jac = add(add(tensor_bracket(x, tensor_bracket(y, z)),
	                   tensor_bracket(y, tensor_bracket(z, x))),
	               tensor_bracket(z, tensor_bracket(x, y)));
	CHECK(jac.empty());
	// [1,2] in Hall coordinates is the Hall element (1,2).
	auto b12 = tensor_bracket(x, y);
	REQUIRE(b12.size() == 1);
	CHECK(b12.at({1, 2}) == Rat(1));
}
