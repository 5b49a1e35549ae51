#pragma once

#include <map>
#include <string>
#include <vector>

#include "pathalg/errors.hpp"
#include "pathalg/rat.hpp"
#include "pathalg/word.hpp"

namespace pathalg {

// Dimension of the degree-d part of the free Lie algebra on n generators
// (necklace formula).
long long witt_dim(int n, int d);

// All Lyndon words of length exactly d over 1..n, in lex order (Duval).
std::vector<Word> lyndon_words(int n, int d);

bool is_lyndon(const Word& w);

// Standard factorization w = u v of a Lyndon word of length >= 2,
// v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

// "[1,[1,2]]" for the standard bracketing of a Lyndon word.
std::string bracket_str(const Word& lyndon);

// Expansion of the standard bracketing into the tensor algebra,
// [u,v] -> uv - vu recursively. Memoized; coefficients are integers.
std::map<Word, Rat, LenLexLess> expand_to_words(const Word& lyndon);

// Word-concatenation product of word-indexed maps (no truncation).
// C needs is_zero(), operator*, operator+=.
template <class C>
std::map<Word, C, LenLexLess> word_conv(const std::map<Word, C, LenLexLess>& a,
                                        const std::map<Word, C, LenLexLess>& b) {
	std::map<Word, C, LenLexLess> r;
	for (const auto& [u, cu] : a)
		for (const auto& [v, cv] : b) {
			C p = cu * cv;
			if (p.is_zero())
				continue;
			auto [it, inserted] = r.emplace(word_cat(u, v), std::move(p));
			if (!inserted) {
				it->second += p;
				if (it->second.is_zero())
					r.erase(it);
			}
		}
	return r;
}

// Triangular change of basis from a homogeneous word-indexed Lie element to
// Hall (Lyndon) coordinates. The expansion of the standard bracketing of a
// Lyndon word l has lex-leading word l with coefficient 1, so greedy
// elimination on the lex-smallest remaining word is exact over any
// commutative coefficient ring (C needs is_zero() and scaled(Rat)).
// Throws not_lie_error when the input is not a Lie element.
template <class C>
std::map<Word, C, LenLexLess> lie_normal_form(std::map<Word, C, LenLexLess> p) {
	std::map<Word, C, LenLexLess> out;
	if (p.empty())
		return out;
	const std::size_t d = p.begin()->first.size();
	for (const auto& t : p)
		if (t.first.size() != d)
			throw domain_error("lie_normal_form: input is not homogeneous");
	while (!p.empty()) {
		Word w = p.begin()->first;  // lex-smallest (all words same length)
		if (!is_lyndon(w))
			throw not_lie_error("not a Lie element: leading word " + word_str(w, 0) +
			                    " is not Lyndon");
		C c = p.begin()->second;
		for (const auto& [v, k] : expand_to_words(w)) {
			C delta = c.scaled(k);
			if (delta.is_zero())
				continue;
			auto it = p.find(v);
			if (it == p.end()) {
				p.emplace(v, -delta);
			} else {
				it->second -= delta;
				if (it->second.is_zero())
					p.erase(it);
			}
		}
		out.emplace(std::move(w), std::move(c));
	}
	return out;
}

// Hall-coordinate Lie element with rational coefficients.
using LiePoly = std::map<Word, Rat, LenLexLess>;

// Expansion of a Hall-coordinate element into the tensor algebra.
std::map<Word, Rat, LenLexLess> expand_lie(const LiePoly& p);

}
