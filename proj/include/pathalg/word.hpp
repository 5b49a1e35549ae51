#pragma once

#include <string>
#include <vector>

namespace pathalg {

// A word in the generators D_1..D_n, letters 1-based.
using Word = std::vector<int>;

inline bool lex_less(const Word& a, const Word& b) {
	return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Canonical word order: by length, then lexicographic.
struct LenLexLess {
	bool operator()(const Word& a, const Word& b) const {
		if (a.size() != b.size())
			return a.size() < b.size();
		return lex_less(a, b);
	}
};

inline Word word_cat(const Word& a, const Word& b) {
	Word w = a;
	w.insert(w.end(), b.begin(), b.end());
	return w;
}

inline std::string word_str(const Word& w, int n) {
	std::string s;
	for (std::size_t k = 0; k < w.size(); ++k) {
		if (n > 9 && k > 0)
			s += ',';
		s += std::to_string(w[k]);
	}
	return s;
}

}
