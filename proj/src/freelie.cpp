#include "pathalg/freelie.hpp"

namespace pathalg {

namespace {

int mobius(int m) {
	int mu = 1;
	for (int p = 2; p * p <= m; ++p) {
		if (m % p)
			continue;
		m /= p;
		if (m % p == 0)
			return 0;
		mu = -mu;
	}
	if (m > 1)
		mu = -mu;
	return mu;
}

long long ipow(long long b, int e) {
	long long r = 1;
	while (e--)
		r *= b;
	return r;
}

}

long long witt_dim(int n, int d) {
	if (n < 1 || d < 1)
		throw domain_error("witt_dim: need n >= 1, d >= 1");
	long long s = 0;
	for (int e = 1; e <= d; ++e)
		if (d % e == 0)
			s += mobius(e) * ipow(n, d / e);
	return s / d;
}

std::vector<Word> lyndon_words(int n, int d) {
	if (n < 1 || d < 1)
		throw domain_error("lyndon_words: need n >= 1, d >= 1");
	std::vector<Word> out;
	Word w{1};
	while (true) {
		if ((int)w.size() == d)
			out.push_back(w);
		// extend periodically to length d, then increment from the right
		Word t = w;
		while ((int)t.size() < d)
			t.push_back(t[t.size() % w.size()]);
		while (!t.empty() && t.back() == n)
			t.pop_back();
		if (t.empty())
			break;
		++t.back();
		w = std::move(t);
	}
	return out;
}

bool is_lyndon(const Word& w) {
	if (w.empty())
		return false;
	for (std::size_t k = 1; k < w.size(); ++k) {
		Word suffix(w.begin() + (long)k, w.end());
		if (!lex_less(w, suffix))
			return false;
	}
	return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
	if (w.size() < 2 || !is_lyndon(w))
		throw domain_error("standard_factorization: not a Lyndon word of length >= 2");
	for (std::size_t k = 1; k < w.size(); ++k) {
		Word v(w.begin() + (long)k, w.end());
		if (is_lyndon(v))
			return {Word(w.begin(), w.begin() + (long)k), v};
	}
	throw domain_error("standard_factorization: no Lyndon suffix");  // unreachable
}

std::string bracket_str(const Word& w) {
	if (w.size() == 1)
		return std::to_string(w[0]);
	auto [u, v] = standard_factorization(w);
	return "[" + bracket_str(u) + "," + bracket_str(v) + "]";
}

std::map<Word, Rat, LenLexLess> expand_to_words(const Word& w) {
	thread_local std::map<Word, std::map<Word, Rat, LenLexLess>> memo;
	auto hit = memo.find(w);
	if (hit != memo.end())
		return hit->second;
	std::map<Word, Rat, LenLexLess> r;
	if (w.size() == 1) {
		r.emplace(w, Rat(1));
	} else {
		auto [u, v] = standard_factorization(w);
		auto a = expand_to_words(u);
		auto b = expand_to_words(v);
		r = word_conv(a, b);
		for (const auto& [x, c] : word_conv(b, a)) {
			auto it = r.find(x);
			if (it == r.end()) {
				r.emplace(x, -c);
			} else {
				it->second -= c;
				if (it->second.is_zero())
					r.erase(it);
			}
		}
	}
	memo.emplace(w, r);
	return r;
}

std::map<Word, Rat, LenLexLess> expand_lie(const LiePoly& p) {
	std::map<Word, Rat, LenLexLess> r;
	for (const auto& [h, c] : p)
		for (const auto& [v, k] : expand_to_words(h)) {
			auto [it, inserted] = r.emplace(v, c * k);
			if (!inserted) {
				it->second += c * k;
				if (it->second.is_zero())
					r.erase(it);
			}
		}
	return r;
}

}
