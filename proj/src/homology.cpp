#include "pathalg/homology.hpp"

#include <functional>
#include <utility>

#include "pathalg/errors.hpp"
#include "pathalg/freelie.hpp"
#include "pathalg/matpoly.hpp"

namespace pathalg {

std::vector<Word> generators(int n, int d) {
	if (n < 1 || d < 2)
		throw domain_error("generators: need n >= 1, d >= 2");
	std::vector<Word> out;
	Word s;
	// Nonincreasing prefix of length d-1, then a strictly larger last index;
	// ascending recursion yields lex order.
	std::function<void(int)> rec = [&](int hi) {
		if ((int)s.size() == d - 1) {
			for (int last = s.back() + 1; last <= n; ++last) {
				s.push_back(last);
				out.push_back(s);
				s.pop_back();
			}
			return;
		}
		for (int i = 1; i <= hi; ++i) {
			s.push_back(i);
			rec(i);
			s.pop_back();
		}
	};
	rec(n);
	return out;
}

long long schur_dim(int n, int d) {
	if (n < 2 || d < 2)
		throw domain_error("schur_dim: need n >= 2, d >= 2");
	// Hook (d-1, 1): weakly increasing first row, strictly larger entry below
	// the first cell.
	long long count = 0;
	Word row;
	std::function<void(int)> rec = [&](int lo) {
		if ((int)row.size() == d - 1) {
			count += n - row[0];
			return;
		}
		for (int i = lo; i <= n; ++i) {
			row.push_back(i);
			rec(i);
			row.pop_back();
		}
	};
	rec(1);
	return count;
}

std::map<Word, Rat, LenLexLess> generator_bracket(const Word& seq) {
	if (seq.size() < 2)
		throw domain_error("generator_bracket: sequence too short");
	std::map<Word, Rat, LenLexLess> m;
	m.emplace(Word{seq.back()}, Rat(1));
	for (std::size_t k = seq.size() - 1; k-- > 0;) {
		std::map<Word, Rat, LenLexLess> g;
		g.emplace(Word{seq[k]}, Rat(1));
		auto gm = word_conv(g, m);
		auto mg = word_conv(m, g);
		for (auto& [w, c] : mg) {
			auto [it, fresh] = gm.emplace(w, -c);
			if (!fresh) {
				it->second -= c;
				if (it->second.is_zero())
					gm.erase(it);
			}
		}
		m = std::move(gm);
	}
	return m;
}

// Dense word-coordinate vector of a homogeneous degree-d element.
static std::vector<Rat> to_row(const std::map<Word, Rat, LenLexLess>& m, int n, int d) {
	std::size_t cols = 1;
	for (int k = 0; k < d; ++k)
		cols *= (std::size_t)n;
	std::vector<Rat> row(cols, Rat(0));
	for (auto& [w, c] : m) {
		std::size_t idx = 0;
		for (int l : w)
			idx = idx * (std::size_t)n + (std::size_t)(l - 1);
		row[idx] = c;
	}
	return row;
}

bool h1_basis_check(int n, int d) {
	if (n < 2 || d < 2)
		throw domain_error("h1_basis_check: need n >= 2, d >= 2");
	// Rows spanning the degree-d part of [FL_{>=2}, FL_{>=2}].
	std::vector<std::vector<Rat>> rows;
	for (int p = 2; p <= d - 2; ++p) {
		int q = d - p;
		if (p > q)
			break;
		auto hall_p = lyndon_words(n, p);
		auto hall_q = lyndon_words(n, q);
		for (std::size_t a = 0; a < hall_p.size(); ++a) {
			auto ea = expand_to_words(hall_p[a]);
			std::size_t b0 = (p == q) ? a + 1 : 0;
			for (std::size_t b = b0; b < hall_q.size(); ++b) {
				auto eb = expand_to_words(hall_q[b]);
				auto ab = word_conv(ea, eb);
				auto ba = word_conv(eb, ea);
				for (auto& [w, c] : ba) {
					auto [it, fresh] = ab.emplace(w, -c);
					if (!fresh) {
						it->second -= c;
						if (it->second.is_zero())
							ab.erase(it);
					}
				}
				rows.push_back(to_row(ab, n, d));
			}
		}
	}
	int rank_comm = rank_of(rows);
	std::vector<Word> gens = generators(n, d);
	for (auto& s : gens)
		rows.push_back(to_row(generator_bracket(s), n, d));
	int rank_all = rank_of(std::move(rows));
	return rank_all == (int)witt_dim(n, d) &&
	       rank_all == rank_comm + (int)gens.size();
}

std::vector<FreenessRow> freeness_dims(int n, int dmax) {
	if (n < 2 || dmax < 2)
		throw domain_error("freeness_dims: need n >= 2, dmax >= 2");
	std::vector<long long> g((std::size_t)dmax + 1, 0);
	for (int d = 2; d <= dmax; ++d)
		g[(std::size_t)d] = (long long)generators(n, d).size();
	// c = coefficients of sum_m G^m / m with G = sum g_e t^e; then the graded
	// Witt recursion sum_{e | N} e L_e = N c_N gives the free graded dims.
	std::vector<Rat> c((std::size_t)dmax + 1, Rat(0));
	std::vector<Rat> pw((std::size_t)dmax + 1, Rat(0));
	pw[0] = Rat(1);
	for (int m = 1; 2 * m <= dmax; ++m) {
		std::vector<Rat> nx((std::size_t)dmax + 1, Rat(0));
		for (int i = 0; i <= dmax; ++i) {
			if (pw[(std::size_t)i].is_zero())
				continue;
			for (int e = 2; i + e <= dmax; ++e)
				nx[(std::size_t)(i + e)] += pw[(std::size_t)i] * Rat(g[(std::size_t)e]);
		}
		pw = std::move(nx);
		for (int k = 0; k <= dmax; ++k)
			c[(std::size_t)k] += pw[(std::size_t)k] / Rat(m);
	}
	std::vector<long long> L((std::size_t)dmax + 1, 0);
	for (int N = 2; N <= dmax; ++N) {
		Rat s = c[(std::size_t)N].scaled(Rat(N));
		for (int e = 2; e < N; ++e)
			if (N % e == 0)
				s -= Rat(e * L[(std::size_t)e]);
		Rat ln = s / Rat(N);
		if (!ln.is_integer())
			throw domain_error("freeness_dims: non-integral graded dimension");
		L[(std::size_t)N] = ln.num().convert_to<long long>();
	}
	std::vector<FreenessRow> rows;
	for (int d = 2; d <= dmax; ++d)
		rows.push_back(FreenessRow{d, g[(std::size_t)d], schur_dim(n, d),
		                           witt_dim(n, d), L[(std::size_t)d]});
	return rows;
}

}
