#include "pathalg/printing.hpp"

#include <algorithm>

namespace pathalg {

static std::string monomial_str(const Expo& e, const Rat& c, bool* negative) {
	Rat a = c;
	*negative = a.sign() < 0;
	if (*negative)
		a = -a;
	std::string vars;
	for (std::size_t i = 0; i < e.size(); ++i) {
		if (e[i] == 0)
			continue;
		if (!vars.empty())
			vars += "*";
		vars += "x" + std::to_string(i + 1);
		if (e[i] > 1)
			vars += "^" + std::to_string(e[i]);
	}
	if (vars.empty())
		return a.str();
	if (a == Rat(1))
		return vars;
	return a.str() + "*" + vars;
}

std::string mpoly_str(const MPoly& p) {
	if (p.is_zero())
		return "0";
	std::string out;
	// Highest degree first.
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
		bool neg = false;
		std::string piece = monomial_str(it->first, it->second, &neg);
		if (out.empty())
			out = neg ? "-" + piece : piece;
		else
			out += (neg ? " - " : " + ") + piece;
	}
	return out;
}

// Coefficient piece of a compound term: empty-string for 1, "-" for -1
// handled through `negative`; multi-term coefficients are parenthesized.
static std::string coeff_prefix(const MPoly& f, bool* negative, bool* is_one) {
	*negative = false;
	*is_one = false;
	if (f.terms().size() == 1) {
		const auto& [e, c] = *f.terms().begin();
		bool neg = false;
		std::string piece = monomial_str(e, c, &neg);
		*negative = neg;
		if (piece == "1") {
			*is_one = true;
			return "";
		}
		return piece;
	}
	return "(" + mpoly_str(f) + ")";
}

static std::string word_factor(const Word& w) {
	std::string s;
	for (int l : w) {
		if (!s.empty())
			s += "*";
		s += "D" + std::to_string(l);
	}
	return s;
}

template <class TermMapT, class KeyStr>
static std::string graded_sum_str(const TermMapT& terms, KeyStr key_str) {
	if (terms.empty())
		return "0";
	// A lone order-0 term is just a function: print it without parentheses.
	if (terms.size() == 1 && key_str(terms.begin()->first).empty())
		return mpoly_str(terms.begin()->second);
	std::vector<const typename TermMapT::value_type*> order;
	for (const auto& t : terms)
		order.push_back(&t);
	std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
		if (a->first.size() != b->first.size())
			return a->first.size() > b->first.size();
		return lex_less(a->first, b->first);
	});
	std::string out;
	for (const auto* t : order) {
		bool neg = false, one = false;
		std::string cf = coeff_prefix(t->second, &neg, &one);
		std::string ks = key_str(t->first);
		std::string piece;
		if (ks.empty())
			piece = one ? "1" : cf;
		else if (one)
			piece = ks;
		else
			piece = cf + "*" + ks;
		if (out.empty())
			out = neg ? "-" + piece : piece;
		else
			out += (neg ? " - " : " + ") + piece;
	}
	return out;
}

std::string ncop_str(const NCOp& p) {
	return graded_sum_str(p.terms(), word_factor);
}

std::string pelem_str(const PElem& x) {
	return graded_sum_str(x.terms(), [](const Word& h) { return bracket_str(h); });
}

std::string vf_str(const VectorField& v) {
	std::string out = "(";
	for (int i = 0; i < v.n(); ++i) {
		if (i)
			out += ", ";
		out += mpoly_str(v.comp[(std::size_t)i]);
	}
	return out + ")";
}

std::string ratmat_str(const RatMat& m) {
	std::string out = "[";
	for (int r = 0; r < m.N(); ++r) {
		if (r)
			out += ", ";
		out += "[";
		for (int c = 0; c < m.N(); ++c) {
			if (c)
				out += ", ";
			out += m.at(r, c).str();
		}
		out += "]";
	}
	return out + "]";
}

std::string matpoly_str(const MatPoly& m) {
	std::string out = "[";
	for (int r = 0; r < m.N(); ++r) {
		if (r)
			out += ", ";
		out += "[";
		for (int c = 0; c < m.N(); ++c) {
			if (c)
				out += ", ";
			out += mpoly_str(m.at(r, c));
		}
		out += "]";
	}
	return out + "]";
}

std::string point_str(const std::vector<Rat>& pt) {
	std::string out = "(";
	for (std::size_t i = 0; i < pt.size(); ++i) {
		if (i)
			out += ", ";
		out += pt[i].str();
	}
	return out + ")";
}

std::string seq_str(const Word& s) {
	std::string out = "(";
	for (std::size_t i = 0; i < s.size(); ++i) {
		if (i)
			out += ",";
		out += std::to_string(s[i]);
	}
	return out + ")";
}

}
