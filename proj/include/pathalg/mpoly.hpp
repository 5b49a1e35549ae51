#pragma once

#include <map>
#include <vector>

#include "pathalg/rat.hpp"

namespace pathalg {

// Exponent vector of a monomial, one entry per variable.
using Expo = std::vector<int>;

inline int expo_deg(const Expo& e) {
	int d = 0;
	for (int k : e)
		d += k;
	return d;
}

// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
	bool operator()(const Expo& a, const Expo& b) const {
		int da = expo_deg(a), db = expo_deg(b);
		if (da != db)
			return da < db;
		return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
	}
};

// Multivariate polynomial over Rat, truncated at total degree `cap`.
// Terms of degree > cap are dropped on construction and by every operation;
// all retained degrees are exact.
class MPoly {
public:
	using TermMap = std::map<Expo, Rat, GrlexLess>;

	MPoly() : nvars_(0), cap_(0) {}
	MPoly(int nvars, int cap) : nvars_(nvars), cap_(cap) {}

	static MPoly constant(int nvars, int cap, const Rat& c);
	static MPoly var(int nvars, int cap, int i);  // x_i, 1-based
	static MPoly monomial(int nvars, int cap, const Expo& e, const Rat& c);

	int nvars() const { return nvars_; }
	int cap() const { return cap_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	int degree() const { return terms_.empty() ? -1 : expo_deg(terms_.rbegin()->first); }

	Rat coeff(const Expo& e) const;
	Rat constant_term() const;

	void add_term(const Expo& e, const Rat& c);

	MPoly operator-() const;
	MPoly& operator+=(const MPoly& o);
	MPoly& operator-=(const MPoly& o);
	friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
	friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
	friend MPoly operator*(const MPoly& a, const MPoly& b);

	MPoly scaled(const Rat& c) const;
	MPoly partial(int i) const;  // d/dx_i, 1-based
	MPoly degree_slice(int d) const;

	Rat eval(const std::vector<Rat>& pt) const;
	// Coefficients in t of p(base + t*dir); exact, not capped in t.
	std::vector<Rat> eval_line(const std::vector<Rat>& base, const std::vector<Rat>& dir) const;

	bool operator==(const MPoly& o) const {
		return nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
	}
	bool operator!=(const MPoly& o) const { return !(*this == o); }

	// Serial reference kept alongside the parallel product for testing.
	static MPoly mul_serial(const MPoly& a, const MPoly& b);
	static MPoly mul_parallel(const MPoly& a, const MPoly& b);

private:
	int nvars_;
	int cap_;
	TermMap terms_;

	void check_compatible(const MPoly& o, const char* what) const;
};

}
