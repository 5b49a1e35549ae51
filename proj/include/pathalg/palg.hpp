#pragma once

#include <map>

#include "pathalg/freelie.hpp"
#include "pathalg/ncop.hpp"

namespace pathalg {

// Section of the free Lie algebroid over the coordinate frame: a finite sum
// of Hall (Lyndon) basis brackets with polynomial coefficients.
class PElem {
public:
	using TermMap = std::map<Word, MPoly, LenLexLess>;

	PElem(int n, int cap) : n_(n), cap_(cap) {}

	int n() const { return n_; }
	int cap() const { return cap_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	int max_deg() const { return terms_.empty() ? 0 : (int)terms_.rbegin()->first.size(); }

	MPoly coeff(const Word& h) const;
	void add_term(const Word& hall, const MPoly& f);  // hall must be Lyndon

	PElem operator-() const;
	PElem& operator+=(const PElem& o);
	PElem& operator-=(const PElem& o);
	friend PElem operator+(PElem a, const PElem& b) { return a += b; }
	friend PElem operator-(PElem a, const PElem& b) { return a -= b; }

	PElem scaled(const MPoly& f) const;  // module structure: f * x
	PElem scaled(const Rat& c) const;
	PElem degree_slice(int d) const;

	bool operator==(const PElem& o) const {
		return n_ == o.n_ && cap_ == o.cap_ && terms_ == o.terms_;
	}
	bool operator!=(const PElem& o) const { return !(*this == o); }

private:
	int n_;
	int cap_;
	TermMap terms_;
};

// Faithful representation into differential operators (coordinate frame):
// each Hall bracket expands to its integer word combination, coefficients
// multiply on the left.
NCOp p_to_nc(const PElem& x);

// Inverse on the image: top-down triangular extraction of Hall coordinates
// degree by degree. Throws not_lie_error / not_in_p_error off the image.
PElem nc_to_p(const NCOp& p);

// Bracket, defined through the operator representation.
PElem p_bracket(const PElem& x, const PElem& y);

// Degree-1 slice read as a vector field.
VectorField anchor(const PElem& x);

// Bivector sum g_ij dx_i ^ dx_j (i < j) with polynomial components.
struct Bivector {
	int n;
	int cap;
	std::map<std::pair<int, int>, MPoly> comp;

	void add(int i, int j, const MPoly& g);
};

// Curvature correction map: g_ij dx_i ^ dx_j -> g_ij [D_i, D_j]; for
// coordinate vector fields the Lie-term correction vanishes.
PElem c_map(const Bivector& b);

}
