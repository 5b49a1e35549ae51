#pragma once

#include <vector>

#include "pathalg/mpoly.hpp"

namespace pathalg {

// Constant N x N rational matrix.
class RatMat {
public:
	RatMat() : N_(0) {}
	explicit RatMat(int N) : N_(N), a_((std::size_t)(N * N), Rat(0)) {}
	static RatMat identity(int N);

	int N() const { return N_; }
	Rat& at(int r, int c) { return a_[(std::size_t)(r * N_ + c)]; }
	const Rat& at(int r, int c) const { return a_[(std::size_t)(r * N_ + c)]; }

	bool is_zero() const;
	RatMat operator-() const;
	RatMat& operator+=(const RatMat& o);
	RatMat& operator-=(const RatMat& o);
	friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
	friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }
	friend RatMat operator*(const RatMat& a, const RatMat& b);
	RatMat scaled(const Rat& c) const;
	RatMat inverse() const;  // throws singular_error

	bool operator==(const RatMat& o) const { return N_ == o.N_ && a_ == o.a_; }
	bool operator!=(const RatMat& o) const { return !(*this == o); }

private:
	int N_;
	std::vector<Rat> a_;
};

// N x N matrix with truncated polynomial entries.
class MatPoly {
public:
	MatPoly() : N_(0) {}
	MatPoly(int N, int nvars, int cap)
		: N_(N), e_((std::size_t)(N * N), MPoly(nvars, cap)) {}
	static MatPoly identity(int N, int nvars, int cap);
	static MatPoly from_const(const RatMat& m, int nvars, int cap);

	int N() const { return N_; }
	int nvars() const { return N_ ? e_[0].nvars() : 0; }
	int cap() const { return N_ ? e_[0].cap() : 0; }
	MPoly& at(int r, int c) { return e_[(std::size_t)(r * N_ + c)]; }
	const MPoly& at(int r, int c) const { return e_[(std::size_t)(r * N_ + c)]; }

	bool is_zero() const;
	MatPoly operator-() const;
	MatPoly& operator+=(const MatPoly& o);
	MatPoly& operator-=(const MatPoly& o);
	friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
	friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
	friend MatPoly operator*(const MatPoly& a, const MatPoly& b);

	MatPoly scaled(const MPoly& f) const;
	MatPoly scaled(const Rat& c) const;
	MatPoly partial(int i) const;
	MatPoly degree_slice(int d) const;
	RatMat eval(const std::vector<Rat>& pt) const;
	RatMat eval_zero() const;

	// Series inverse: requires the constant term to be invertible.
	MatPoly inverse() const;

	bool operator==(const MatPoly& o) const { return N_ == o.N_ && e_ == o.e_; }
	bool operator!=(const MatPoly& o) const { return !(*this == o); }

private:
	int N_;
	std::vector<MPoly> e_;
};

inline MatPoly comm(const MatPoly& a, const MatPoly& b) { return a * b - b * a; }
inline RatMat comm(const RatMat& a, const RatMat& b) { return a * b - b * a; }

// Solve M x = rhs for each rhs column exactly over Q; M is square.
// Throws singular_error when M is not invertible.
std::vector<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> M,
                                           std::vector<std::vector<Rat>> rhs_cols);

// Rank of a set of rational row vectors.
int rank_of(std::vector<std::vector<Rat>> rows);

// Basis of the kernel of the linear map given by rows (acting on column vectors).
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows, int ncols);

}
