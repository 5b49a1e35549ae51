#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pathalg/matpoly.hpp"
#include "pathalg/ncop.hpp"
#include "pathalg/palg.hpp"
#include "pathalg/word.hpp"

namespace pathalg {

// Matrix connection on the rank-N trivial bundle over the formal
// n-dimensional disk: covariant derivatives D_i = d/dx_i + A_i.
class Connection {
public:
	Connection(int n, int N, int cap);

	int n() const { return n_; }
	int N() const { return N_; }
	int cap() const { return cap_; }

	const MatPoly& A(int i) const;  // 1-based
	void set_A(int i, const MatPoly& a);

	bool operator==(const Connection& o) const {
		return n_ == o.n_ && N_ == o.N_ && cap_ == o.cap_ && A_ == o.A_;
	}
	bool operator!=(const Connection& o) const { return !(*this == o); }

private:
	int n_;
	int N_;
	int cap_;
	std::vector<MatPoly> A_;
};

// Fiberwise change of frame; restricted means g(0) = I.
struct GaugeTransform {
	MatPoly g;
	bool restricted;

	GaugeTransform(MatPoly g_, bool restricted_);
	static GaugeTransform identity(int N, int nvars, int cap);
};

// Values at 0 of the covariant curvature jets, keyed by the admissible
// index sequences (i1 >= ... >= i_{d-1} < i_d), 2 <= d <= Dmax.
struct JetData {
	int n;
	int N;
	int Dmax;
	std::map<Word, RatMat, LenLexLess> values;

	bool operator==(const JetData& o) const {
		return n == o.n && N == o.N && Dmax == o.Dmax && values == o.values;
	}
	bool operator!=(const JetData& o) const { return !(*this == o); }
};

bool is_admissible_seq(const Word& s, int n);

// F_ij = [D_i, D_j] = d_i A_j - d_j A_i + [A_i, A_j].
MatPoly curvature(const Connection& c, int i, int j);

// Adjoint covariant derivative d_i M + [A_i, M].
MatPoly cov_deriv(const Connection& c, int i, const MatPoly& m);

// Value at 0 of D_{i1} ... D_{i_{d-2}} F_{i_{d-1} i_d} for one sequence.
RatMat jet_value(const Connection& c, const Word& seq);

// All jets up to sequence length Dmax; sequences are independent, so the
// default entry point fans them out across threads.
JetData jets(const Connection& c, int Dmax);
JetData jets_serial(const Connection& c, int Dmax);

// Matrix-coefficient differential operator sum_e M_e(x) d^e in commuting
// partials, keyed by exponent vector.
class MatDiffOp {
public:
	using TermMap = std::map<Expo, MatPoly, GrlexLess>;

	MatDiffOp(int n, int N, int cap) : n_(n), N_(N), cap_(cap) {}
	static MatDiffOp identity(int n, int N, int cap);

	int n() const { return n_; }
	int N() const { return N_; }
	int cap() const { return cap_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	int order() const { return terms_.empty() ? -1 : expo_deg(terms_.rbegin()->first); }

	MatPoly coeff(const Expo& e) const;
	void add_term(const Expo& e, const MatPoly& m);

	MatDiffOp operator-() const;
	MatDiffOp& operator+=(const MatDiffOp& o);
	MatDiffOp& operator-=(const MatDiffOp& o);
	friend MatDiffOp operator+(MatDiffOp a, const MatDiffOp& b) { return a += b; }
	friend MatDiffOp operator-(MatDiffOp a, const MatDiffOp& b) { return a -= b; }

	MatDiffOp scaled(const MPoly& f) const;  // left multiply by f * I
	MatDiffOp order_slice(int d) const;      // terms with |e| == d

	bool operator==(const MatDiffOp& o) const {
		return n_ == o.n_ && N_ == o.N_ && cap_ == o.cap_ && terms_ == o.terms_;
	}
	bool operator!=(const MatDiffOp& o) const { return !(*this == o); }

private:
	int n_;
	int N_;
	int cap_;
	TermMap terms_;
};

MatDiffOp mdo_mul(const MatDiffOp& a, const MatDiffOp& b);
MatDiffOp mdo_comm(const MatDiffOp& a, const MatDiffOp& b);

// Holonomy representation: D_i -> d_i + A_i, f -> f * I, normal form with
// matrix coefficients.
MatDiffOp holonomy_eval(const NCOp& p, const Connection& c);
MatDiffOp holonomy_eval(const PElem& x, const Connection& c);

// A_i -> g^-1 A_i g + g^-1 d_i g.
Connection gauge_apply(const GaugeTransform& g, const Connection& c);

// Restricted gauge into the radial normal form sum_i x_i A_i = 0; returns
// the transformed connection and the gauge that achieves it.
std::pair<Connection, GaugeTransform> radial_gauge(const Connection& c);

// Radial-gauge connection with the prescribed covariant curvature jets,
// solved degree by degree (jet keys of length d determine the degree d-1
// coefficients; the system is square and triangular).
Connection reconstruct(const JetData& j, int cap);

// Cyclic identity D_i F_jk + D_j F_ki + D_k F_ij = 0 for all i < j < k;
// exact in truncated arithmetic when 2 * deg A <= cap.
bool bianchi_check(const Connection& c);

}
