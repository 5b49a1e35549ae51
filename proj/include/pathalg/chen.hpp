#pragma once

#include <map>
#include <vector>

#include "pathalg/connection.hpp"
#include "pathalg/matpoly.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/rat.hpp"
#include "pathalg/word.hpp"

namespace pathalg {

// Piecewise-linear path through rational points; consecutive points may
// coincide (degenerate segments contribute nothing).
struct PLPath {
	int n;
	std::vector<std::vector<Rat>> points;

	PLPath(int n_, std::vector<std::vector<Rat>> points_);

	const std::vector<Rat>& start() const { return points.front(); }
	const std::vector<Rat>& end() const { return points.back(); }
};

using IntMap = std::map<Word, Rat, LenLexLess>;

// Iterated integrals of one linear segment with displacement v:
// I_w = v_{i1} ... v_{ip} / p!, including I(empty) = 1.
IntMap seg_integrals(const std::vector<Rat>& v, int cap);

// Deconcatenation convolution (I * J)_w = sum over w = u.v of I_u J_v,
// Chen's relation for the concatenated path. Split words are independent,
// so the default entry point fans the outer loop across threads.
IntMap concat_integrals(const IntMap& a, const IntMap& b, int n, int cap);
IntMap concat_integrals_serial(const IntMap& a, const IntMap& b, int n, int cap);

// Truncated Chen series of a path; coefficients are the iterated integrals
// of the REVERSED path so that source_eval recovers the start point in
// coordinates centered at the target (the path's endpoint).
class ChenSeries {
public:
	ChenSeries(int n, int cap, std::vector<Rat> target);

	int n() const { return n_; }
	int cap() const { return cap_; }
	const std::vector<Rat>& target() const { return target_; }
	const IntMap& integrals() const { return terms_; }

	Rat coeff(const Word& w) const;
	void set_coeff(const Word& w, const Rat& c);

	bool operator==(const ChenSeries& o) const {
		return n_ == o.n_ && cap_ == o.cap_ && target_ == o.target_ && terms_ == o.terms_;
	}
	bool operator!=(const ChenSeries& o) const { return !(*this == o); }

private:
	int n_;
	int cap_;
	std::vector<Rat> target_;
	IntMap terms_;
};

ChenSeries chen_series(const PLPath& path, int cap);

// Shuffle relations: for all u, v with |u| + |v| <= cap the coefficient of
// D_u (x) D_v in the deconcatenation coproduct equals I_u * I_v. This is
// group-likeness at coefficient level.
bool grouplike_check(const ChenSeries& e);

// Source map eta(a) = sum_w I_w (d_{i1} ... d_{ip} a)(target); equals the
// value of a at the path's start point for deg(a) <= cap.
Rat source_eval(const ChenSeries& e, const MPoly& a);

// Series of the concatenated path: e1 follows e2 (composition order), so
// e2's target must be e1's source point.
ChenSeries compose(const ChenSeries& e1, const ChenSeries& e2);

// Parallel transport along the path of e: sum_w I_w M_w(target) with
// M_empty = 1 and M_{i.w} = d_i M_w - A_i M_w. A single segment with
// constant A and displacement v gives exp(sum_i v_i A_i); transport of a
// concatenation is the reverse-order product of transports.
RatMat transport(const ChenSeries& e, const Connection& c);

// Independent oracle: time-ordered exponential U' = B(t) U per segment by
// Picard iteration with exact univariate integration, graded by the number
// of A factors; orders[j] collects the j-factor part, truncated at cap.
std::vector<RatMat> picard_orders(const PLPath& path, const Connection& c, int cap);
RatMat picard_transport(const PLPath& path, const Connection& c, int cap);

}
