#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/ncop.hpp"
#include "pathalg/opexpr.hpp"
#include "pathalg/palg.hpp"

namespace pathalg {

// Deterministic sample generator: every value is derived from std::mt19937_64
// by modular reduction, so identical seeds reproduce identical objects on
// every platform.
class Sampler {
public:
	explicit Sampler(std::uint64_t seed) : eng_(seed) {}

	std::uint64_t next() { return eng_(); }
	int uniform(int lo, int hi);  // inclusive bounds
	Rat rat(int max_abs_num, int max_den);

	MPoly mpoly(int n, int cap, int max_deg, int terms);
	Word word(int n, int len);
	Word lyndon(int n, int deg);  // uniform choice among the basis words
	NCOp ncop(const AnchorFrame& fr, int max_len, int coeff_deg, int terms);
	PElem pelem(int n, int cap, int min_hall, int max_hall, int coeff_deg, int terms);

	RatMat ratmat(int N, int max_abs);
	MatPoly matpoly(int N, int n, int cap, int max_deg, int terms_per_entry);
	MatPoly strict_upper(int N, int n, int cap, int max_deg, int terms_per_entry);
	Connection connection(int n, int N, int cap, int max_deg, int terms_per_entry);
	Connection strict_upper_connection(int n, int N, int cap, int max_deg,
	                                   int terms_per_entry);
	GaugeTransform restricted_gauge(int n, int N, int cap, int max_deg,
	                                int terms_per_entry);

	PLPath path(int n, int segments, int coord_range);

	// Expression whose fully expanded form has total x-degree <= var_budget,
	// keeping every intermediate product inside the exact truncation window.
	OpExprPtr expr(int n, int var_budget, int depth);

private:
	std::mt19937_64 eng_;
};

}
