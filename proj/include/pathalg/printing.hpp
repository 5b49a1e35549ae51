#pragma once

#include <string>

#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/matpoly.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/ncop.hpp"
#include "pathalg/palg.hpp"

namespace pathalg {

// Canonical text renderers. Sums print highest degree first ("x1^2 + x1 - 1",
// "x1*D1 + 1"); operator and algebroid terms order by word length descending,
// then lexicographically; composite coefficients are parenthesized.
std::string mpoly_str(const MPoly& p);
std::string ncop_str(const NCOp& p);
std::string pelem_str(const PElem& x);
std::string vf_str(const VectorField& v);
std::string ratmat_str(const RatMat& m);
std::string matpoly_str(const MatPoly& m);
std::string point_str(const std::vector<Rat>& pt);
std::string seq_str(const Word& s);  // "(1,1,2)"

}
