#pragma once

#include <map>
#include <vector>

#include "pathalg/rat.hpp"
#include "pathalg/word.hpp"

namespace pathalg {

// Index sequences (i1, ..., id), d >= 2, with i1 >= i2 >= ... >= i_{d-1}
// and i_{d-1} < i_d, entries in 1..n; lexicographically ordered. These key
// the curvature jets and generate the positive part of the fundamental Lie
// algebra.
std::vector<Word> generators(int n, int d);

// Dimension of the Schur functor for the hook shape (d-1, 1) on an
// n-dimensional space, by exhaustive semistandard-tableau enumeration.
long long schur_dim(int n, int d);

// The left-nested bracket [D_{i1}, [D_{i2}, ..., [D_{i_{d-1}}, D_{i_d}]...]]
// of a generator sequence, expanded into word coordinates.
std::map<Word, Rat, LenLexLess> generator_bracket(const Word& seq);

// Verify that the generator images form a basis of FL_d modulo the degree-d
// part of [FL_{>=2}, FL_{>=2}]: with A the commutator span,
// rank(A + gens) must reach the Witt dimension and exceed rank(A) by
// exactly |generators(n, d)|.
bool h1_basis_check(int n, int d);

// One row of the graded freeness table.
struct FreenessRow {
	int d;
	long long gen_count;
	long long schur;
	long long fl_dim;
	long long free_graded_dim;
};

// Compare dim FL_d against the graded free Lie algebra on generator
// multiplicities |generators(n, e)|, e >= 2, via the graded Witt recursion
// sum_{e | N} e L_e = N c_N with c the coefficients of sum_m G^m / m.
std::vector<FreenessRow> freeness_dims(int n, int dmax);

}
