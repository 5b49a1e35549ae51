#pragma once

#include <memory>

#include "pathalg/ncop.hpp"

namespace pathalg {

// Syntax tree for operator expressions over constants, x_i, D_i,
// +, -, *, [ , ] and integer powers.
struct OpExpr;
using OpExprPtr = std::shared_ptr<const OpExpr>;

struct OpExpr {
	enum class Kind { Const, Var, Gen, Add, Sub, Mul, Comm, Pow, Neg };

	Kind kind;
	Rat value;         // Const
	int index = 0;     // Var/Gen, 1-based
	unsigned expo = 0; // Pow
	OpExprPtr a, b;

	static OpExprPtr konst(Rat c);
	static OpExprPtr var(int i);
	static OpExprPtr gen(int i);
	static OpExprPtr add(OpExprPtr l, OpExprPtr r);
	static OpExprPtr sub(OpExprPtr l, OpExprPtr r);
	static OpExprPtr mul(OpExprPtr l, OpExprPtr r);
	static OpExprPtr comm(OpExprPtr l, OpExprPtr r);
	static OpExprPtr pow(OpExprPtr base, unsigned k);
	static OpExprPtr neg(OpExprPtr e);
};

// Two deliberately different reduction orders for the rewriting system;
// nc_normalize must produce the same normal form under both.
enum class NormalizeStrategy {
	BottomUpLeft,     // post-order evaluation, left subtree first
	ExpandRightmost,  // distribute to primitive strings first (rightmost
	                  // expansion), then reduce each string right to left
};

NCOp nc_normalize(const OpExprPtr& e, const AnchorFrame& frame,
                  NormalizeStrategy strategy = NormalizeStrategy::BottomUpLeft);

}
