#include "pathalg/opexpr.hpp"

#include "pathalg/errors.hpp"

namespace pathalg {

namespace {

OpExprPtr node(OpExpr e) {
	return std::make_shared<const OpExpr>(std::move(e));
}

}

OpExprPtr OpExpr::konst(Rat c) {
	OpExpr e{Kind::Const, std::move(c), 0, 0, nullptr, nullptr};
	return node(std::move(e));
}

OpExprPtr OpExpr::var(int i) {
	OpExpr e{Kind::Var, Rat(0), i, 0, nullptr, nullptr};
	return node(std::move(e));
}

OpExprPtr OpExpr::gen(int i) {
	OpExpr e{Kind::Gen, Rat(0), i, 0, nullptr, nullptr};
	return node(std::move(e));
}

OpExprPtr OpExpr::add(OpExprPtr l, OpExprPtr r) {
	OpExpr e{Kind::Add, Rat(0), 0, 0, std::move(l), std::move(r)};
	return node(std::move(e));
}

OpExprPtr OpExpr::sub(OpExprPtr l, OpExprPtr r) {
	OpExpr e{Kind::Sub, Rat(0), 0, 0, std::move(l), std::move(r)};
	return node(std::move(e));
}

OpExprPtr OpExpr::mul(OpExprPtr l, OpExprPtr r) {
	OpExpr e{Kind::Mul, Rat(0), 0, 0, std::move(l), std::move(r)};
	return node(std::move(e));
}

OpExprPtr OpExpr::comm(OpExprPtr l, OpExprPtr r) {
	OpExpr e{Kind::Comm, Rat(0), 0, 0, std::move(l), std::move(r)};
	return node(std::move(e));
}

OpExprPtr OpExpr::pow(OpExprPtr base, unsigned k) {
	OpExpr e{Kind::Pow, Rat(0), 0, k, std::move(base), nullptr};
	return node(std::move(e));
}

OpExprPtr OpExpr::neg(OpExprPtr x) {
	OpExpr e{Kind::Neg, Rat(0), 0, 0, std::move(x), nullptr};
	return node(std::move(e));
}

namespace {

NCOp eval_bottom_up(const OpExprPtr& e, const AnchorFrame& fr) {
	switch (e->kind) {
	case OpExpr::Kind::Const:
		return NCOp::constant(fr, e->value);
	case OpExpr::Kind::Var:
		return NCOp::from_mpoly(fr, MPoly::var(fr.n(), fr.cap(), e->index));
	case OpExpr::Kind::Gen:
		return NCOp::generator(fr, e->index);
	case OpExpr::Kind::Add:
		return eval_bottom_up(e->a, fr) + eval_bottom_up(e->b, fr);
	case OpExpr::Kind::Sub:
		return eval_bottom_up(e->a, fr) - eval_bottom_up(e->b, fr);
	case OpExpr::Kind::Mul:
		return nc_mul(eval_bottom_up(e->a, fr), eval_bottom_up(e->b, fr));
	case OpExpr::Kind::Comm:
		return nc_comm(eval_bottom_up(e->a, fr), eval_bottom_up(e->b, fr));
	case OpExpr::Kind::Pow:
		return nc_pow(eval_bottom_up(e->a, fr), e->expo);
	case OpExpr::Kind::Neg:
		return eval_bottom_up(e->a, fr).scaled(Rat(-1));
	}
	throw domain_error("nc_normalize: bad expression node");
}

// A formal product of primitives with a rational prefactor.
struct Monomial {
	Rat coef;
	std::vector<std::pair<bool, int>> factors;  // (is_generator, index)
};

// Distribute down to a sum of primitive strings, expanding the right
// operand of every product/commutator first.
std::vector<Monomial> expand(const OpExprPtr& e) {
	switch (e->kind) {
	case OpExpr::Kind::Const:
		return {{e->value, {}}};
	case OpExpr::Kind::Var:
		return {{Rat(1), {{false, e->index}}}};
	case OpExpr::Kind::Gen:
		return {{Rat(1), {{true, e->index}}}};
	case OpExpr::Kind::Add: {
		auto r = expand(e->b);
		auto l = expand(e->a);
		l.insert(l.end(), r.begin(), r.end());
		return l;
	}
	case OpExpr::Kind::Sub: {
		auto r = expand(e->b);
		for (auto& m : r)
			m.coef = -m.coef;
		auto l = expand(e->a);
		l.insert(l.end(), r.begin(), r.end());
		return l;
	}
	case OpExpr::Kind::Mul: {
		auto r = expand(e->b);
		auto l = expand(e->a);
		std::vector<Monomial> out;
		out.reserve(l.size() * r.size());
		for (const auto& mr : r)
			for (const auto& ml : l) {
				Monomial m{ml.coef * mr.coef, ml.factors};
				m.factors.insert(m.factors.end(), mr.factors.begin(), mr.factors.end());
				out.push_back(std::move(m));
			}
		return out;
	}
	case OpExpr::Kind::Comm:
		return expand(OpExpr::sub(OpExpr::mul(e->a, e->b), OpExpr::mul(e->b, e->a)));
	case OpExpr::Kind::Pow: {
		if (e->expo == 0)
			return {{Rat(1), {}}};
		OpExprPtr prod = e->a;
		for (unsigned k = 1; k < e->expo; ++k)
			prod = OpExpr::mul(prod, e->a);
		return expand(prod);
	}
	case OpExpr::Kind::Neg: {
		auto l = expand(e->a);
		for (auto& m : l)
			m.coef = -m.coef;
		return l;
	}
	}
	throw domain_error("nc_normalize: bad expression node");
}

NCOp eval_expand_rightmost(const OpExprPtr& e, const AnchorFrame& fr) {
	NCOp acc(fr);
	for (const auto& m : expand(e)) {
		// reduce the primitive string right to left
		NCOp t = NCOp::constant(fr, Rat(1));
		for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
			NCOp prim = it->first ? NCOp::generator(fr, it->second)
			                      : NCOp::from_mpoly(fr, MPoly::var(fr.n(), fr.cap(), it->second));
			t = nc_mul(prim, t);
		}
		acc += t.scaled(m.coef);
	}
	return acc;
}

}

NCOp nc_normalize(const OpExprPtr& e, const AnchorFrame& frame, NormalizeStrategy strategy) {
	if (!e)
		throw domain_error("nc_normalize: empty expression");
	if (strategy == NormalizeStrategy::BottomUpLeft)
		return eval_bottom_up(e, frame);
	return eval_expand_rightmost(e, frame);
}

}
