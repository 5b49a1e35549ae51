#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pathalg/mpoly.hpp"
#include "pathalg/word.hpp"

namespace pathalg {

// Polynomial vector field: components v_1..v_n with v = sum v_i d/dx_i.
struct VectorField {
	std::vector<MPoly> comp;

	int n() const { return (int)comp.size(); }
	bool operator==(const VectorField& o) const { return comp == o.comp; }
};

MPoly vf_apply(const VectorField& v, const MPoly& f);
VectorField vf_bracket(const VectorField& v, const VectorField& w);

// Frame of generators D_1..D_n acting on functions through anchor vector
// fields b_i. The coordinate frame has b_i = d/dx_i.
class AnchorFrame {
public:
	static AnchorFrame coordinate(int n, int cap);
	static AnchorFrame from_anchors(int n, int cap, std::vector<VectorField> anchors);

	int n() const { return n_; }
	int cap() const { return cap_; }
	bool is_coordinate() const { return anchors_.empty(); }
	const std::vector<VectorField>& anchors() const { return anchors_; }

	// b_i(f), the commutator [D_i, f] in the rewrite rule.
	MPoly b(int i, const MPoly& f) const;

	bool operator==(const AnchorFrame& o) const {
		return n_ == o.n_ && cap_ == o.cap_ && anchors_ == o.anchors_;
	}

private:
	AnchorFrame(int n, int cap, std::vector<VectorField> anchors);
	int n_;
	int cap_;
	std::vector<VectorField> anchors_;  // empty for the coordinate frame
};

// Differential operator in left normal form: sum over words w of f_w(x) D_w.
// Multiplication rewrites D_i f -> f D_i + b_i(f) until every coefficient
// stands to the left of its word.
class NCOp {
public:
	using TermMap = std::map<Word, MPoly, LenLexLess>;

	explicit NCOp(AnchorFrame frame) : frame_(std::move(frame)) {}

	static NCOp from_mpoly(const AnchorFrame& fr, const MPoly& f);
	static NCOp constant(const AnchorFrame& fr, const Rat& c);
	static NCOp generator(const AnchorFrame& fr, int i);
	static NCOp from_word(const AnchorFrame& fr, const Word& w);

	const AnchorFrame& frame() const { return frame_; }
	int n() const { return frame_.n(); }
	int cap() const { return frame_.cap(); }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	// Operator order: max word length in normal form (-1 for the zero op).
	int op_deg() const { return terms_.empty() ? -1 : (int)terms_.rbegin()->first.size(); }

	MPoly coeff(const Word& w) const;
	void add_term(const Word& w, const MPoly& f);

	NCOp operator-() const;
	NCOp& operator+=(const NCOp& o);
	NCOp& operator-=(const NCOp& o);
	friend NCOp operator+(NCOp a, const NCOp& b) { return a += b; }
	friend NCOp operator-(NCOp a, const NCOp& b) { return a -= b; }

	NCOp left_mul(const MPoly& f) const;  // f * P
	NCOp scaled(const Rat& c) const;
	NCOp word_slice(int d) const;  // terms with |w| == d

	bool operator==(const NCOp& o) const {
		return frame_ == o.frame_ && terms_ == o.terms_;
	}
	bool operator!=(const NCOp& o) const { return !(*this == o); }

private:
	AnchorFrame frame_;
	TermMap terms_;
};

NCOp nc_mul(const NCOp& a, const NCOp& b);
NCOp nc_comm(const NCOp& a, const NCOp& b);
NCOp nc_pow(const NCOp& a, unsigned k);

// Counit: P . 1 (apply the operator to the constant function 1); in normal
// form this is the empty-word coefficient.
MPoly counit(const NCOp& p);

// P applied to a function.
MPoly nc_apply(const NCOp& p, const MPoly& f);

// Word-length-d slice as a word-indexed coefficient map.
std::map<Word, MPoly, LenLexLess> smbl(const NCOp& p, int d);

// All ordered complementary splittings of w (sub-multiset positions keep
// their order), with multiplicity.
std::vector<std::pair<Word, Word>> word_unshuffles(const Word& w);

// Element of the left tensor square, stored in canonical left form:
// sum f_{u,v}(x) (D_u (x) D_v) with every function pulled to the front.
class TensorOp {
public:
	using Key = std::pair<Word, Word>;
	struct KeyLess {
		bool operator()(const Key& a, const Key& b) const {
			LenLexLess less;
			if (a.first != b.first)
				return less(a.first, b.first);
			return less(a.second, b.second);
		}
	};
	using TermMap = std::map<Key, MPoly, KeyLess>;

	explicit TensorOp(AnchorFrame frame) : frame_(std::move(frame)) {}

	const AnchorFrame& frame() const { return frame_; }
	const TermMap& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(const Word& u, const Word& v, const MPoly& f);

	TensorOp operator-() const;
	TensorOp& operator+=(const TensorOp& o);
	TensorOp& operator-=(const TensorOp& o);
	friend TensorOp operator+(TensorOp a, const TensorOp& b) { return a += b; }
	friend TensorOp operator-(TensorOp a, const TensorOp& b) { return a -= b; }

	bool operator==(const TensorOp& o) const {
		return frame_ == o.frame_ && terms_ == o.terms_;
	}
	bool operator!=(const TensorOp& o) const { return !(*this == o); }

private:
	AnchorFrame frame_;
	TermMap terms_;
};

// Componentwise product: left components multiply as operators, right
// components (pure words) concatenate.
TensorOp tensor_mul(const TensorOp& a, const TensorOp& b);

// Coproduct: f D_w -> f sum over ordered complementary splittings (u, v)
// of D_u (x) D_v. Algebra map into the Takeuchi product.
TensorOp coproduct(const NCOp& p);

// Takeuchi membership: sum u_i a (x) v_i == sum u_i (x) v_i a for every
// monomial a of total degree <= max_test_degree, both sides re-normalized
// to canonical left form.
bool takeuchi_check(const TensorOp& t, int max_test_degree);

}
