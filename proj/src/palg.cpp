#include "pathalg/palg.hpp"

#include <utility>

#include "pathalg/errors.hpp"

namespace pathalg {

MPoly PElem::coeff(const Word& h) const {
	auto it = terms_.find(h);
	return it == terms_.end() ? MPoly(n_, cap_) : it->second;
}

void PElem::add_term(const Word& hall, const MPoly& f) {
	if (f.nvars() != n_ || f.cap() != cap_)
		throw dimension_error("coefficient shape mismatch");
	if (hall.empty() || !is_lyndon(hall))
		throw domain_error("basis key is not a Lyndon word");
	for (int c : hall)
		if (c < 1 || c > n_) throw dimension_error("letter out of range");
	if (f.is_zero()) return;
	auto [it, fresh] = terms_.emplace(hall, f);
	if (!fresh) {
		it->second += f;
		if (it->second.is_zero()) terms_.erase(it);
	}
}

PElem PElem::operator-() const {
	PElem r(n_, cap_);
	for (auto& [h, f] : terms_) r.terms_.emplace(h, -f);
	return r;
}

PElem& PElem::operator+=(const PElem& o) {
	if (n_ != o.n_ || cap_ != o.cap_) throw dimension_error("PElem shape mismatch");
	for (auto& [h, f] : o.terms_) add_term(h, f);
	return *this;
}

PElem& PElem::operator-=(const PElem& o) {
	if (n_ != o.n_ || cap_ != o.cap_) throw dimension_error("PElem shape mismatch");
	for (auto& [h, f] : o.terms_) add_term(h, -f);
	return *this;
}

PElem PElem::scaled(const MPoly& f) const {
	PElem r(n_, cap_);
	for (auto& [h, g] : terms_) r.add_term(h, f * g);
	return r;
}

PElem PElem::scaled(const Rat& c) const {
	PElem r(n_, cap_);
	if (c.is_zero()) return r;
	for (auto& [h, g] : terms_) r.terms_.emplace(h, g.scaled(c));
	return r;
}

PElem PElem::degree_slice(int d) const {
	PElem r(n_, cap_);
	for (auto& [h, g] : terms_)
		if ((int)h.size() == d) r.terms_.emplace(h, g);
	return r;
}

NCOp p_to_nc(const PElem& x) {
	AnchorFrame fr = AnchorFrame::coordinate(x.n(), x.cap());
	NCOp r(fr);
	for (auto& [h, f] : x.terms())
		for (auto& [w, c] : expand_to_words(h))
			r.add_term(w, f.scaled(c));
	return r;
}

PElem nc_to_p(const NCOp& p) {
	if (!(p.frame() == AnchorFrame::coordinate(p.n(), p.cap())))
		throw domain_error("conversion requires the coordinate frame");
	PElem out(p.n(), p.cap());
	NCOp rest = p;
	// Strip word-length slices from the top; each must be a Lie element
	// with polynomial coefficients.
	while (!rest.terms().empty()) {
		int d = rest.op_deg();
		if (d == 0) throw not_in_p_error("degree-0 component present");
		std::map<Word, MPoly, LenLexLess> top;
		NCOp slice = rest.word_slice(d);
		for (auto& [w, f] : slice.terms()) top.emplace(w, f);
		auto hall = lie_normal_form<MPoly>(std::move(top));
		for (auto& [h, f] : hall) {
			out.add_term(h, f);
			for (auto& [w, c] : expand_to_words(h))
				rest.add_term(w, -f.scaled(c));
		}
		if (rest.op_deg() >= d && !rest.word_slice(d).terms().empty())
			throw not_in_p_error("residual after Lie extraction");
	}
	return out;
}

PElem p_bracket(const PElem& x, const PElem& y) {
	if (x.n() != y.n() || x.cap() != y.cap())
		throw dimension_error("PElem shape mismatch");
	return nc_to_p(nc_comm(p_to_nc(x), p_to_nc(y)));
}

VectorField anchor(const PElem& x) {
	VectorField v;
	v.comp.assign(x.n(), MPoly(x.n(), x.cap()));
	for (auto& [h, f] : x.terms())
		if (h.size() == 1) v.comp[h[0] - 1] = f;
	return v;
}

void Bivector::add(int i, int j, const MPoly& g) {
	if (i < 1 || j < 1 || i > n || j > n) throw dimension_error("index out of range");
	if (g.nvars() != n || g.cap() != cap) throw dimension_error("component shape mismatch");
	if (i == j) {
		if (!g.is_zero()) throw domain_error("diagonal bivector component");
		return;
	}
	// Antisymmetry: store in (i < j) position.
	if (i > j) { add(j, i, -g); return; }
	auto [it, fresh] = comp.emplace(std::make_pair(i, j), g);
	if (!fresh) {
		it->second += g;
		if (it->second.is_zero()) comp.erase(it);
	}
}

PElem c_map(const Bivector& b) {
	PElem r(b.n, b.cap);
	for (auto& [ij, g] : b.comp) {
		Word h = {ij.first, ij.second};  // i < j so this is Lyndon
		r.add_term(h, g);
	}
	return r;
}

}
