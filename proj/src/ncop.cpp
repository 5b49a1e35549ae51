#include "pathalg/ncop.hpp"

#include "pathalg/errors.hpp"

namespace pathalg {

MPoly vf_apply(const VectorField& v, const MPoly& f) {
	MPoly r(f.nvars(), f.cap());
	for (int i = 1; i <= (int)v.comp.size(); ++i)
		r += v.comp[(std::size_t)(i - 1)] * f.partial(i);
	return r;
}

VectorField vf_bracket(const VectorField& v, const VectorField& w) {
	if (v.n() != w.n())
		throw dimension_error("vf_bracket: dimension mismatch");
	VectorField r;
	r.comp.reserve(v.comp.size());
	for (int i = 0; i < v.n(); ++i)
		r.comp.push_back(vf_apply(v, w.comp[(std::size_t)i]) -
		                 vf_apply(w, v.comp[(std::size_t)i]));
	return r;
}

AnchorFrame::AnchorFrame(int n, int cap, std::vector<VectorField> anchors)
	: n_(n), cap_(cap), anchors_(std::move(anchors)) {}

AnchorFrame AnchorFrame::coordinate(int n, int cap) {
	if (n < 1)
		throw domain_error("frame: need n >= 1");
	return AnchorFrame(n, cap, {});
}

AnchorFrame AnchorFrame::from_anchors(int n, int cap, std::vector<VectorField> anchors) {
	if ((int)anchors.size() != n)
		throw dimension_error("frame: need one anchor field per generator");
	for (const auto& a : anchors) {
		if (a.n() != n)
			throw dimension_error("frame: anchor field has wrong dimension");
		for (const auto& c : a.comp)
			if (c.nvars() != n || c.cap() != cap)
				throw dimension_error("frame: anchor component has wrong nvars or cap");
	}
	return AnchorFrame(n, cap, std::move(anchors));
}

MPoly AnchorFrame::b(int i, const MPoly& f) const {
	if (i < 1 || i > n_)
		throw dimension_error("frame: generator index out of range");
	if (is_coordinate())
		return f.partial(i);
	return vf_apply(anchors_[(std::size_t)(i - 1)], f);
}

NCOp NCOp::from_mpoly(const AnchorFrame& fr, const MPoly& f) {
	if (f.nvars() != fr.n() || f.cap() != fr.cap())
		throw dimension_error("NCOp: coefficient has wrong nvars or cap");
	NCOp p(fr);
	p.add_term(Word{}, f);
	return p;
}

NCOp NCOp::constant(const AnchorFrame& fr, const Rat& c) {
	return from_mpoly(fr, MPoly::constant(fr.n(), fr.cap(), c));
}

NCOp NCOp::generator(const AnchorFrame& fr, int i) {
	if (i < 1 || i > fr.n())
		throw dimension_error("NCOp: generator index out of range");
	NCOp p(fr);
	p.add_term(Word{i}, MPoly::constant(fr.n(), fr.cap(), Rat(1)));
	return p;
}

NCOp NCOp::from_word(const AnchorFrame& fr, const Word& w) {
	for (int i : w)
		if (i < 1 || i > fr.n())
			throw dimension_error("NCOp: word letter out of range");
	NCOp p(fr);
	p.add_term(w, MPoly::constant(fr.n(), fr.cap(), Rat(1)));
	return p;
}

MPoly NCOp::coeff(const Word& w) const {
	auto it = terms_.find(w);
	return it == terms_.end() ? MPoly(n(), cap()) : it->second;
}

void NCOp::add_term(const Word& w, const MPoly& f) {
	if (f.nvars() != n() || f.cap() != cap())
		throw dimension_error("NCOp: coefficient has wrong nvars or cap");
	if (f.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(w, f);
	if (!inserted) {
		it->second += f;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

NCOp NCOp::operator-() const {
	NCOp r(frame_);
	for (const auto& [w, f] : terms_)
		r.terms_.emplace(w, -f);
	return r;
}

NCOp& NCOp::operator+=(const NCOp& o) {
	if (!(frame_ == o.frame_))
		throw dimension_error("NCOp add: frame mismatch");
	for (const auto& [w, f] : o.terms_)
		add_term(w, f);
	return *this;
}

NCOp& NCOp::operator-=(const NCOp& o) {
	if (!(frame_ == o.frame_))
		throw dimension_error("NCOp sub: frame mismatch");
	for (const auto& [w, f] : o.terms_)
		add_term(w, -f);
	return *this;
}

NCOp NCOp::left_mul(const MPoly& f) const {
	NCOp r(frame_);
	for (const auto& [w, g] : terms_)
		r.add_term(w, f * g);
	return r;
}

NCOp NCOp::scaled(const Rat& c) const {
	NCOp r(frame_);
	if (c.is_zero())
		return r;
	for (const auto& [w, g] : terms_)
		r.terms_.emplace(w, g.scaled(c));
	return r;
}

NCOp NCOp::word_slice(int d) const {
	NCOp r(frame_);
	for (const auto& [w, f] : terms_)
		if ((int)w.size() == d)
			r.terms_.emplace(w, f);
	return r;
}

namespace {

// D_u g as a map word -> coefficient, via D_i h D_w = h D_{iw} + b_i(h) D_w
// applied letter by letter from the right end of u.
std::map<Word, MPoly, LenLexLess> push_word_through(const AnchorFrame& fr, const Word& u,
                                                    const MPoly& g) {
	std::map<Word, MPoly, LenLexLess> cur;
	cur.emplace(Word{}, g);
	for (auto it = u.rbegin(); it != u.rend(); ++it) {
		int i = *it;
		std::map<Word, MPoly, LenLexLess> next;
		auto add = [&next](Word w, MPoly h) {
			if (h.is_zero())
				return;
			auto [jt, inserted] = next.emplace(std::move(w), h);
			if (!inserted) {
				jt->second += h;
				if (jt->second.is_zero())
					next.erase(jt);
			}
		};
		for (const auto& [w, h] : cur) {
			Word iw;
			iw.reserve(w.size() + 1);
			iw.push_back(i);
			iw.insert(iw.end(), w.begin(), w.end());
			add(std::move(iw), h);
			add(w, fr.b(i, h));
		}
		cur = std::move(next);
	}
	return cur;
}

}

NCOp nc_mul(const NCOp& a, const NCOp& b) {
	if (!(a.frame() == b.frame()))
		throw dimension_error("nc_mul: frame mismatch");
	NCOp r(a.frame());
	for (const auto& [u, f] : a.terms()) {
		for (const auto& [v, g] : b.terms()) {
			auto pushed = push_word_through(a.frame(), u, g);
			for (const auto& [w, h] : pushed)
				r.add_term(word_cat(w, v), f * h);
		}
	}
	return r;
}

NCOp nc_comm(const NCOp& a, const NCOp& b) {
	return nc_mul(a, b) - nc_mul(b, a);
}

NCOp nc_pow(const NCOp& a, unsigned k) {
	NCOp r = NCOp::constant(a.frame(), Rat(1));
	for (unsigned j = 0; j < k; ++j)
		r = nc_mul(r, a);
	return r;
}

MPoly counit(const NCOp& p) {
	return p.coeff(Word{});
}

MPoly nc_apply(const NCOp& p, const MPoly& f) {
	MPoly r(p.n(), p.cap());
	for (const auto& [w, c] : p.terms()) {
		MPoly g = f;
		for (auto it = w.rbegin(); it != w.rend(); ++it)
			g = p.frame().b(*it, g);
		r += c * g;
	}
	return r;
}

std::map<Word, MPoly, LenLexLess> smbl(const NCOp& p, int d) {
	std::map<Word, MPoly, LenLexLess> r;
	for (const auto& [w, f] : p.terms())
		if ((int)w.size() == d)
			r.emplace(w, f);
	return r;
}

std::vector<std::pair<Word, Word>> word_unshuffles(const Word& w) {
	std::vector<std::pair<Word, Word>> out;
	const std::size_t p = w.size();
	out.reserve((std::size_t)1 << p);
	for (std::size_t mask = 0; mask < ((std::size_t)1 << p); ++mask) {
		Word u, v;
		for (std::size_t k = 0; k < p; ++k)
			((mask >> k) & 1 ? u : v).push_back(w[k]);
		out.emplace_back(std::move(u), std::move(v));
	}
	return out;
}

void TensorOp::add_term(const Word& u, const Word& v, const MPoly& f) {
	if (f.nvars() != frame_.n() || f.cap() != frame_.cap())
		throw dimension_error("TensorOp: coefficient has wrong nvars or cap");
	if (f.is_zero())
		return;
	auto [it, inserted] = terms_.emplace(Key{u, v}, f);
	if (!inserted) {
		it->second += f;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

TensorOp TensorOp::operator-() const {
	TensorOp r(frame_);
	for (const auto& [k, f] : terms_)
		r.terms_.emplace(k, -f);
	return r;
}

TensorOp& TensorOp::operator+=(const TensorOp& o) {
	if (!(frame_ == o.frame_))
		throw dimension_error("TensorOp add: frame mismatch");
	for (const auto& [k, f] : o.terms_)
		add_term(k.first, k.second, f);
	return *this;
}

TensorOp& TensorOp::operator-=(const TensorOp& o) {
	if (!(frame_ == o.frame_))
		throw dimension_error("TensorOp sub: frame mismatch");
	for (const auto& [k, f] : o.terms_)
		add_term(k.first, k.second, -f);
	return *this;
}

TensorOp tensor_mul(const TensorOp& a, const TensorOp& b) {
	if (!(a.frame() == b.frame()))
		throw dimension_error("tensor_mul: frame mismatch");
	TensorOp r(a.frame());
	for (const auto& [ka, f] : a.terms()) {
		NCOp left_a(a.frame());
		left_a.add_term(ka.first, f);
		for (const auto& [kb, g] : b.terms()) {
			NCOp left_b(b.frame());
			left_b.add_term(kb.first, g);
			NCOp prod = nc_mul(left_a, left_b);
			Word right = word_cat(ka.second, kb.second);
			for (const auto& [w, h] : prod.terms())
				r.add_term(w, right, h);
		}
	}
	return r;
}

TensorOp coproduct(const NCOp& p) {
	TensorOp r(p.frame());
	for (const auto& [w, f] : p.terms())
		for (const auto& [u, v] : word_unshuffles(w))
			r.add_term(u, v, f);
	return r;
}

bool takeuchi_check(const TensorOp& t, int max_test_degree) {
	const AnchorFrame& fr = t.frame();
	const int n = fr.n();
	// enumerate monomials of degree 1..max_test_degree
	std::vector<Expo> monos;
	Expo e((std::size_t)n, 0);
	auto rec = [&](auto&& self, int pos, int left) -> void {
		if (pos == n) {
			if (expo_deg(e) >= 1)
				monos.push_back(e);
			return;
		}
		for (int k = 0; k <= left; ++k) {
			e[(std::size_t)pos] = k;
			self(self, pos + 1, left - k);
		}
		e[(std::size_t)pos] = 0;
	};
	rec(rec, 0, max_test_degree);
	for (const auto& m : monos) {
		MPoly a = MPoly::monomial(n, fr.cap(), m, Rat(1));
		NCOp a_op = NCOp::from_mpoly(fr, a);
		TensorOp lhs(fr), rhs(fr);
		for (const auto& [k, f] : t.terms()) {
			// (f D_u a) (x) D_v
			NCOp ua(fr);
			ua.add_term(k.first, f);
			ua = nc_mul(ua, a_op);
			for (const auto& [w, h] : ua.terms())
				lhs.add_term(w, k.second, h);
			// f (D_u (x) D_v a): left coefficients of D_v a slide to the front
			NCOp va = nc_mul(NCOp::from_word(fr, k.second), a_op);
			for (const auto& [s, h] : va.terms())
				rhs.add_term(k.first, s, f * h);
		}
		if (!(lhs == rhs))
			return false;
	}
	return true;
}

}
