#include "pathalg/json_io.hpp"

#include <fstream>
#include <functional>

#include "pathalg/errors.hpp"
#include "pathalg/freelie.hpp"

namespace pathalg {

static int get_int(const Json& j, const char* key) {
	if (!j.contains(key) || !j[key].is_number_integer())
		throw domain_error(std::string("json: missing integer field '") + key + "'");
	return j[key].get<int>();
}

static Rat get_rat(const Json& v) {
	if (v.is_number_integer())
		return Rat((long long)v.get<long long>());
	if (v.is_string())
		return Rat::parse(v.get<std::string>());
	throw domain_error("json: rational must be a string or integer");
}

Json mpoly_to_json(const MPoly& p) {
	Json terms = Json::array();
	for (auto& [e, c] : p.terms()) {
		Json t;
		t["c"] = c.str();
		t["e"] = e;
		terms.push_back(std::move(t));
	}
	return Json{{"nvars", p.nvars()}, {"cap", p.cap()}, {"terms", std::move(terms)}};
}

MPoly mpoly_from_json(const Json& j) {
	MPoly p(get_int(j, "nvars"), get_int(j, "cap"));
	if (!j.contains("terms") || !j["terms"].is_array())
		throw domain_error("json: mpoly needs a 'terms' array");
	for (auto& t : j["terms"]) {
		if (!t.contains("e") || !t["e"].is_array())
			throw domain_error("json: mpoly term needs exponents 'e'");
		Expo e;
		for (auto& k : t["e"])
			e.push_back(k.get<int>());
		p.add_term(e, get_rat(t.at("c")));
	}
	return p;
}

Json matpoly_to_json(const MatPoly& m) {
	Json rows = Json::array();
	for (int r = 0; r < m.N(); ++r) {
		Json row = Json::array();
		for (int c = 0; c < m.N(); ++c)
			row.push_back(mpoly_to_json(m.at(r, c)));
		rows.push_back(std::move(row));
	}
	return rows;
}

MatPoly matpoly_from_json(const Json& j) {
	if (!j.is_array() || j.empty())
		throw domain_error("json: matpoly must be a nonempty array of rows");
	const int N = (int)j.size();
	MatPoly m;
	for (int r = 0; r < N; ++r) {
		if (!j[(std::size_t)r].is_array() || (int)j[(std::size_t)r].size() != N)
			throw dimension_error("json: matpoly rows must form a square");
		for (int c = 0; c < N; ++c) {
			MPoly p = mpoly_from_json(j[(std::size_t)r][(std::size_t)c]);
			if (r == 0 && c == 0)
				m = MatPoly(N, p.nvars(), p.cap());
			m.at(r, c) = std::move(p);
		}
	}
	return m;
}

Json ratmat_to_json(const RatMat& m) {
	Json rows = Json::array();
	for (int r = 0; r < m.N(); ++r) {
		Json row = Json::array();
		for (int c = 0; c < m.N(); ++c)
			row.push_back(m.at(r, c).str());
		rows.push_back(std::move(row));
	}
	return rows;
}

RatMat ratmat_from_json(const Json& j) {
	if (!j.is_array() || j.empty())
		throw domain_error("json: matrix must be a nonempty array of rows");
	const int N = (int)j.size();
	RatMat m(N);
	for (int r = 0; r < N; ++r) {
		if (!j[(std::size_t)r].is_array() || (int)j[(std::size_t)r].size() != N)
			throw dimension_error("json: matrix rows must form a square");
		for (int c = 0; c < N; ++c)
			m.at(r, c) = get_rat(j[(std::size_t)r][(std::size_t)c]);
	}
	return m;
}

static Json frame_to_json(const AnchorFrame& fr) {
	if (fr.is_coordinate())
		return Json("coordinate");
	Json anchors = Json::array();
	for (auto& v : fr.anchors()) {
		Json comp = Json::array();
		for (auto& f : v.comp)
			comp.push_back(mpoly_to_json(f));
		anchors.push_back(std::move(comp));
	}
	return anchors;
}

static AnchorFrame frame_from_json(const Json& j, int n, int cap) {
	if (j.is_string() && j.get<std::string>() == "coordinate")
		return AnchorFrame::coordinate(n, cap);
	if (!j.is_array())
		throw domain_error("json: frame must be \"coordinate\" or an anchor array");
	std::vector<VectorField> anchors;
	for (auto& a : j) {
		VectorField v;
		for (auto& f : a)
			v.comp.push_back(mpoly_from_json(f));
		anchors.push_back(std::move(v));
	}
	return AnchorFrame::from_anchors(n, cap, std::move(anchors));
}

Json ncop_to_json(const NCOp& p) {
	Json terms = Json::array();
	for (auto& [w, f] : p.terms()) {
		Json t;
		t["w"] = w;
		t["f"] = mpoly_to_json(f);
		terms.push_back(std::move(t));
	}
	return Json{{"n", p.n()},
	            {"cap", p.cap()},
	            {"frame", frame_to_json(p.frame())},
	            {"terms", std::move(terms)}};
}

NCOp ncop_from_json(const Json& j) {
	int n = get_int(j, "n"), cap = get_int(j, "cap");
	if (!j.contains("frame"))
		throw domain_error("json: ncop needs a 'frame'");
	NCOp p(frame_from_json(j["frame"], n, cap));
	for (auto& t : j.at("terms")) {
		Word w;
		for (auto& l : t.at("w"))
			w.push_back(l.get<int>());
		p.add_term(w, mpoly_from_json(t.at("f")));
	}
	return p;
}

Word hall_key_parse(const std::string& s) {
	// Recursive descent over "[u,v]" with integer leaves, then insist the
	// tree is the standard bracketing of its word.
	std::size_t pos = 0;
	std::function<Word()> rec = [&]() -> Word {
		if (pos >= s.size())
			throw domain_error("hall key: truncated");
		if (s[pos] == '[') {
			++pos;
			Word left = rec();
			if (pos >= s.size() || s[pos] != ',')
				throw domain_error("hall key: expected ','");
			++pos;
			Word right = rec();
			if (pos >= s.size() || s[pos] != ']')
				throw domain_error("hall key: expected ']'");
			++pos;
			return word_cat(left, right);
		}
		std::size_t start = pos;
		while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9')
			++pos;
		if (pos == start)
			throw domain_error("hall key: expected an index");
		return Word{std::stoi(s.substr(start, pos - start))};
	};
	Word w = rec();
	if (pos != s.size())
		throw domain_error("hall key: trailing characters");
	if (!is_lyndon(w) || bracket_str(w) != s)
		throw domain_error("hall key: not a standard bracketing: '" + s + "'");
	return w;
}

Json pelem_to_json(const PElem& x) {
	Json terms = Json::array();
	for (auto& [h, f] : x.terms()) {
		Json t;
		t["h"] = bracket_str(h);
		t["f"] = mpoly_to_json(f);
		terms.push_back(std::move(t));
	}
	return Json{{"n", x.n()}, {"cap", x.cap()}, {"terms", std::move(terms)}};
}

PElem pelem_from_json(const Json& j) {
	PElem x(get_int(j, "n"), get_int(j, "cap"));
	for (auto& t : j.at("terms"))
		x.add_term(hall_key_parse(t.at("h").get<std::string>()),
		           mpoly_from_json(t.at("f")));
	return x;
}

Json connection_to_json(const Connection& c) {
	Json comps = Json::array();
	for (int i = 1; i <= c.n(); ++i)
		comps.push_back(matpoly_to_json(c.A(i)));
	return Json{{"n", c.n()}, {"N", c.N()}, {"cap", c.cap()}, {"A", std::move(comps)}};
}

Connection connection_from_json(const Json& j) {
	Connection c(get_int(j, "n"), get_int(j, "N"), get_int(j, "cap"));
	if (!j.contains("A") || !j["A"].is_array() || (int)j["A"].size() != c.n())
		throw dimension_error("json: connection needs n components in 'A'");
	for (int i = 1; i <= c.n(); ++i)
		c.set_A(i, matpoly_from_json(j["A"][(std::size_t)(i - 1)]));
	return c;
}

Json jetdata_to_json(const JetData& j) {
	Json values = Json::array();
	for (auto& [s, m] : j.values) {
		Json v;
		v["seq"] = s;
		v["m"] = ratmat_to_json(m);
		values.push_back(std::move(v));
	}
	return Json{{"n", j.n}, {"N", j.N}, {"Dmax", j.Dmax}, {"values", std::move(values)}};
}

JetData jetdata_from_json(const Json& j) {
	JetData out{get_int(j, "n"), get_int(j, "N"), get_int(j, "Dmax"), {}};
	for (auto& v : j.at("values")) {
		Word s;
		for (auto& l : v.at("seq"))
			s.push_back(l.get<int>());
		if (!is_admissible_seq(s, out.n))
			throw domain_error("json: inadmissible jet sequence");
		RatMat m = ratmat_from_json(v.at("m"));
		if (m.N() != out.N)
			throw dimension_error("json: jet matrix size mismatch");
		out.values.emplace(std::move(s), std::move(m));
	}
	return out;
}

Json plpath_to_json(const PLPath& p) {
	Json pts = Json::array();
	for (auto& pt : p.points) {
		Json row = Json::array();
		for (auto& c : pt)
			row.push_back(c.str());
		pts.push_back(std::move(row));
	}
	return Json{{"n", p.n}, {"points", std::move(pts)}};
}

PLPath plpath_from_json(const Json& j) {
	int n = get_int(j, "n");
	std::vector<std::vector<Rat>> pts;
	for (auto& row : j.at("points")) {
		std::vector<Rat> pt;
		for (auto& c : row)
			pt.push_back(get_rat(c));
		pts.push_back(std::move(pt));
	}
	return PLPath(n, std::move(pts));
}

Json chen_to_json(const ChenSeries& e) {
	Json target = Json::array();
	for (auto& c : e.target())
		target.push_back(c.str());
	Json terms = Json::array();
	for (auto& [w, c] : e.integrals()) {
		Json t;
		t["w"] = w;
		t["v"] = c.str();
		terms.push_back(std::move(t));
	}
	return Json{{"n", e.n()},
	            {"cap", e.cap()},
	            {"target", std::move(target)},
	            {"terms", std::move(terms)}};
}

ChenSeries chen_from_json(const Json& j) {
	std::vector<Rat> target;
	for (auto& c : j.at("target"))
		target.push_back(get_rat(c));
	ChenSeries e(get_int(j, "n"), get_int(j, "cap"), std::move(target));
	for (auto& t : j.at("terms")) {
		Word w;
		for (auto& l : t.at("w"))
			w.push_back(l.get<int>());
		if (w.empty())
			continue;  // fixed at 1 by construction
		e.set_coeff(w, get_rat(t.at("v")));
	}
	return e;
}

Json freeness_to_json(const std::vector<FreenessRow>& rows) {
	Json out = Json::array();
	for (auto& r : rows)
		out.push_back(Json{{"d", r.d},
		                   {"gen_count", r.gen_count},
		                   {"schur_dim", r.schur},
		                   {"fl_dim", r.fl_dim},
		                   {"free_graded_dim", r.free_graded_dim}});
	return out;
}

Json load_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in)
		throw domain_error("cannot open file: " + path);
	Json j = Json::parse(in, nullptr, false);
	if (j.is_discarded())
		throw domain_error("malformed JSON in " + path);
	return j;
}

}
