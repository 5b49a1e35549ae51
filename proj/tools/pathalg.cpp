#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "pathalg/checks.hpp"
#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/errors.hpp"
#include "pathalg/freelie.hpp"
#include "pathalg/homology.hpp"
#include "pathalg/json_io.hpp"
#include "pathalg/palg.hpp"
#include "pathalg/parser.hpp"
#include "pathalg/printing.hpp"

namespace {

using namespace pathalg;

struct Globals {
	int n = 2;
	int cap = 4;
	std::uint64_t seed = 0;
	bool json = false;
	int jobs = 0;

	void apply() const {
#ifdef _OPENMP
		if (jobs > 0)
			omp_set_num_threads(jobs);
#else
		(void)jobs;
#endif
	}
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

NCOp normalize_arg(const std::string& src, int n, int cap) {
	return nc_normalize(parse_expr(src), AnchorFrame::coordinate(n, cap));
}

void cmd_hall(const Globals& g, int max_deg) {
	if (g.json) {
		Json basis = Json::array();
		for (int d = 1; d <= max_deg; ++d)
			for (auto& w : lyndon_words(g.n, d))
				basis.push_back(Json{{"d", d}, {"h", bracket_str(w)}, {"w", w}});
		emit(Json{{"n", g.n}, {"max_deg", max_deg}, {"hall", std::move(basis)}});
		return;
	}
	for (int d = 1; d <= max_deg; ++d)
		for (auto& w : lyndon_words(g.n, d))
			std::cout << bracket_str(w) << "\n";
}

void cmd_nf(const Globals& g, const std::string& src) {
	NCOp p = normalize_arg(src, g.n, g.cap);
	if (g.json)
		emit(ncop_to_json(p));
	else
		std::cout << ncop_str(p) << "\n";
}

void cmd_bracket(const Globals& g, const std::string& xs, const std::string& ys) {
	PElem x = nc_to_p(normalize_arg(xs, g.n, g.cap));
	PElem y = nc_to_p(normalize_arg(ys, g.n, g.cap));
	PElem out = p_bracket(x, y);
	if (g.json)
		emit(pelem_to_json(out));
	else
		std::cout << pelem_str(out) << "\n";
}

void cmd_anchor(const Globals& g, const std::string& xs) {
	VectorField v = anchor(nc_to_p(normalize_arg(xs, g.n, g.cap)));
	if (g.json) {
		Json comp = Json::array();
		for (auto& f : v.comp)
			comp.push_back(mpoly_to_json(f));
		emit(comp);
	} else {
		std::cout << vf_str(v) << "\n";
	}
}

void cmd_curv(const Globals& g, const std::string& conn_file, int i, int j) {
	Connection c = connection_from_json(load_json_file(conn_file));
	MatPoly f = curvature(c, i, j);
	if (g.json)
		emit(matpoly_to_json(f));
	else
		std::cout << matpoly_str(f) << "\n";
}

void cmd_jets(const Globals& g, const std::string& conn_file, int dmax) {
	Connection c = connection_from_json(load_json_file(conn_file));
	JetData j = jets(c, dmax);
	if (g.json) {
		emit(jetdata_to_json(j));
		return;
	}
	for (auto& [seq, m] : j.values)
		std::cout << seq_str(seq) << ": " << ratmat_str(m) << "\n";
}

void cmd_reconstruct(const Globals& g, const std::string& jets_file) {
	JetData j = jetdata_from_json(load_json_file(jets_file));
	Connection c = reconstruct(j, g.cap);
	if (g.json) {
		emit(connection_to_json(c));
		return;
	}
	for (int i = 1; i <= c.n(); ++i)
		std::cout << "A" << i << " = " << matpoly_str(c.A(i)) << "\n";
}

void cmd_chen(const Globals& g, const std::string& path_file) {
	PLPath p = plpath_from_json(load_json_file(path_file));
	ChenSeries e = chen_series(p, g.cap);
	if (g.json) {
		emit(chen_to_json(e));
		return;
	}
	std::cout << "target: " << point_str(e.target()) << "\n";
	for (auto& [w, v] : e.integrals())
		std::cout << "I(" << word_str(w, e.n()) << ") = " << v.str() << "\n";
}

void cmd_transport(const Globals& g, const std::string& path_file,
                   const std::string& conn_file) {
	PLPath p = plpath_from_json(load_json_file(path_file));
	Connection c = connection_from_json(load_json_file(conn_file));
	ChenSeries e = chen_series(p, g.cap);
	RatMat t = transport(e, c);
	if (g.json)
		emit(ratmat_to_json(t));
	else
		std::cout << ratmat_str(t) << "\n";
}

void cmd_source(const Globals& g, const std::string& path_file,
                const std::string& expr) {
	PLPath p = plpath_from_json(load_json_file(path_file));
	ChenSeries e = chen_series(p, g.cap);
	NCOp a = nc_normalize(parse_expr(expr), AnchorFrame::coordinate(p.n, g.cap));
	if (a.op_deg() > 0)
		throw domain_error("source: expression must be a function of the x_i only");
	Rat v = source_eval(e, counit(a));
	if (g.json)
		emit(Json(v.str()));
	else
		std::cout << v.str() << "\n";
}

void cmd_dims(const Globals& g, int max_deg, bool freeness) {
	if (freeness) {
		auto rows = freeness_dims(g.n, max_deg);
		if (g.json) {
			emit(freeness_to_json(rows));
			return;
		}
		for (auto& r : rows)
			std::cout << r.d << " " << r.gen_count << " " << r.schur << " "
			          << r.fl_dim << " " << r.free_graded_dim << "\n";
		return;
	}
	if (g.json) {
		Json dims = Json::array();
		for (int d = 1; d <= max_deg; ++d)
			dims.push_back(witt_dim(g.n, d));
		emit(dims);
		return;
	}
	for (int d = 1; d <= max_deg; ++d)
		std::cout << (d > 1 ? "," : "") << witt_dim(g.n, d);
	std::cout << "\n";
}

void cmd_gens(const Globals& g, int d) {
	auto gens = generators(g.n, d);
	if (g.json) {
		Json arr = Json::array();
		for (auto& s : gens)
			arr.push_back(s);
		emit(Json{{"n", g.n},
		          {"d", d},
		          {"count", (long long)gens.size()},
		          {"schur_dim", schur_dim(g.n, d)},
		          {"gens", std::move(arr)}});
		return;
	}
	for (auto& s : gens)
		std::cout << seq_str(s) << "\n";
}

int cmd_check(const Globals& g, const std::string& name, int samples) {
	CheckConfig cfg;
	cfg.n = g.n;
	cfg.cap = g.cap;
	cfg.seed = g.seed;
	cfg.samples = samples;
	auto results = run_checks(name, cfg);
	bool all = true;
	Json arr = Json::array();
	for (auto& r : results) {
		all = all && r.pass;
		if (g.json) {
			arr.push_back(Json{{"name", r.name},
			                   {"pass", r.pass},
			                   {"checks", r.checks},
			                   {"detail", r.detail}});
		} else {
			std::cout << r.name << ": " << (r.pass ? "pass" : "FAIL") << " ("
			          << r.checks << " checks)";
			if (!r.pass)
				std::cout << " — " << r.detail;
			std::cout << "\n";
		}
	}
	if (g.json)
		emit(arr);
	return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact path-algebroid calculator: free Lie algebroid sections, "
	             "noncommutative differential operators, connection jets, and "
	             "Chen series over the rationals"};
	app.require_subcommand(1);

	Globals g;
	app.add_option("--n", g.n, "number of coordinates")->capture_default_str();
	app.add_option("--cap", g.cap, "total-degree truncation cap")
	    ->capture_default_str();
	app.add_option("--seed", g.seed, "PRNG seed (std::mt19937_64)")
	    ->capture_default_str();
	app.add_flag("--json", g.json, "emit JSON instead of text");
	app.add_option("--jobs", g.jobs, "OpenMP thread count (0 = library default)")
	    ->capture_default_str();

	int rc = 0;

	auto* hall = app.add_subcommand("hall", "print the Hall (Lyndon) basis");
	hall->fallthrough();
	int hall_deg = 4;
	hall->add_option("--max-deg", hall_deg, "largest degree")->capture_default_str();
	hall->callback([&] { g.apply(); cmd_hall(g, hall_deg); });

	auto* nf = app.add_subcommand("nf", "normal form of an operator expression");
	nf->fallthrough();
	std::string nf_expr;
	nf->add_option("expr", nf_expr, "operator expression")->required();
	nf->callback([&] { g.apply(); cmd_nf(g, nf_expr); });

	auto* bracket =
	    app.add_subcommand("bracket", "algebroid bracket of two sections");
	bracket->fallthrough();
	std::string bx, by;
	bracket->add_option("x", bx, "first section")->required();
	bracket->add_option("y", by, "second section")->required();
	bracket->callback([&] { g.apply(); cmd_bracket(g, bx, by); });

	auto* anchor_cmd = app.add_subcommand("anchor", "anchor vector field of a section");
	anchor_cmd->fallthrough();
	std::string ax;
	anchor_cmd->add_option("x", ax, "section")->required();
	anchor_cmd->callback([&] { g.apply(); cmd_anchor(g, ax); });

	auto* curv = app.add_subcommand("curv", "curvature component F_ij");
	curv->fallthrough();
	std::string curv_conn;
	int curv_i = 1, curv_j = 2;
	curv->add_option("--conn", curv_conn, "connection JSON file")->required();
	curv->add_option("--i", curv_i, "first index")->capture_default_str();
	curv->add_option("--j", curv_j, "second index")->capture_default_str();
	curv->callback([&] { g.apply(); cmd_curv(g, curv_conn, curv_i, curv_j); });

	auto* jets_cmd = app.add_subcommand("jets", "covariant curvature jets at 0");
	jets_cmd->fallthrough();
	std::string jets_conn;
	int jets_dmax = 4;
	jets_cmd->add_option("--conn", jets_conn, "connection JSON file")->required();
	jets_cmd->add_option("--dmax", jets_dmax, "largest sequence length")
	    ->capture_default_str();
	jets_cmd->callback([&] { g.apply(); cmd_jets(g, jets_conn, jets_dmax); });

	auto* rec = app.add_subcommand(
	    "reconstruct", "radial-gauge connection with prescribed jets");
	rec->fallthrough();
	std::string rec_jets;
	rec->add_option("--jets", rec_jets, "jet data JSON file")->required();
	rec->callback([&] { g.apply(); cmd_reconstruct(g, rec_jets); });

	auto* chen_cmd = app.add_subcommand("chen", "Chen series of a PL path");
	chen_cmd->fallthrough();
	std::string chen_path;
	chen_cmd->add_option("--path", chen_path, "path JSON file")->required();
	chen_cmd->callback([&] { g.apply(); cmd_chen(g, chen_path); });

	auto* tr = app.add_subcommand("transport", "parallel transport along a path");
	tr->fallthrough();
	std::string tr_path, tr_conn;
	tr->add_option("--path", tr_path, "path JSON file")->required();
	tr->add_option("--conn", tr_conn, "connection JSON file")->required();
	tr->callback([&] { g.apply(); cmd_transport(g, tr_path, tr_conn); });

	auto* src = app.add_subcommand("source", "evaluate the source map of a path");
	src->fallthrough();
	std::string src_path, src_expr;
	src->add_option("--path", src_path, "path JSON file")->required();
	src->add_option("expr", src_expr, "polynomial in the x_i")->required();
	src->callback([&] { g.apply(); cmd_source(g, src_path, src_expr); });

	auto* dims = app.add_subcommand("dims", "graded dimension tables");
	dims->fallthrough();
	int dims_deg = 5;
	bool dims_freeness = false;
	dims->add_option("--max-deg", dims_deg, "largest degree")->capture_default_str();
	dims->add_flag("--freeness", dims_freeness,
	               "print the graded freeness table instead of Witt dimensions");
	dims->callback([&] { g.apply(); cmd_dims(g, dims_deg, dims_freeness); });

	auto* gens = app.add_subcommand("gens", "H1 generator sequences at one degree");
	gens->fallthrough();
	int gens_d = 2;
	gens->add_option("--d", gens_d, "degree (>= 2)")
	    ->check(CLI::Range(2, 64))
	    ->capture_default_str();
	gens->callback([&] { g.apply(); cmd_gens(g, gens_d); });

	auto* check = app.add_subcommand("check", "run property check suites");
	check->fallthrough();
	std::string check_name = "all";
	int check_samples = 0;
	{
		std::vector<std::string> allowed = check_names();
		allowed.push_back("all");
		check->add_option("suite", check_name, "suite name or 'all'")
		    ->check(CLI::IsMember(allowed))
		    ->capture_default_str();
	}
	check->add_option("--samples", check_samples,
	                  "sample count override (0 = suite default)")
	    ->capture_default_str();
	check->callback([&] { g.apply(); rc = cmd_check(g, check_name, check_samples); });

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	} catch (const pathalg::error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return rc;
}
