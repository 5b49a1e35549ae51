// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Parameters and budgets are pinned here on purpose; do not widen them to
// make a regression pass.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pathalg/checks.hpp"

using namespace pathalg;

namespace {

std::string g_bin;     // pathalg CLI binary
std::string g_golden;  // golden directory

struct Outcome {
	bool pass = true;
	long long checks = 0;
	std::string detail;
};

Outcome run_suites(const std::string& name, const std::vector<CheckConfig>& cfgs) {
	Outcome o;
	for (const auto& cfg : cfgs) {
		for (const auto& r : run_checks(name, cfg)) {
			o.checks += r.checks;
			if (!r.pass && o.pass) {
				o.pass = false;
				o.detail = r.name + ": " + r.detail;
			}
		}
	}
	return o;
}

bool read_file(const std::string& path, std::string* out) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		return false;
	std::ostringstream ss;
	ss << in.rdbuf();
	*out = ss.str();
	return true;
}

int run_cmd(const std::string& cmd, std::string* out) {
	out->clear();
	FILE* p = popen(cmd.c_str(), "r");
	if (!p)
		return -1;
	char buf[4096];
	std::size_t got;
	while ((got = fread(buf, 1, sizeof buf, p)) > 0)
		out->append(buf, got);
	int st = pclose(p);
	if (st < 0)
		return -1;
	return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

// Substitute the golden-directory placeholder in command arguments.
std::string expand(const std::string& args) {
	std::string out;
	std::size_t i = 0;
	while (i < args.size()) {
		if (args.compare(i, 3, "@G/") == 0) {
			out += g_golden + "/";
			i += 3;
		} else {
			out += args[i++];
		}
	}
	return out;
}

Outcome golden_cli() {
	Outcome o;
	if (g_bin.empty() || g_golden.empty()) {
		o.pass = false;
		o.detail = "PATHALG_BIN / GOLDEN_DIR not set";
		return o;
	}
	std::ifstream cmds(g_golden + "/commands.txt");
	if (!cmds) {
		o.pass = false;
		o.detail = "missing " + g_golden + "/commands.txt";
		return o;
	}
	std::string line;
	while (std::getline(cmds, line)) {
		if (line.empty() || line[0] == '#')
			continue;
		auto tab = line.find('\t');
		if (tab == std::string::npos) {
			o.pass = false;
			o.detail = "bad command line: " + line;
			return o;
		}
		std::string name = line.substr(0, tab);
		std::string args = expand(line.substr(tab + 1));
		std::string got;
		int rc = run_cmd(g_bin + " " + args + " 2>/dev/null", &got);
		++o.checks;
		std::string want;
		if (!read_file(g_golden + "/out/" + name + ".txt", &want)) {
			o.pass = false;
			o.detail = name + ": missing golden output";
			return o;
		}
		if (rc != 0) {
			o.pass = false;
			o.detail = name + ": exit code " + std::to_string(rc);
			return o;
		}
		if (got != want) {
			o.pass = false;
			o.detail = name + ": output differs from golden file";
			return o;
		}
	}
	// Error-path contract: domain errors exit 1, usage errors exit 2.
	std::string sink;
	int rc1 = run_cmd(g_bin + " nf 'D1*)' 2>/dev/null", &sink);
	++o.checks;
	if (rc1 != 1) {
		o.pass = false;
		o.detail = "parse failure exited " + std::to_string(rc1) + ", want 1";
		return o;
	}
	int rc2 = run_cmd(g_bin + " --no-such-flag 2>/dev/null", &sink);
	++o.checks;
	if (rc2 != 2) {
		o.pass = false;
		o.detail = "usage failure exited " + std::to_string(rc2) + ", want 2";
		return o;
	}
	int rc3 = run_cmd(g_bin + " chen --path " + g_golden +
	                      "/inputs/no_such_file.json 2>/dev/null",
	                  &sink);
	++o.checks;
	if (rc3 != 1) {
		o.pass = false;
		o.detail = "missing input exited " + std::to_string(rc3) + ", want 1";
		return o;
	}
	return o;
}

CheckConfig cfg(int n, int cap, std::uint64_t seed, int samples) {
	CheckConfig c;
	c.n = n;
	c.cap = cap;
	c.seed = seed;
	c.samples = samples;
	return c;
}

}

int main(int argc, char** argv) {
	const char* bin = std::getenv("PATHALG_BIN");
	const char* gold = std::getenv("GOLDEN_DIR");
	if (argc > 1)
		bin = argv[1];
	if (argc > 2)
		gold = argv[2];
	g_bin = bin ? bin : "";
	g_golden = gold ? gold : "";

	struct Criterion {
		int id;
		const char* what;
		double budget_s;
		Outcome (*run)();
	};

	const Criterion table[] = {
	    {1, "Hall basis and Witt dimensions, n=2..4, d<=8", 5.0,
	     [] { return run_suites("hall", {cfg(2, 4, 0, 0)}); }},
	    {2, "operator algebra laws, >=100 samples, n<=3, cap 4", 30.0,
	     [] {
		     return run_suites("dalg", {cfg(2, 4, 1, 60), cfg(3, 4, 2, 60)});
	     }},
	    {3, "confluence of the two rewriting strategies, >=100 expressions",
	     10.0,
	     [] {
		     return run_suites("confluence",
		                       {cfg(2, 4, 3, 60), cfg(3, 4, 4, 60)});
	     }},
	    {4, "bialgebra laws on all words of length <=4 plus 50 random operators",
	     30.0,
	     [] {
		     return run_suites("bialgebra",
		                       {cfg(2, 4, 5, 25), cfg(3, 4, 6, 25)});
	     }},
	    {5, "algebroid axioms, >=100 section pairs", 30.0,
	     [] {
		     return run_suites("algebroid",
		                       {cfg(2, 4, 7, 50), cfg(3, 4, 8, 50)});
	     }},
	    {6, "Bianchi identity and curvature bracket recovery, >=50 connections",
	     30.0, [] { return run_suites("curvature", {cfg(3, 6, 9, 50)}); }},
	    {7, "Taylor jet roundtrip and gauge invariance, >=20 connections", 60.0,
	     [] {
		     return run_suites("taylor", {cfg(2, 4, 10, 12), cfg(3, 4, 11, 8)});
	     }},
	    {8, "H1 generator counts, basis property, graded freeness", 120.0,
	     [] { return run_suites("h1", {cfg(2, 4, 12, 0)}); }},
	    {9, "Chen series shuffle and invariance laws, >=50 paths", 60.0,
	     [] {
		     return run_suites("chen", {cfg(2, 5, 13, 30), cfg(3, 5, 14, 20)});
	     }},
	    {10, "transport vs nilpotent exponentials and Picard, >=20 paths", 60.0,
	     [] {
		     return run_suites("transport",
		                       {cfg(2, 5, 15, 12), cfg(3, 5, 16, 8)});
	     }},
	    {11, "top symbol of the holonomy image, >=50 operators", 30.0,
	     [] {
		     return run_suites("symbol", {cfg(2, 4, 17, 25), cfg(3, 4, 18, 25)});
	     }},
	    {12, "CLI golden outputs, seed 0, byte-identical", 10.0, golden_cli},
	};

	bool all = true;
	for (const auto& c : table) {
		auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception& e) {
			o.pass = false;
			o.detail = std::string("exception: ") + e.what();
		}
		double secs =
		    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
		        .count();
		bool in_budget = secs < c.budget_s;
		bool pass = o.pass && in_budget;
		all = all && pass;
		std::printf("criterion %2d %s %s: %lld checks in %.2f s (budget %.0f s)%s%s\n",
		            c.id, pass ? "PASS" : "FAIL", c.what, o.checks, secs,
		            c.budget_s, o.detail.empty() ? "" : " — ",
		            o.detail.c_str());
		if (o.pass && !in_budget)
			std::printf("criterion %2d note: over time budget\n", c.id);
	}
	return all ? 0 : 1;
}
