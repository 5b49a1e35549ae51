#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pathalg {

// Shared knobs for the property suites. Suites whose statements pin their
// own parameters (hall, h1) ignore the fields they do not use; the others
// widen cap to their exactness window when the requested cap is too small.
struct CheckConfig {
	int n = 2;
	int cap = 4;
	std::uint64_t seed = 0;
	int samples = 0;  // 0 -> per-suite default
};

struct CheckResult {
	std::string name;
	bool pass = true;
	long long checks = 0;  // individual assertions evaluated
	std::string detail;    // first failure, empty when pass
};

// Suite names in canonical order: hall, dalg, confluence, bialgebra,
// algebroid, curvature, taylor, h1, chen, transport, symbol.
const std::vector<std::string>& check_names();

// Throws domain_error for an unknown name.
CheckResult run_check(const std::string& name, const CheckConfig& cfg);

// name == "all" runs every suite in canonical order.
std::vector<CheckResult> run_checks(const std::string& name, const CheckConfig& cfg);

}
