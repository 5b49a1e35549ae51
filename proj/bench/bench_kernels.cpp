// Wall-clock comparison of the OpenMP kernels against their serial
// references. Inputs are deterministic (fixed seeds) so runs are comparable.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pathalg/chen.hpp"
#include "pathalg/connection.hpp"
#include "pathalg/mpoly.hpp"
#include "pathalg/sampling.hpp"

using namespace pathalg;

namespace {

template <class F>
double time_best_of(int reps, F f) {
	double best = 1e100;
	for (int r = 0; r < reps; ++r) {
		auto t0 = std::chrono::steady_clock::now();
		f();
		double s =
		    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
		        .count();
		if (s < best)
			best = s;
	}
	return best;
}

void report(const char* name, double serial, double parallel, bool equal) {
	std::printf("%-22s serial %8.4f s   parallel %8.4f s   speedup %5.2fx   %s\n",
	            name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
	            equal ? "outputs equal" : "OUTPUTS DIFFER");
}

}

int main() {
#ifdef _OPENMP
	std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
	std::printf("openmp: not enabled (both columns run the serial kernel)\n");
#endif

	{
		Sampler smp(1);
		const int n = 4, cap = 14;
		MPoly a = smp.mpoly(n, cap, 7, 900), b = smp.mpoly(n, cap, 7, 900);
		MPoly rs(n, cap), rp(n, cap);
		double ts = time_best_of(3, [&] { rs = MPoly::mul_serial(a, b); });
		double tp = time_best_of(3, [&] { rp = MPoly::mul_parallel(a, b); });
		report("mpoly multiply", ts, tp, rs == rp);
	}

	{
		Sampler smp(2);
		const int n = 3, cap = 9;
		PLPath p = smp.path(n, 6, 2), q = smp.path(n, 6, 2);
		IntMap a = chen_series(p, cap).integrals();
		IntMap b = chen_series(q, cap).integrals();
		IntMap rs, rp;
		double ts =
		    time_best_of(3, [&] { rs = concat_integrals_serial(a, b, n, cap); });
		double tp = time_best_of(3, [&] { rp = concat_integrals(a, b, n, cap); });
		report("chen concatenation", ts, tp, rs == rp);
	}

	{
		Sampler smp(3);
		const int n = 3, N = 3, cap = 6;
		Connection c = smp.connection(n, N, cap, 3, 4);
		JetData js{0, 0, 0, {}}, jp{0, 0, 0, {}};
		double ts = time_best_of(2, [&] { js = jets_serial(c, 6); });
		double tp = time_best_of(2, [&] { jp = jets(c, 6); });
		report("curvature jets", ts, tp, js == jp);
	}

	return 0;
}
