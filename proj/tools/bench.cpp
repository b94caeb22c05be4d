// Benchmark for the parallel kernels against their serial reference
// implementations.  Each workload runs both variants, checks that the results
// agree, and reports wall times and the speedup.

#include "padl/eisenstein.hpp"
#include "padl/lvalues.hpp"
#include "padl/rayclass.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>

#ifdef PADL_HAVE_OPENMP
#include <omp.h>
#endif

using namespace padl;

namespace {

double run_ms(const std::function<void()>& work) {
    auto start = std::chrono::steady_clock::now();
    work();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-34s  serial %9.1f ms  parallel %9.1f ms  speedup %5.2fx  %s\n",
                name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "results agree" : "RESULTS DIFFER");
}

} // namespace

int main() {
#ifdef PADL_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the same code path\n\n");
#endif
    bool all_agree = true;

    {
        QuadField F = QuadField::real_quadratic(5);
        FracIdeal P = primes_above(F, Integer(5))[0];
        auto G = RayClassData::build(F, P, 3);
        std::vector<Rational> serial, parallel;
        double ts = run_ms([&] { serial = partial_zeta_table_serial(*G, 8); });
        double tp = run_ms([&] { parallel = partial_zeta_table(*G, 8); });
        bool ok = serial == parallel;
        all_agree = all_agree && ok;
        report("partial zeta table, sqrt5 m=3 k=8", ts, tp, ok);
    }

    {
        QuadField F = QuadField::real_quadratic(2);
        unsigned long terms = 4000000;
        double serial = 0, parallel = 0;
        double ts = run_ms([&] { serial = dedekind_zeta2_numeric_serial(F, terms); });
        double tp = run_ms([&] { parallel = dedekind_zeta2_numeric(F, terms); });
        bool ok = std::abs(serial - parallel) < 1e-9;
        all_agree = all_agree && ok;
        report("numeric zeta_F(2), 4e6 terms", ts, tp, ok);
    }

    {
        QuadField F = QuadField::rationals();
        FracIdeal P = primes_above(F, Integer(5))[0];
        auto Gm = RayClassData::build(F, P, 2);
        auto G0 = RayClassData::build(F, P, 0);
        CuspData cusp = cusp_for_class(*G0, 0);
        std::vector<EisensteinCoeff> serial, parallel;
        double ts = run_ms([&] { serial = lambda_coefficient_table_serial(Gm, cusp, 8); });
        double tp = run_ms([&] { parallel = lambda_coefficient_table(Gm, cusp, 8); });
        bool ok = serial.size() == parallel.size();
        for (size_t i = 0; ok && i < serial.size(); ++i)
            ok = serial[i].value == parallel[i].value;
        all_agree = all_agree && ok;
        report("coefficient table, p=5 m=2 k=8", ts, tp, ok);
    }

    {
        std::vector<std::complex<double>> serial, parallel;
        double ts = run_ms([&] { serial = sample_lambda_series_serial(4, 5, 1, 0.25, 64, 3000); });
        double tp = run_ms([&] { parallel = sample_lambda_series(4, 5, 1, 0.25, 64, 3000); });
        bool ok = serial.size() == parallel.size();
        for (size_t i = 0; ok && i < serial.size(); ++i)
            ok = std::abs(serial[i] - parallel[i]) < 1e-9;
        all_agree = all_agree && ok;
        report("lattice samples, k=4 S=64 B=3000", ts, tp, ok);
    }

    return all_agree ? 0 : 1;
}
