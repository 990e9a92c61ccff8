// Times the window-sweep kernels on large windows, serial reference vs the
// OpenMP path, and verifies both return identical results.
//
//   wsa_bench [scale]    scale defaults to 1; higher means bigger windows
#include "wsa/catalog.hpp"
#include "wsa/opnorm.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace wsa;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Fn>
double timed(Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return seconds_since(start);
}

void report_line(const std::string& name, double serial, double parallel, bool identical) {
    std::cout << std::left << std::setw(34) << name << "  serial " << std::setw(8) << std::fixed
              << std::setprecision(3) << serial << "s  parallel " << std::setw(8) << parallel << "s  speedup "
              << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0) << "x  "
              << (identical ? "results identical" : "RESULTS DIFFER") << "\n";
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::atoi(argv[1]) : 1;
    if (scale < 1) scale = 1;
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp; both paths run serially\n";
#endif

    // 1. iterated-weight max sweep over a large window
    {
        auto entry = catalog_build<LogFloat>("NAT-GAUSS");
        const int m = 400000 * scale;
        IteratedWeightBound<LogFloat> serial_result, parallel_result;
        kernels::set_parallel_enabled(false);
        double ts = timed([&] {
            serial_result = tilde_bound<LogFloat>(entry.weight, *entry.semigroup, 1, Element::nat(3), m);
        });
        kernels::set_parallel_enabled(true);
        double tp = timed([&] {
            parallel_result = tilde_bound<LogFloat>(entry.weight, *entry.semigroup, 1, Element::nat(3), m);
        });
        bool same = serial_result.witness_t == parallel_result.witness_t &&
                    serial_result.lower.log_magnitude() == parallel_result.lower.log_magnitude();
        report_line("tilde max sweep, window " + std::to_string(m), ts, tp, same);
    }

    // 2. submultiplicativity pair scan
    {
        auto entry = catalog_build<LogFloat>("NAT-GAUSS");
        const int m = 1200 * scale;
        std::size_t serial_count = 0, parallel_count = 0;
        kernels::set_parallel_enabled(false);
        double ts = timed([&] {
            serial_count = check_submultiplicative<LogFloat>(entry.weight, *entry.semigroup, m).size();
        });
        kernels::set_parallel_enabled(true);
        double tp = timed([&] {
            parallel_count = check_submultiplicative<LogFloat>(entry.weight, *entry.semigroup, m).size();
        });
        report_line("submultiplicative scan, W(" + std::to_string(m) + ")^2", ts, tp,
                    serial_count == parallel_count);
    }

    // 3. operator-norm lower sweep in exact arithmetic
    {
        auto entry = catalog_build<Rational>("QPOS-DENOM");
        const int m = 140 * scale; // ~12k reduced fractions at scale 1
        auto f = FinSupp<Rational>::parse("1/2:1,2/3:-2,5/7:3");
        LowerBound<Rational> serial_result{Rational(0), Element::nat(1)};
        LowerBound<Rational> parallel_result{Rational(0), Element::nat(1)};
        kernels::set_parallel_enabled(false);
        double ts = timed([&] { serial_result = opnorm_lower<Rational>(*entry.semigroup, entry.weight, f, m); });
        kernels::set_parallel_enabled(true);
        double tp = timed([&] { parallel_result = opnorm_lower<Rational>(*entry.semigroup, entry.weight, f, m); });
        bool same = serial_result.value == parallel_result.value &&
                    serial_result.witness == parallel_result.witness;
        report_line("opnorm sweep (exact), window " + std::to_string(m), ts, tp, same);
    }

    // 4. associativity triple probe
    {
        auto sg = make_nat_min();
        const int m = 220 * scale;
        bool serial_clean = false, parallel_clean = false;
        kernels::set_parallel_enabled(false);
        double ts = timed([&] { serial_clean = !probe_associative(*sg, m).has_value(); });
        kernels::set_parallel_enabled(true);
        double tp = timed([&] { parallel_clean = !probe_associative(*sg, m).has_value(); });
        report_line("associativity probe, W(" + std::to_string(m) + ")^3", ts, tp,
                    serial_clean == parallel_clean);
    }

    return 0;
}
