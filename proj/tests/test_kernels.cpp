#include "wsa/kernels.hpp"

#include "wsa/rational.hpp"

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <random>

using namespace wsa;

namespace {

struct ThreadCountGuard {
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    explicit ThreadCountGuard(int n) { omp_set_num_threads(n); }
    ~ThreadCountGuard() { omp_set_num_threads(saved); }
#else
    explicit ThreadCountGuard(int) {}
#endif
};

} // namespace

TEST_CASE("parallel sweep_max matches the serial reference bitwise") {
    ThreadCountGuard guard(5); // more workers than indices in some cases
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> d(-1000, 1000);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> values;
        std::size_t n = std::size_t(trial * 7 % 97);
        for (std::size_t i = 0; i < n; ++i) values.emplace_back(d(rng), 7);
        auto score = [&](std::size_t i) { return values[i]; };
        auto serial = kernels::sweep_max_serial<Rational>(n, score);
        auto parallel = kernels::sweep_max_parallel<Rational>(n, score);
        REQUIRE(serial.has_value() == parallel.has_value());
        if (serial) {
            CHECK(serial->index == parallel->index);
            CHECK(serial->value == parallel->value);
        }
    }
}

TEST_CASE("sweep_max ties break to the smallest index") {
    ThreadCountGuard guard(4);
    std::vector<int> values = {3, 7, 7, 1, 7};
    auto score = [&](std::size_t i) { return values[i]; };
    auto serial = kernels::sweep_max_serial<int>(values.size(), score);
    auto parallel = kernels::sweep_max_parallel<int>(values.size(), score);
    CHECK(serial->index == 1);
    CHECK(parallel->index == 1);
}

TEST_CASE("find_first and collect agree across kernels") {
    ThreadCountGuard guard(3);
    auto pred = [](std::size_t i) { return i % 17 == 5; };
    for (std::size_t n : {0UL, 1UL, 5UL, 6UL, 100UL, 1000UL}) {
        CHECK(kernels::find_first_serial(n, pred) == kernels::find_first_parallel(n, pred));
        CHECK(kernels::collect_serial(n, pred) == kernels::collect_parallel(n, pred));
    }
}

TEST_CASE("kernel exceptions surface deterministically") {
    ThreadCountGuard guard(4);
    auto thrower = [](std::size_t i) -> int {
        if (i >= 250) throw std::runtime_error("boom");
        return int(i);
    };
    CHECK_THROWS_AS(kernels::sweep_max_parallel<int>(1000, thrower), std::runtime_error);
    CHECK_THROWS_AS(
        kernels::collect_parallel(1000, [](std::size_t i) -> bool { throw std::logic_error(std::to_string(i)); }),
        std::logic_error);
}

TEST_CASE("dispatch honors the global switch") {
    kernels::set_parallel_enabled(false);
    CHECK_FALSE(kernels::parallel_enabled());
    auto r = kernels::sweep_max<int>(10, [](std::size_t i) { return int(i); });
    CHECK(r->index == 9);
    kernels::set_parallel_enabled(true);
    CHECK(kernels::parallel_enabled());
}
