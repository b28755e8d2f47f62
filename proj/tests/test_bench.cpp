#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cstdint>

#include "kfib/bench.hpp"
#include "kfib/sequences.hpp"

#include "oracles.hpp"

using kfib::fib_fast_doubling;
using kfib::fib_iterative;
using kfib::fib_matrix_pow;
using kfib::Int;
using kfib::Strategy;

TEST_CASE("strategies agree with each other and the oracle") {
    for (int k : {1, 2, 3}) {
        for (std::uint64_t n : {0u, 1u, 2u, 3u, 10u, 64u, 100u, 1000u}) {
            Int it = fib_iterative(k, n);
            Int mp = fib_matrix_pow(k, n);
            Int fd = fib_fast_doubling(k, n);
            CHECK(it == mp);
            CHECK(it == fd);
            CHECK(oracle::from_int(it) == oracle::fib(k, static_cast<long long>(n)));
        }
    }
}

TEST_CASE("iterative strategy counts exactly n - 1 products") {
    for (std::uint64_t n : {1u, 2u, 10u, 1000u}) {
        kfib::reset_mul_count();
        (void)fib_iterative(1, n);
        CHECK(kfib::mul_count() == n - 1);
    }
    kfib::reset_mul_count();
    (void)fib_iterative(1, 0);
    CHECK(kfib::mul_count() == 0);
}

TEST_CASE("log-strategies respect their multiplication bounds") {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        std::uint64_t log2n = std::bit_width(n) - 1;

        kfib::reset_mul_count();
        (void)fib_fast_doubling(2, n);
        CHECK(kfib::mul_count() <= 3 * log2n + 3);

        kfib::reset_mul_count();
        (void)fib_matrix_pow(2, n);
        CHECK(kfib::mul_count() <= 8 * log2n + 8);
    }
}

TEST_CASE("multiplication-count ordering at a large index") {
    const std::uint64_t n = 4096;
    kfib::reset_mul_count();
    (void)fib_fast_doubling(1, n);
    std::uint64_t fd = kfib::mul_count();

    kfib::reset_mul_count();
    (void)fib_matrix_pow(1, n);
    std::uint64_t mp = kfib::mul_count();

    kfib::reset_mul_count();
    (void)fib_iterative(1, n);
    std::uint64_t it = kfib::mul_count();

    CHECK(fd <= mp);
    CHECK(mp <= it);
    CHECK(it == n - 1);
}

TEST_CASE("run_bench records") {
    auto records = kfib::run_bench(
        1, {10, 100},
        {Strategy::iterative, Strategy::matrix_pow, Strategy::fast_doubling}, 2);
    REQUIRE(records.size() == 6);
    for (const auto& r : records) {
        CHECK(r.k == 1);
        CHECK(r.millis >= 0.0);
        CHECK(r.digits >= 1);
        if (r.strategy == Strategy::iterative) CHECK(r.mults == r.n - 1);
    }
    // F_{1,10} = 55 has 2 digits
    CHECK(records[0].n == 10);
    CHECK(records[0].digits == 2);

    CHECK_THROWS_AS(kfib::run_bench(1, {10}, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(kfib::run_bench(1, {10}, {Strategy::iterative}, 0), std::invalid_argument);
    CHECK_THROWS_AS(kfib::run_bench(0, {10}, {Strategy::iterative}, 1), std::invalid_argument);
}

TEST_CASE("strategy names round-trip") {
    for (Strategy s : {Strategy::iterative, Strategy::matrix_pow, Strategy::fast_doubling}) {
        auto back = kfib::strategy_from_name(kfib::strategy_name(s));
        REQUIRE(back.has_value());
        CHECK(*back == s);
    }
    CHECK_FALSE(kfib::strategy_from_name("quantum").has_value());
}
