#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kfib/error.hpp"
#include "kfib/int.hpp"

#include "oracles.hpp"

using kfib::Int;
using kfib::checked_div;

TEST_CASE("construction and decimal round-trip") {
    CHECK(Int(0).to_string() == "0");
    CHECK(Int(-42).to_string() == "-42");
    Int big("123456789012345678901234567890");
    CHECK(big.to_string() == "123456789012345678901234567890");
    CHECK(big.decimal_digits() == 30);
    CHECK((-big).decimal_digits() == 30);
    CHECK(Int(0).decimal_digits() == 1);
    CHECK_THROWS_AS(Int("12x4"), std::invalid_argument);
    CHECK_THROWS_AS(Int(""), std::invalid_argument);
}

TEST_CASE("basic arithmetic closure") {
    Int a("99999999999999999999");
    Int b(7);
    CHECK((a + b).to_string() == "100000000000000000006");
    CHECK((a - a).is_zero());
    CHECK((-a).sign() == -1);
    CHECK((a * b).to_string() == "699999999999999999993");
    CHECK(a.mul_small(7) == a * b);
    CHECK(Int(5).shifted_left(3) == Int(40));
    CHECK(Int(-6).half() == Int(-3));
    CHECK(Int(10).half() == Int(5));
}

TEST_CASE("ordering") {
    CHECK(Int(-3) < Int(0));
    CHECK(Int(3) > Int(-7));
    CHECK(Int(3) <= Int(3));
    CHECK(Int("10000000000000000000000") > Int("9999999999999999999999"));
}

TEST_CASE("checked_div exact cases") {
    CHECK(checked_div(Int(8), Int(1)) == Int(8));

    // F_{1,8} / F_{1,4} computed first with the iteration oracle
    mpz_class f8 = oracle::fib(1, 8);
    mpz_class f4 = oracle::fib(1, 4);
    REQUIRE(f8 == 21);
    REQUIRE(f4 == 3);
    CHECK(checked_div(Int(21), Int(3)) == Int(7));

    CHECK(checked_div(Int(-21), Int(3)) == Int(-7));
    CHECK(checked_div(Int(21), Int(-3)) == Int(-7));
    CHECK(checked_div(Int(0), Int(5)) == Int(0));
}

TEST_CASE("checked_div signals inexactness") {
    // 28/5 is the numerator/denominator pair the alternating-sum probe hits
    CHECK_THROWS_AS(checked_div(Int(28), Int(5)), kfib::InexactDivision);
    CHECK_THROWS_AS(checked_div(Int(1), Int(0)), kfib::InexactDivision);
    CHECK(kfib::divides_exactly(Int(5), Int(30)));
    CHECK_FALSE(kfib::divides_exactly(Int(5), Int(28)));
    CHECK_FALSE(kfib::divides_exactly(Int(0), Int(28)));
}

TEST_CASE("exact_log2_abs") {
    CHECK(Int(1).exact_log2_abs() == 0u);
    CHECK(Int(2).exact_log2_abs() == 1u);
    CHECK(Int(-8).exact_log2_abs() == 3u);
    CHECK(Int(1).shifted_left(70).exact_log2_abs() == 70u);
    CHECK_FALSE(Int(3).exact_log2_abs().has_value());
    CHECK_FALSE(Int(0).exact_log2_abs().has_value());
    CHECK_FALSE(Int(12).exact_log2_abs().has_value());
}

TEST_CASE("multiplication tally counts Int*Int products only") {
    kfib::reset_mul_count();
    Int a(12345), b(678);
    Int c = a * b;
    CHECK(kfib::mul_count() == 1);
    c *= a;
    CHECK(kfib::mul_count() == 2);
    (void)a.mul_small(9);
    (void)a.shifted_left(5);
    (void)(a + b);
    (void)(a - b);
    CHECK(kfib::mul_count() == 2);
    kfib::reset_mul_count();
    CHECK(kfib::mul_count() == 0);
}

TEST_CASE("random algebra properties against GMP") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int i = 0; i < 300; ++i) {
        long xa = dist(rng), xb = dist(rng), xc = dist(rng);
        Int a(xa), b(xb), c(xc);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (xb != 0) CHECK(checked_div(a * b, b) == a);
        mpz_class ga(xa), gb(xb);
        CHECK((a * b).to_string() == mpz_class(ga * gb).get_str());
    }
}
