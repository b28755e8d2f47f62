#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "kfib/closed_forms.hpp"
#include "kfib/error.hpp"
#include "kfib/sequences.hpp"

#include "oracles.hpp"

using kfib::char_relation;
using kfib::conjugate_fixture;
using kfib::generic_power;
using kfib::Int;
using kfib::Mat2;
using kfib::mat_inv;
using kfib::mat_mul;
using kfib::mat_pow;
using kfib::Params;
using kfib::r_matrix;
using kfib::r_power_closed;
using kfib::s_matrix;
using kfib::s_power_closed;

namespace {

// t^n allowing negative exponents, via plain powering and the exact inverse
Mat2 direct_power(const Mat2& t, std::int64_t n) {
    if (n >= 0) return mat_pow(t, static_cast<std::uint64_t>(n));
    return mat_pow(mat_inv(t), static_cast<std::uint64_t>(-n));
}

std::vector<Mat2> basis_changes() {
    return {Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1), Mat2(2, 1, 1, 1), Mat2(0, 1, 1, 0)};
}

}  // namespace

TEST_CASE("r_matrix entries") {
    CHECK(r_matrix(Params(1, 1)) == Mat2(1, 1, 1, 0));
    CHECK(r_matrix(Params(1, 2)) == Mat2(3, -1, 1, 0));
    CHECK(r_matrix(Params(2, 1)) == Mat2(2, 1, 1, 0));
}

TEST_CASE("s_matrix entries and determinant") {
    CHECK(s_matrix(Params(1, 1)) == Mat2(1, 5, 1, 1, 1));
    CHECK(s_matrix(Params(1, 2)) == Mat2(3, 5, 1, 3, 1));
    for (int k = 1; k <= 4; ++k) {
        for (int a = 1; a <= 5; ++a) {
            Int expect = (a % 2 == 0) ? Int(1) : Int(-1);
            CHECK(s_matrix(Params(k, a)).det() == expect);
        }
    }
}

TEST_CASE("r_power_closed") {
    CHECK(r_power_closed(Params(1, 1), 0) == Mat2::identity());
    for (int k = 1; k <= 4; ++k) {
        for (int a = 1; a <= 5; ++a) {
            CHECK(r_power_closed(Params(k, a), 1) == r_matrix(Params(k, a)));
        }
    }
    CHECK(r_power_closed(Params(1, 2), 2) == Mat2(8, -3, 3, -1));
    CHECK(r_power_closed(Params(2, 1), 3) == Mat2(12, 5, 5, 2));

    SUBCASE("equals binary powering on the grid") {
        for (int k = 1; k <= 3; ++k) {
            for (int a = 1; a <= 3; ++a) {
                Params p(k, a);
                Mat2 r = r_matrix(p);
                for (std::uint64_t n = 1; n <= 12; ++n) {
                    CHECK(r_power_closed(p, n) == mat_pow(r, n));
                }
            }
        }
    }
}

TEST_CASE("s_power_closed") {
    for (int k = 1; k <= 4; ++k) {
        for (int a = 1; a <= 5; ++a) {
            CHECK(s_power_closed(Params(k, a), 1) == s_matrix(Params(k, a)));
        }
    }
    CHECK(s_power_closed(Params(1, 1), 2) == Mat2(3, 5, 1, 3, 1));
    // eps_2(2) = 2 F_6 - L_2 F_4 = 16 - 9 = 7, Delta_2 F_4 = 15
    CHECK(s_power_closed(Params(1, 2), 2) == Mat2(7, 15, 3, 7, 1));

    SUBCASE("equals binary powering, scale at most 1, det (-1)^{an}") {
        for (int k = 1; k <= 3; ++k) {
            for (int a = 1; a <= 3; ++a) {
                Params p(k, a);
                Mat2 s = s_matrix(p);
                for (std::uint64_t n = 1; n <= 12; ++n) {
                    Mat2 closed = s_power_closed(p, n);
                    CHECK(closed == mat_pow(s, n));
                    CHECK(closed.scale() <= 1);
                    Int expect = ((static_cast<std::int64_t>(a) * n) % 2 == 0) ? Int(1) : Int(-1);
                    CHECK(closed.det() == expect);
                }
            }
        }
    }
}

TEST_CASE("closed powers satisfy the three-term recurrence") {
    for (int k = 1; k <= 4; ++k) {
        for (int a = 1; a <= 5; ++a) {
            Params p(k, a);
            Int l = kfib::lucas(k, a);
            Int d = (a % 2 == 0) ? Int(1) : Int(-1);
            for (std::uint64_t n = 1; n <= 24; ++n) {
                Mat2 next = r_power_closed(p, n + 1);
                Mat2 cur = r_power_closed(p, n);
                Mat2 prev = r_power_closed(p, n - 1);
                Mat2 rhs(l * cur.n00() - d * prev.n00(), l * cur.n01() - d * prev.n01(),
                         l * cur.n10() - d * prev.n10(), l * cur.n11() - d * prev.n11());
                CHECK(next == rhs);
            }
        }
    }
}

TEST_CASE("characteristic relation") {
    for (int k = 1; k <= 4; ++k) {
        for (int a = 1; a <= 4; ++a) {
            Params p(k, a);
            auto rel = char_relation(p);
            CHECK(kfib::satisfies(r_matrix(p), rel));
            CHECK(kfib::satisfies(s_matrix(p), rel));
        }
    }
    CHECK_FALSE(kfib::satisfies(Mat2(1, 2, 3, 4), char_relation(Params(1, 1))));
}

TEST_CASE("generic_power matches the dedicated closed forms") {
    for (int k = 1; k <= 3; ++k) {
        for (int a = 1; a <= 3; ++a) {
            Params p(k, a);
            auto rel = char_relation(p);
            for (std::int64_t n = 0; n <= 10; ++n) {
                CHECK(generic_power(r_matrix(p), rel, n) ==
                      r_power_closed(p, static_cast<std::uint64_t>(n)));
                CHECK(generic_power(s_matrix(p), rel, n) ==
                      s_power_closed(p, static_cast<std::uint64_t>(n)));
            }
        }
    }
}

TEST_CASE("generic_power negative exponents verified against inverse powering") {
    CHECK(generic_power(r_matrix(Params(1, 1)), char_relation(Params(1, 1)), -1) ==
          Mat2(0, 1, 1, -1));
    for (int k = 1; k <= 3; ++k) {
        for (int a = 1; a <= 3; ++a) {
            Params p(k, a);
            auto rel = char_relation(p);
            std::vector<Mat2> subjects{r_matrix(p), s_matrix(p)};
            for (const Mat2& bc : basis_changes()) subjects.push_back(conjugate_fixture(p, bc));
            for (const Mat2& t : subjects) {
                for (std::int64_t n = -10; n <= 10; ++n) {
                    CHECK(generic_power(t, rel, n) == direct_power(t, n));
                }
                for (std::int64_t n = 0; n <= 10; ++n) {
                    CHECK(mat_mul(generic_power(t, rel, n), generic_power(t, rel, -n)) ==
                          Mat2::identity());
                }
            }
        }
    }
}

TEST_CASE("generic_power rejects matrices violating the relation") {
    auto rel = char_relation(Params(1, 1));
    CHECK_THROWS_AS(generic_power(Mat2(1, 2, 3, 4), rel, 3), kfib::RelationViolated);
    // r_matrix for different params does not satisfy this relation either
    CHECK_THROWS_AS(generic_power(r_matrix(Params(3, 2)), rel, 2), kfib::RelationViolated);
}

TEST_CASE("conjugate_fixture") {
    CHECK(conjugate_fixture(Params(1, 1), Mat2::identity()) == r_matrix(Params(1, 1)));
    CHECK(conjugate_fixture(Params(1, 1), Mat2(1, 1, 0, 1)) == Mat2(2, -1, 1, -1));

    SUBCASE("conjugates match explicitly conjugated closed-form powers") {
        Params p(1, 2);
        Mat2 bc(1, 1, 0, 1);
        Mat2 t = conjugate_fixture(p, bc);
        auto rel = char_relation(p);
        for (std::int64_t n = 1; n <= 6; ++n) {
            Mat2 expect =
                mat_mul(mat_mul(bc, r_power_closed(p, static_cast<std::uint64_t>(n))), mat_inv(bc));
            CHECK(generic_power(t, rel, n) == expect);
        }
    }

    SUBCASE("every fixture satisfies the relation") {
        for (int k = 1; k <= 3; ++k) {
            for (int a = 1; a <= 3; ++a) {
                Params p(k, a);
                for (const Mat2& bc : basis_changes()) {
                    CHECK(kfib::satisfies(conjugate_fixture(p, bc), char_relation(p)));
                }
            }
        }
    }

    SUBCASE("rejects non-unimodular basis changes") {
        CHECK_THROWS_AS(conjugate_fixture(Params(1, 1), Mat2(2, 0, 0, 2)),
                        kfib::NotUnimodular);
        CHECK_THROWS_AS(conjugate_fixture(Params(1, 1), Mat2(1, 5, 1, 1, 1)),
                        kfib::NotUnimodular);
    }
}
