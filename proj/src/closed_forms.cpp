#include "kfib/closed_forms.hpp"

#include "kfib/error.hpp"
#include "kfib/sequences.hpp"

namespace kfib {

namespace {

// (c1 * t + c2 * I) / divisor, at t's scale. Numerators are combined raw and
// divided entrywise before the constructor canonicalizes, so divisibility is
// checked against the true numerators.
Mat2 combine_over(const Int& c1, const Mat2& t, const Int& c2, const Int& divisor) {
    Int diag = c2.shifted_left(t.scale());
    return Mat2(checked_div(c1 * t.n00() + diag, divisor),
                checked_div(c1 * t.n01(), divisor),
                checked_div(c1 * t.n10(), divisor),
                checked_div(c1 * t.n11() + diag, divisor),
                t.scale());
}

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

CharRelation char_relation(const Params& p) {
    return CharRelation{p, lucas(p.k, p.a), Int(parity_sign(p.a))};
}

bool satisfies(const Mat2& t, const CharRelation& rel) {
    Mat2 lhs = mat_mul(t, t);
    Int diag = rel.det.shifted_left(t.scale());
    Mat2 rhs(rel.trace * t.n00() - diag,
             rel.trace * t.n01(),
             rel.trace * t.n10(),
             rel.trace * t.n11() - diag,
             t.scale());
    return lhs == rhs;
}

Mat2 r_matrix(const Params& p) {
    return Mat2(lucas(p.k, p.a), Int(-parity_sign(p.a)), Int(1), Int(0));
}

Mat2 s_matrix(const Params& p) {
    Int l = lucas(p.k, p.a);
    return Mat2(l, delta(p), Int(1), l, 1);
}

Mat2 r_power_closed(const Params& p, std::uint64_t n) {
    if (n == 0) return Mat2::identity();
    std::int64_t a = p.a;
    std::int64_t ni = static_cast<std::int64_t>(n);
    Int fa = fib(p.k, a);
    Int sign(-parity_sign(a));
    return Mat2(checked_div(fib(p.k, a * (ni + 1)), fa),
                checked_div(sign * fib(p.k, a * ni), fa),
                checked_div(fib(p.k, a * ni), fa),
                checked_div(sign * fib(p.k, a * (ni - 1)), fa));
}

Mat2 s_power_closed(const Params& p, std::uint64_t n) {
    if (n == 0) return Mat2::identity();
    std::int64_t a = p.a;
    std::int64_t ni = static_cast<std::int64_t>(n);
    Int fa = fib(p.k, a);
    Int fan = fib(p.k, a * ni);
    Int eps = epsilon(p, ni);
    Int diag = checked_div(eps, fa);
    return Mat2(diag, checked_div(delta(p) * fan, fa), checked_div(fan, fa), diag, 1);
}

Mat2 generic_power(const Mat2& t, const CharRelation& rel, std::int64_t n) {
    if (!satisfies(t, rel)) {
        throw RelationViolated("generic_power: matrix " + t.to_string() +
                               " does not satisfy T^2 = " + rel.trace.to_string() + "*T - (" +
                               rel.det.to_string() + ")*I");
    }
    int k = rel.params.k;
    std::int64_t a = rel.params.a;
    Int fa = fib(k, a);
    if (n >= 0) {
        Int c1 = fib(k, a * n);
        Int c2 = -(rel.det * fib(k, a * (n - 1)));
        return combine_over(c1, t, c2, fa);
    }
    std::int64_t m = -n;
    int s = parity_sign(a * m);  // (-1)^{am}
    Int c1 = Int(-s) * fib(k, a * m);
    Int c2 = Int(s) * fib(k, a * (m + 1));
    return combine_over(c1, t, c2, fa);
}

Mat2 conjugate_fixture(const Params& p, const Mat2& basis_change) {
    if (basis_change.scale() != 0) {
        throw NotUnimodular("conjugate_fixture: basis change must have scale 0, got " +
                            basis_change.to_string());
    }
    Int d = basis_change.det_numerator();
    if (!(d == Int(1) || d == Int(-1))) {
        throw NotUnimodular("conjugate_fixture: basis change determinant must be +/-1, got " +
                            d.to_string());
    }
    return mat_mul(mat_mul(basis_change, r_matrix(p)), mat_inv(basis_change));
}

}  // namespace kfib
