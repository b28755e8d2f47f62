#include "kfib/sums.hpp"

#include <stdexcept>

#include "kfib/error.hpp"
#include "kfib/sequences.hpp"

namespace kfib {

namespace {

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

void require_n(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("sums: n must be >= 0");
}

Int nonzero(Int d, const char* what) {
    if (d.is_zero()) throw Error(std::string(what) + ": denominator is zero");
    return d;
}

}  // namespace

Int plain_denominator(const Params& p) {
    return Int(1 + parity_sign(p.a)) - lucas(p.k, p.a);
}

Int alt_denominator(const Params& p) {
    return Int(1 + parity_sign(p.a)) + lucas(p.k, p.a);
}

Int sum_arith_naive(const Params& p, std::int64_t n) {
    require_n(n);
    Int acc(0);
    for (std::int64_t i = 0; i <= n; ++i) acc += fib(p.k, p.a * i);
    return acc;
}

Int alt_sum_arith_naive(const Params& p, std::int64_t n) {
    require_n(n);
    Int acc(0);
    for (std::int64_t i = 0; i <= n; ++i) {
        Int term = fib(p.k, p.a * i);
        if (i % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

SumResult sum_arith_closed(const Params& p, std::int64_t n) {
    require_n(n);
    Int den = nonzero(plain_denominator(p), "sum_arith_closed");
    std::int64_t a = p.a;
    Int num = Int(parity_sign(a)) * fib(p.k, a * n) + fib(p.k, a) - fib(p.k, a * (n + 1));
    return SumResult{p, n, SumKind::plain, SumMethod::closed, checked_div(num, den), den};
}

Int alt_sum_even_form(const Params& p, std::int64_t n) {
    require_n(n);
    Int den = nonzero(alt_denominator(p), "alt_sum_even_form");
    std::int64_t a = p.a;
    Int num = Int(parity_sign(a)) * fib(p.k, a * n) - fib(p.k, a) + fib(p.k, a * (n + 1));
    return checked_div(num, den);
}

SumResult alt_sum_arith_closed(const Params& p, std::int64_t n) {
    require_n(n);
    Int den = nonzero(alt_denominator(p), "alt_sum_arith_closed");
    Int value = (n % 2 == 0) ? alt_sum_even_form(p, n)
                             : alt_sum_even_form(p, n - 1) - fib(p.k, p.a * n);
    return SumResult{p, n, SumKind::alternating, SumMethod::closed, value, den};
}

std::vector<ErratumPoint> erratum_scan(int kmax, int amax, std::int64_t nmax) {
    std::vector<ErratumPoint> points;
    for (int k = 1; k <= kmax; ++k) {
        for (int a = 1; a <= amax; ++a) {
            Params p(k, a);
            Int den = alt_denominator(p);
            for (std::int64_t n = 1; n <= nmax; n += 2) {
                Int num =
                    Int(parity_sign(a)) * fib(k, a * n) - fib(k, a) + fib(k, a * (n + 1));
                Int oracle = alt_sum_arith_naive(p, n);
                if (divides_exactly(den, num)) {
                    Int stmt = checked_div(num, den);
                    if (!(stmt == oracle)) {
                        points.push_back({p, n, num, den, stmt, oracle});
                    }
                } else {
                    points.push_back({p, n, num, den, std::nullopt, oracle});
                }
            }
        }
    }
    return points;
}

}  // namespace kfib
