#include "kfib/sequences.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "kfib/error.hpp"

namespace kfib {

namespace {

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("fib: k must be >= 1");
}

// Indexes below this stay on plain iteration; above it the doubling path is
// far cheaper (the identity grids only ever see small indexes).
constexpr std::uint64_t kDoublingThreshold = 4096;

// F_{k,m} for m >= 0 by plain iteration.
Int fib_iter_nonneg(int k, std::uint64_t m) {
    if (m == 0) return Int(0);
    Int prev(0), cur(1);
    for (std::uint64_t i = 1; i < m; ++i) {
        Int next = cur.mul_small(k) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int fib_nonneg(int k, std::uint64_t m) {
    if (m < kDoublingThreshold) return fib_iter_nonneg(k, m);
    return fib_pair_fast(k, m).first;
}

}  // namespace

Int fib(int k, std::int64_t n) {
    require_k(k);
    if (n >= 0) return fib_nonneg(k, static_cast<std::uint64_t>(n));
    std::uint64_t m = static_cast<std::uint64_t>(-n);
    Int fm = fib_nonneg(k, m);
    // F_{k,-m} = (-1)^{m+1} F_{k,m}
    return (m % 2 == 0) ? -fm : fm;
}

Int lucas(int k, std::int64_t n) { return fib(k, n + 1) + fib(k, n - 1); }

std::pair<Int, Int> fib_pair_fast(int k, std::uint64_t n) {
    require_k(k);
    if (n == 0) return {Int(0), Int(1)};
    // Consume the leading bit with (F_1, F_2) = (1, k), then per remaining
    // bit double the index and optionally step once:
    //   F_{2m}   = F_m (2 F_{m+1} - k F_m)
    //   F_{2m+1} = F_{m+1}^2 + F_m^2
    // Exactly 3 counted products per bit; k F_m and the doubling are scalar.
    Int f(1);       // F_m
    Int g(k);       // F_{m+1}
    int bits = std::bit_width(n) - 1;
    for (int i = bits - 1; i >= 0; --i) {
        Int f2m = f * (g.shifted_left(1) - f.mul_small(k));
        Int f2m1 = g * g + f * f;
        if ((n >> i) & 1) {
            f = f2m1;
            g = f2m1.mul_small(k) + f2m;
        } else {
            f = std::move(f2m);
            g = std::move(f2m1);
        }
    }
    return {f, g};
}

Int delta(const Params& p) {
    Int l = lucas(p.k, p.a);
    return l * l - Int(p.a % 2 == 0 ? 4 : -4);
}

Int epsilon(const Params& p, std::int64_t n) {
    std::int64_t a = p.a;
    return fib(p.k, a * (n + 1)).shifted_left(1) - lucas(p.k, a) * fib(p.k, a * n);
}

RootPair roots(int k) {
    require_k(k);
    double disc = std::sqrt(static_cast<double>(k) * k + 4.0);
    return {(k + disc) / 2.0, (k - disc) / 2.0};
}

double binet_check(int k, std::int64_t n) {
    require_k(k);
    if (n < 0 || n > 70) {
        throw IndexTooLarge("binet_check: n must be in [0, 70], got " + std::to_string(n));
    }
    RootPair r = roots(k);
    double approx =
        (std::pow(r.sigma1, static_cast<double>(n)) - std::pow(r.sigma2, static_cast<double>(n))) /
        (r.sigma1 - r.sigma2);
    if (!std::isfinite(approx)) {
        throw IndexTooLarge("binet_check: floating-point overflow at k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
    }
    double exact = fib(k, n).to_double();
    return std::abs(approx - exact) / std::max(1.0, exact);
}

SeqPoint seq_point(const Params& p, std::int64_t n) {
    return SeqPoint{p, n, fib(p.k, n), lucas(p.k, n)};
}

}  // namespace kfib
