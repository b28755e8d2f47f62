#pragma once

#include <cstdint>
#include <utility>

#include "kfib/int.hpp"
#include "kfib/params.hpp"

namespace kfib {

/// F_{k,n} for any integer n: F_{k,0} = 0, F_{k,1} = 1,
/// F_{k,n+1} = k*F_{k,n} + F_{k,n-1}. Negative indexes follow the extension
/// F_{k,-n} = (-1)^{n+1} F_{k,n}. k = 1 is the classical Fibonacci sequence,
/// k = 2 the Pell sequence. Small indexes iterate the recurrence directly;
/// large ones take the doubling path.
Int fib(int k, std::int64_t n);

/// L_{k,n} = F_{k,n+1} + F_{k,n-1}, taken verbatim at every integer n
/// (so L_{k,0} = 2).
Int lucas(int k, std::int64_t n);

/// (F_{k,n}, F_{k,n+1}) by fast doubling, bit-for-bit equal to fib().
/// Performs at most 3*floor(log2 n) + 3 counted big-int multiplications.
std::pair<Int, Int> fib_pair_fast(int k, std::uint64_t n);

/// Discriminant-like quantity L_{k,a}^2 - 4(-1)^a; always positive.
Int delta(const Params& p);

/// 2 F_{k,a(n+1)} - L_{k,a} F_{k,an}, the diagonal numerator of the stride
/// matrix powers.
Int epsilon(const Params& p, std::int64_t n);

/// Double-precision roots of x^2 = kx + 1.
struct RootPair {
    double sigma1;  // (k + sqrt(k^2+4)) / 2
    double sigma2;  // (k - sqrt(k^2+4)) / 2
};

RootPair roots(int k);

/// Relative residual of the closed real-root formula against the exact
/// F_{k,n}: |(s1^n - s2^n)/(s1 - s2) - F| / max(1, F). Cross-check only,
/// never a computation path; contract: below 1e-9 inside the window.
/// Throws IndexTooLarge outside 0 <= n <= 70 or when the powers overflow.
double binet_check(int k, std::int64_t n);

/// One sampled point of both sequences.
struct SeqPoint {
    Params params;
    std::int64_t n;
    Int f;  // F_{k,n}
    Int l;  // L_{k,n}
};

SeqPoint seq_point(const Params& p, std::int64_t n);

}  // namespace kfib
