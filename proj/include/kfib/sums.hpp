#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kfib/int.hpp"
#include "kfib/params.hpp"

namespace kfib {

enum class SumKind { plain, alternating };
enum class SumMethod { closed, naive };

struct SumResult {
    Params params;
    std::int64_t n;
    SumKind kind;
    SumMethod method;
    Int value;
    Int denominator;  // the kind's denominator, nonzero for every a >= 1
};

/// 1 + (-1)^a - L_{k,a}, the plain-sum denominator.
Int plain_denominator(const Params& p);
/// 1 + (-1)^a + L_{k,a}, the alternating-sum denominator.
Int alt_denominator(const Params& p);

/// Oracle: sum_{i=0..n} F_{k,ai} by term-by-term accumulation.
Int sum_arith_naive(const Params& p, std::int64_t n);
/// Oracle: sum_{i=0..n} (-1)^i F_{k,ai} by term-by-term accumulation.
Int alt_sum_arith_naive(const Params& p, std::int64_t n);

/// ((-1)^a F_{k,an} + F_{k,a} - F_{k,a(n+1)}) / (1 + (-1)^a - L_{k,a}),
/// divisibility-checked. Equals sum_arith_naive for every n >= 0.
SumResult sum_arith_closed(const Params& p, std::int64_t n);

/// The even-index alternating closed form
/// ((-1)^a F_{k,an} - F_{k,a} + F_{k,a(n+1)}) / (1 + (-1)^a + L_{k,a})
/// evaluated at the given n regardless of parity. Correct only for even n;
/// at odd n it can mismatch the true sum or fail divisibility
/// (InexactDivision). Kept as a probe so the discrepancy stays documented.
Int alt_sum_even_form(const Params& p, std::int64_t n);

/// Alternating sum, correct for all n >= 0: even n uses the even-index
/// closed form directly; odd n evaluates it at n-1 and subtracts F_{k,an}.
SumResult alt_sum_arith_closed(const Params& p, std::int64_t n);

/// One odd-index point where the even-index form misbehaves.
struct ErratumPoint {
    Params params;
    std::int64_t n;
    Int numerator;    // even-form numerator at this n
    Int denominator;  // alt_denominator(params)
    std::optional<Int> statement;  // nullopt when the division is inexact
    Int oracle;                    // alt_sum_arith_naive value
};

/// Scans odd n in [1, nmax] over k in [1, kmax], a in [1, amax] and returns
/// every point where the even-index form either mismatches the oracle or
/// fails divisibility. Points where it happens to agree are not reported.
std::vector<ErratumPoint> erratum_scan(int kmax, int amax, std::int64_t nmax);

}  // namespace kfib
