#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "kfib/int.hpp"

namespace kfib {

enum class Strategy { iterative, matrix_pow, fast_doubling };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(std::string_view name);

/// F_{k,n} by plain recurrence iteration with the coefficient lifted to Int;
/// exactly n - 1 counted big-int products for n >= 1.
Int fib_iterative(int k, std::uint64_t n);

/// F_{k,n} from the n-th power of [[k,1],[1,0]], squaring left-to-right and
/// folding set bits in with scalar arithmetic; at most
/// 8*floor(log2 n) + 8 counted products.
Int fib_matrix_pow(int k, std::uint64_t n);

/// F_{k,n} via fib_pair_fast; at most 3*floor(log2 n) + 3 counted products.
Int fib_fast_doubling(int k, std::uint64_t n);

Int run_strategy(Strategy s, int k, std::uint64_t n);

struct BenchRecord {
    Strategy strategy;
    int k;
    std::uint64_t n;
    double millis;        // median wall time over the timed repetitions
    std::uint64_t mults;  // counted big-int products for one evaluation
    std::size_t digits;   // decimal digits of F_{k,n}
};

/// Runs every (strategy, n) pair single-threaded: one counted warmup
/// evaluation, a cross-strategy equality gate, then `reps` timed repetitions.
/// Throws CrossCheckFailed if any two strategies disagree on a value.
std::vector<BenchRecord> run_bench(int k, const std::vector<std::uint64_t>& ns,
                                   const std::vector<Strategy>& strategies, int reps);

}  // namespace kfib
