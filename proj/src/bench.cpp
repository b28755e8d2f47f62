#include "kfib/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <utility>

#include "kfib/error.hpp"
#include "kfib/sequences.hpp"

namespace kfib {

namespace {

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("bench: k must be >= 1");
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    if (xs.size() % 2 == 1) return xs[mid];
    return (xs[mid - 1] + xs[mid]) / 2.0;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::iterative: return "iterative";
        case Strategy::matrix_pow: return "matrix-pow";
        case Strategy::fast_doubling: return "fast-doubling";
    }
    return "unknown";
}

std::optional<Strategy> strategy_from_name(std::string_view name) {
    for (Strategy s : {Strategy::iterative, Strategy::matrix_pow, Strategy::fast_doubling}) {
        if (strategy_name(s) == name) return s;
    }
    return std::nullopt;
}

Int fib_iterative(int k, std::uint64_t n) {
    require_k(k);
    if (n == 0) return Int(0);
    Int coeff(k);  // lifted to Int so each step is one counted product
    Int prev(0), cur(1);
    for (std::uint64_t i = 1; i < n; ++i) {
        Int next = coeff * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int fib_matrix_pow(int k, std::uint64_t n) {
    require_k(k);
    if (n == 0) return Int(0);
    // Q = [[k,1],[1,0]], Q^n = [[F_{n+1}, F_n],[F_n, F_{n-1}]].
    // Left-to-right powering: one 8-product squaring per bit after the
    // leading one; folding a set bit multiplies by Q, which only needs
    // scalar arithmetic.
    Int a(k), b(1), c(1), d(0);
    int bits = std::bit_width(n) - 1;
    for (int i = bits - 1; i >= 0; --i) {
        Int na = a * a + b * c;
        Int nb = a * b + b * d;
        Int nc = c * a + d * c;
        Int nd = c * b + d * d;
        a = std::move(na);
        b = std::move(nb);
        c = std::move(nc);
        d = std::move(nd);
        if ((n >> i) & 1) {
            Int ta = a.mul_small(k) + b;
            Int tc = c.mul_small(k) + d;
            b = std::move(a);
            d = std::move(c);
            a = std::move(ta);
            c = std::move(tc);
        }
    }
    return b;
}

Int fib_fast_doubling(int k, std::uint64_t n) { return fib_pair_fast(k, n).first; }

Int run_strategy(Strategy s, int k, std::uint64_t n) {
    switch (s) {
        case Strategy::iterative: return fib_iterative(k, n);
        case Strategy::matrix_pow: return fib_matrix_pow(k, n);
        case Strategy::fast_doubling: return fib_fast_doubling(k, n);
    }
    throw std::invalid_argument("run_strategy: unknown strategy");
}

std::vector<BenchRecord> run_bench(int k, const std::vector<std::uint64_t>& ns,
                                   const std::vector<Strategy>& strategies, int reps) {
    require_k(k);
    if (reps < 1) throw std::invalid_argument("run_bench: reps must be >= 1");
    if (strategies.empty()) throw std::invalid_argument("run_bench: no strategies selected");
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> records;
    for (std::uint64_t n : ns) {
        // counted warmup doubling as the cross-strategy equality gate
        std::vector<Int> values;
        std::vector<std::uint64_t> counts;
        for (Strategy s : strategies) {
            reset_mul_count();
            values.push_back(run_strategy(s, k, n));
            counts.push_back(mul_count());
        }
        for (std::size_t i = 1; i < values.size(); ++i) {
            if (!(values[i] == values[0])) {
                throw CrossCheckFailed(
                    "run_bench: strategies " + std::string(strategy_name(strategies[0])) +
                    " and " + std::string(strategy_name(strategies[i])) + " disagree at k=" +
                    std::to_string(k) + ", n=" + std::to_string(n));
            }
        }
        std::size_t digits = values[0].decimal_digits();
        for (std::size_t si = 0; si < strategies.size(); ++si) {
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(reps));
            for (int r = 0; r < reps; ++r) {
                auto t0 = clock::now();
                Int v = run_strategy(strategies[si], k, n);
                auto t1 = clock::now();
                times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
                if (!(v == values[si])) {
                    throw CrossCheckFailed("run_bench: nondeterministic strategy result");
                }
            }
            records.push_back({strategies[si], k, n, median(times), counts[si], digits});
        }
    }
    return records;
}

}  // namespace kfib
