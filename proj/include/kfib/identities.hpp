#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kfib/int.hpp"
#include "kfib/params.hpp"

namespace kfib {

// Residual evaluators: each returns LHS - RHS of the identity it names,
// exactly 0 whenever the identity holds. Residual form (rather than a bool)
// keeps the magnitude of any discrepancy visible in reports.

/// F_{k,a(n+1)}^2 - L_{k,a} F_{k,an} F_{k,a(n+1)} + (-1)^a F_{k,an}^2
///   - F_{k,a}^2 (-1)^{an}, for n >= 1.
Int catalan_like_residual(const Params& p, std::int64_t n);

/// F_{k,a} F_{k,a(n+m)}
///   - (F_{k,a(n+1)} F_{k,am} + F_{k,a(m+1)} F_{k,an} - L_{k,a} F_{k,an} F_{k,am}).
Int addition_residual(const Params& p, std::int64_t n, std::int64_t m);

/// (-1)^{am} F_{k,a} F_{k,a(n-m)}
///   - (F_{k,a(m+1)} F_{k,an} - F_{k,a(n+1)} F_{k,am}); m > n goes through the
/// negative-index extension.
Int subtraction_residual(const Params& p, std::int64_t n, std::int64_t m);

/// F_{k,n+m} - (F_{k,m+1} F_{k,n} + F_{k,m} F_{k,n-1}); the a = 1 addition
/// identity in its classical arrangement. n = 0 is admitted via the
/// negative-index extension.
Int honsberger_residual(int k, std::int64_t n, std::int64_t m);

/// (-1)^m F_{k,n-m} - (F_{k,m+1} F_{k,n} - F_{k,n+1} F_{k,m}).
Int docagne_residual(int k, std::int64_t n, std::int64_t m);

enum class IdentityKind {
    catalan,
    addition,
    subtraction,
    honsberger,
    docagne,
    matrix_recurrence,
};

std::string_view identity_name(IdentityKind kind);
std::optional<IdentityKind> identity_from_name(std::string_view name);

struct GridBounds {
    int kmax;
    int amax;
    std::int64_t nmax;
    std::int64_t mmax;
};

struct IdentityFailure {
    int k;
    int a;
    std::int64_t n;
    std::int64_t m;
    Int lhs;
    Int rhs;
};

struct IdentityReport {
    IdentityKind kind;
    GridBounds grid;
    std::uint64_t checked = 0;  // product of the grid cardinalities
    std::vector<IdentityFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Evaluates the chosen identity at every grid point (k outer, m inner;
/// dimensions an identity does not use collapse to one value) and collects
/// every failure rather than stopping at the first.
///
/// Grid domains: n starts at 1 for catalan and matrix_recurrence, at 0
/// otherwise; honsberger and docagne ignore a; catalan and matrix_recurrence
/// ignore m.
IdentityReport verify_grid(IdentityKind kind, const GridBounds& grid);

/// Grid driver behind verify_grid. The evaluator returns (lhs, rhs) for one
/// point; exposed so tests can run deliberately perturbed evaluators through
/// the same reporting path.
using GridEvaluator =
    std::function<std::pair<Int, Int>(int k, int a, std::int64_t n, std::int64_t m)>;

IdentityReport run_grid(IdentityKind label, const GridBounds& grid, bool uses_a, bool uses_m,
                        std::int64_t n_lo, const GridEvaluator& eval);

}  // namespace kfib
