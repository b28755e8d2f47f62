#include "kfib/identities.hpp"

#include <array>

#include "kfib/closed_forms.hpp"
#include "kfib/sequences.hpp"

namespace kfib {

namespace {

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

using LhsRhs = std::pair<Int, Int>;

LhsRhs catalan_sides(const Params& p, std::int64_t n) {
    std::int64_t a = p.a;
    Int fan = fib(p.k, a * n);
    Int fan1 = fib(p.k, a * (n + 1));
    Int fa = fib(p.k, a);
    Int lhs = fan1 * fan1 - lucas(p.k, a) * fan * fan1 + Int(parity_sign(a)) * (fan * fan);
    Int rhs = Int(parity_sign(a * n)) * (fa * fa);
    return {lhs, rhs};
}

LhsRhs addition_sides(const Params& p, std::int64_t n, std::int64_t m) {
    std::int64_t a = p.a;
    Int fan = fib(p.k, a * n);
    Int fam = fib(p.k, a * m);
    Int lhs = fib(p.k, a) * fib(p.k, a * (n + m));
    Int rhs = fib(p.k, a * (n + 1)) * fam + fib(p.k, a * (m + 1)) * fan -
              lucas(p.k, a) * fan * fam;
    return {lhs, rhs};
}

LhsRhs subtraction_sides(const Params& p, std::int64_t n, std::int64_t m) {
    std::int64_t a = p.a;
    Int lhs = Int(parity_sign(a * m)) * fib(p.k, a) * fib(p.k, a * (n - m));
    Int rhs = fib(p.k, a * (m + 1)) * fib(p.k, a * n) - fib(p.k, a * (n + 1)) * fib(p.k, a * m);
    return {lhs, rhs};
}

LhsRhs honsberger_sides(int k, std::int64_t n, std::int64_t m) {
    Int lhs = fib(k, n + m);
    Int rhs = fib(k, m + 1) * fib(k, n) + fib(k, m) * fib(k, n - 1);
    return {lhs, rhs};
}

LhsRhs docagne_sides(int k, std::int64_t n, std::int64_t m) {
    Int lhs = Int(parity_sign(m)) * fib(k, n - m);
    Int rhs = fib(k, m + 1) * fib(k, n) - fib(k, n + 1) * fib(k, m);
    return {lhs, rhs};
}

// The matrix recurrence R^{n+1} = L_{k,a} R^n - (-1)^a R^{n-1} over the
// closed-form powers, n >= 1. Equal matrices report (0, 0); otherwise the
// first differing entry pair is returned so the failure carries magnitudes.
LhsRhs matrix_recurrence_sides(const Params& p, std::int64_t n) {
    Mat2 next = r_power_closed(p, static_cast<std::uint64_t>(n + 1));
    Mat2 cur = r_power_closed(p, static_cast<std::uint64_t>(n));
    Mat2 prev = r_power_closed(p, static_cast<std::uint64_t>(n - 1));
    Int l = lucas(p.k, p.a);
    Int d(parity_sign(p.a));
    // closed-form R powers are integer matrices (scale 0)
    Mat2 rhs(l * cur.n00() - d * prev.n00(), l * cur.n01() - d * prev.n01(),
             l * cur.n10() - d * prev.n10(), l * cur.n11() - d * prev.n11());
    if (next == rhs) return {Int(0), Int(0)};
    std::array<const Int*, 4> le{&next.n00(), &next.n01(), &next.n10(), &next.n11()};
    std::array<const Int*, 4> re{&rhs.n00(), &rhs.n01(), &rhs.n10(), &rhs.n11()};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(*le[i] == *re[i])) return {*le[i], *re[i]};
    }
    return {Int(0), Int(1)};  // scales differ with equal numerators
}

}  // namespace

Int catalan_like_residual(const Params& p, std::int64_t n) {
    auto [lhs, rhs] = catalan_sides(p, n);
    return lhs - rhs;
}

Int addition_residual(const Params& p, std::int64_t n, std::int64_t m) {
    auto [lhs, rhs] = addition_sides(p, n, m);
    return lhs - rhs;
}

Int subtraction_residual(const Params& p, std::int64_t n, std::int64_t m) {
    auto [lhs, rhs] = subtraction_sides(p, n, m);
    return lhs - rhs;
}

Int honsberger_residual(int k, std::int64_t n, std::int64_t m) {
    auto [lhs, rhs] = honsberger_sides(k, n, m);
    return lhs - rhs;
}

Int docagne_residual(int k, std::int64_t n, std::int64_t m) {
    auto [lhs, rhs] = docagne_sides(k, n, m);
    return lhs - rhs;
}

std::string_view identity_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::catalan: return "catalan";
        case IdentityKind::addition: return "addition";
        case IdentityKind::subtraction: return "subtraction";
        case IdentityKind::honsberger: return "honsberger";
        case IdentityKind::docagne: return "docagne";
        case IdentityKind::matrix_recurrence: return "matrix-recurrence";
    }
    return "unknown";
}

std::optional<IdentityKind> identity_from_name(std::string_view name) {
    for (IdentityKind kind :
         {IdentityKind::catalan, IdentityKind::addition, IdentityKind::subtraction,
          IdentityKind::honsberger, IdentityKind::docagne, IdentityKind::matrix_recurrence}) {
        if (identity_name(kind) == name) return kind;
    }
    return std::nullopt;
}

IdentityReport run_grid(IdentityKind label, const GridBounds& grid, bool uses_a, bool uses_m,
                        std::int64_t n_lo, const GridEvaluator& eval) {
    IdentityReport rep{label, grid, 0, {}};
    int a_hi = uses_a ? grid.amax : 1;
    std::int64_t m_hi = uses_m ? grid.mmax : 0;
    for (int k = 1; k <= grid.kmax; ++k) {
        for (int a = 1; a <= a_hi; ++a) {
            for (std::int64_t n = n_lo; n <= grid.nmax; ++n) {
                for (std::int64_t m = 0; m <= m_hi; ++m) {
                    ++rep.checked;
                    auto [lhs, rhs] = eval(k, a, n, m);
                    if (!(lhs == rhs)) rep.failures.push_back({k, a, n, m, lhs, rhs});
                }
            }
        }
    }
    // loop order already leaves failures sorted by (k, a, n, m)
    return rep;
}

IdentityReport verify_grid(IdentityKind kind, const GridBounds& grid) {
    switch (kind) {
        case IdentityKind::catalan:
            return run_grid(kind, grid, true, false, 1,
                            [](int k, int a, std::int64_t n, std::int64_t) {
                                return catalan_sides(Params(k, a), n);
                            });
        case IdentityKind::addition:
            return run_grid(kind, grid, true, true, 0,
                            [](int k, int a, std::int64_t n, std::int64_t m) {
                                return addition_sides(Params(k, a), n, m);
                            });
        case IdentityKind::subtraction:
            return run_grid(kind, grid, true, true, 0,
                            [](int k, int a, std::int64_t n, std::int64_t m) {
                                return subtraction_sides(Params(k, a), n, m);
                            });
        case IdentityKind::honsberger:
            return run_grid(kind, grid, false, true, 0,
                            [](int k, int, std::int64_t n, std::int64_t m) {
                                return honsberger_sides(k, n, m);
                            });
        case IdentityKind::docagne:
            return run_grid(kind, grid, false, true, 0,
                            [](int k, int, std::int64_t n, std::int64_t m) {
                                return docagne_sides(k, n, m);
                            });
        case IdentityKind::matrix_recurrence:
            return run_grid(kind, grid, true, false, 1,
                            [](int k, int a, std::int64_t n, std::int64_t) {
                                return matrix_recurrence_sides(Params(k, a), n);
                            });
    }
    throw std::invalid_argument("verify_grid: unknown identity kind");
}

}  // namespace kfib
