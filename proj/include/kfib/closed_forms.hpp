#pragma once

#include <cstdint>

#include "kfib/mat2.hpp"
#include "kfib/params.hpp"

namespace kfib {

/// The characteristic relation T^2 = trace*T - det*I shared by the stride
/// matrices and all their unimodular conjugates: trace = L_{k,a},
/// det = (-1)^a.
struct CharRelation {
    Params params;
    Int trace;
    Int det;
};

CharRelation char_relation(const Params& p);

/// Exact check of T^2 == trace*T - det*I (one mat_mul).
bool satisfies(const Mat2& t, const CharRelation& rel);

/// [[L_{k,a}, -(-1)^a], [1, 0]], the integer stride matrix.
Mat2 r_matrix(const Params& p);

/// (1/2) [[L_{k,a}, Delta_a], [1, L_{k,a}]], the half-integer stride matrix.
Mat2 s_matrix(const Params& p);

/// Closed form of r_matrix(p)^n:
/// (1/F_{k,a}) [[F_{k,a(n+1)}, -(-1)^a F_{k,an}], [F_{k,an}, -(-1)^a F_{k,a(n-1)}]].
/// All divisions are divisibility-checked; an InexactDivision here would
/// falsify the closed form. n = 0 yields the identity.
Mat2 r_power_closed(const Params& p, std::uint64_t n);

/// Closed form of s_matrix(p)^n:
/// (1/2F_{k,a}) [[eps_a(n), Delta_a F_{k,an}], [F_{k,an}, eps_a(n)]],
/// representable with scale <= 1 after the exact division by F_{k,a}.
/// n = 0 yields the identity.
Mat2 s_power_closed(const Params& p, std::uint64_t n);

/// t^n for any matrix satisfying rel, any integer n:
///   n >= 0: (1/F_{k,a}) (F_{k,an} t - (-1)^a F_{k,a(n-1)} I)
///   n = -m: (1/F_{k,a}) ((-1)^{am+1} F_{k,am} t + (-1)^{am} F_{k,a(m+1)} I)
/// The relation is checked up front (RelationViolated on failure); wrong
/// inputs would otherwise poison everything downstream.
Mat2 generic_power(const Mat2& t, const CharRelation& rel, std::int64_t n);

/// P * r_matrix(p) * P^{-1} for a scale-0 basis change with det(P) = +/-1.
/// The result is an integer matrix satisfying char_relation(p); used to
/// exercise generic_power away from the two stock matrices.
/// Throws NotUnimodular otherwise.
Mat2 conjugate_fixture(const Params& p, const Mat2& basis_change);

}  // namespace kfib
