#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "kfib/int.hpp"

namespace kfib {

/// Exact 2x2 matrix: four Int numerators over a power-of-two denominator.
///
/// A value represents N / 2^scale. Construction canonicalizes, so the stored
/// form is unique: either scale == 0 or at least one numerator is odd.
/// Equality is therefore memberwise. Half-integer matrices (scale 1) are the
/// widest denominator this library ever needs.
class Mat2 {
public:
    Mat2(Int n00, Int n01, Int n10, Int n11, unsigned scale = 0);

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }

    const Int& n00() const { return n00_; }
    const Int& n01() const { return n01_; }
    const Int& n10() const { return n10_; }
    const Int& n11() const { return n11_; }
    unsigned scale() const { return scale_; }
    bool is_integer() const { return scale_ == 0; }

    /// Determinant of the numerator matrix (no 2^{2 scale} division).
    Int det_numerator() const;
    /// Exact determinant. Throws InexactDivision when the true determinant is
    /// not an integer.
    Int det() const;

    friend bool operator==(const Mat2& x, const Mat2& y) = default;

    /// "[[a,b],[c,d]]" or "[[a,b],[c,d]]/2^s" for debugging output.
    std::string to_string() const;

private:
    Int n00_, n01_, n10_, n11_;
    unsigned scale_ = 0;

    void canonicalize();
};

/// Exact product; the raw scale is the sum of the operands' scales before
/// canonicalization. Costs exactly 8 counted Int products.
Mat2 mat_mul(const Mat2& x, const Mat2& y);

/// x^e by binary powering; at most 2*floor(log2 e) + 1 mat_mul calls for
/// e >= 1. mat_pow(x, 0) is the identity.
Mat2 mat_pow(const Mat2& x, std::uint64_t e);

/// Exact inverse via adjugate over determinant. Throws NotInvertibleExactly
/// unless the numerator determinant is +/- a power of two, which is the exact
/// condition for the inverse to be representable with a power-of-two scale.
Mat2 mat_inv(const Mat2& x);

inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace kfib
