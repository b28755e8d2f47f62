#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace kfib {

/// Exact signed integer of unbounded size.
///
/// Thin value wrapper around a GMP integer: negation, addition,
/// multiplication and divisibility-checked division are closed and never
/// round. Every product of two Int values is tallied in a thread-local
/// counter (see mul_count) so evaluation strategies can be compared by
/// multiplication count; the scalar helpers mul_small / shifted_left / half
/// bypass the tally.
///
/// Values are immutable in practice (all operations return fresh values),
/// so distinct Ints may be used from many threads without coordination.
class Int {
public:
    Int() = default;
    Int(long value) : v_(value) {}  // NOLINT: implicit by design, lets literals flow
    /// Parses a base-10 string (optional leading '-').
    /// Throws std::invalid_argument on malformed input.
    explicit Int(const std::string& decimal);

    Int operator-() const;
    friend Int operator+(const Int& x, const Int& y);
    friend Int operator-(const Int& x, const Int& y);
    friend Int operator*(const Int& x, const Int& y);  // counted
    Int& operator+=(const Int& y);
    Int& operator-=(const Int& y);
    Int& operator*=(const Int& y);  // counted

    /// value * s via the scalar path; not counted as a big-int product.
    Int mul_small(long s) const;
    /// value * 2^bits; not counted.
    Int shifted_left(unsigned bits) const;
    /// value / 2; the value must be even.
    Int half() const;

    bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
    bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
    bool is_even() const { return !is_odd(); }
    /// -1, 0 or +1.
    int sign() const { return mpz_sgn(v_.get_mpz_t()); }
    Int abs() const;

    /// When |value| is exactly 2^j, returns j; otherwise nullopt (also for 0).
    std::optional<unsigned> exact_log2_abs() const;

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }
    /// Number of digits in the base-10 rendering, sign excluded. 0 has 1 digit.
    std::size_t decimal_digits() const;

    friend bool operator==(const Int& x, const Int& y) {
        return mpz_cmp(x.v_.get_mpz_t(), y.v_.get_mpz_t()) == 0;
    }
    friend std::strong_ordering operator<=>(const Int& x, const Int& y) {
        int c = mpz_cmp(x.v_.get_mpz_t(), y.v_.get_mpz_t());
        return c <=> 0;
    }

    /// Exact quotient num / den. Throws InexactDivision when den does not
    /// divide num (or den is zero); there is no silent truncation anywhere.
    friend Int checked_div(const Int& num, const Int& den);
    friend bool divides_exactly(const Int& den, const Int& num);

private:
    mpz_class v_{0};
};

Int checked_div(const Int& num, const Int& den);
/// True when num / den is exact (den nonzero).
bool divides_exactly(const Int& den, const Int& num);

std::ostream& operator<<(std::ostream& os, const Int& x);

/// Thread-local count of Int*Int products since the last reset_mul_count().
std::uint64_t mul_count();
void reset_mul_count();

}  // namespace kfib
