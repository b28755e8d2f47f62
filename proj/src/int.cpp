#include "kfib/int.hpp"

#include "kfib/error.hpp"

namespace kfib {

namespace {
thread_local std::uint64_t tl_mul_count = 0;
}  // namespace

std::uint64_t mul_count() { return tl_mul_count; }
void reset_mul_count() { tl_mul_count = 0; }

Int::Int(const std::string& decimal) {
    if (mpz_set_str(v_.get_mpz_t(), decimal.c_str(), 10) != 0) {
        throw std::invalid_argument("Int: malformed decimal string: " + decimal);
    }
}

Int Int::operator-() const {
    Int r;
    mpz_neg(r.v_.get_mpz_t(), v_.get_mpz_t());
    return r;
}

Int operator+(const Int& x, const Int& y) {
    Int r;
    mpz_add(r.v_.get_mpz_t(), x.v_.get_mpz_t(), y.v_.get_mpz_t());
    return r;
}

Int operator-(const Int& x, const Int& y) {
    Int r;
    mpz_sub(r.v_.get_mpz_t(), x.v_.get_mpz_t(), y.v_.get_mpz_t());
    return r;
}

Int operator*(const Int& x, const Int& y) {
    ++tl_mul_count;
    Int r;
    mpz_mul(r.v_.get_mpz_t(), x.v_.get_mpz_t(), y.v_.get_mpz_t());
    return r;
}

Int& Int::operator+=(const Int& y) {
    mpz_add(v_.get_mpz_t(), v_.get_mpz_t(), y.v_.get_mpz_t());
    return *this;
}

Int& Int::operator-=(const Int& y) {
    mpz_sub(v_.get_mpz_t(), v_.get_mpz_t(), y.v_.get_mpz_t());
    return *this;
}

Int& Int::operator*=(const Int& y) {
    ++tl_mul_count;
    mpz_mul(v_.get_mpz_t(), v_.get_mpz_t(), y.v_.get_mpz_t());
    return *this;
}

Int Int::mul_small(long s) const {
    Int r;
    mpz_mul_si(r.v_.get_mpz_t(), v_.get_mpz_t(), s);
    return r;
}

Int Int::shifted_left(unsigned bits) const {
    Int r;
    mpz_mul_2exp(r.v_.get_mpz_t(), v_.get_mpz_t(), bits);
    return r;
}

Int Int::half() const {
    Int r;
    // exact for even values; callers guarantee evenness
    mpz_fdiv_q_2exp(r.v_.get_mpz_t(), v_.get_mpz_t(), 1);
    return r;
}

Int Int::abs() const {
    Int r;
    mpz_abs(r.v_.get_mpz_t(), v_.get_mpz_t());
    return r;
}

std::optional<unsigned> Int::exact_log2_abs() const {
    if (is_zero()) return std::nullopt;
    mpz_class a;
    mpz_abs(a.get_mpz_t(), v_.get_mpz_t());
    if (mpz_popcount(a.get_mpz_t()) != 1) return std::nullopt;
    return static_cast<unsigned>(mpz_sizeinbase(a.get_mpz_t(), 2) - 1);
}

std::size_t Int::decimal_digits() const {
    std::string s = to_string();
    return s.size() - (s.front() == '-' ? 1 : 0);
}

Int checked_div(const Int& num, const Int& den) {
    if (den.is_zero()) {
        throw InexactDivision("checked_div: division by zero (numerator " + num.to_string() + ")");
    }
    if (!mpz_divisible_p(num.v_.get_mpz_t(), den.v_.get_mpz_t())) {
        throw InexactDivision("checked_div: " + num.to_string() + " is not divisible by " +
                              den.to_string());
    }
    Int q;
    mpz_divexact(q.v_.get_mpz_t(), num.v_.get_mpz_t(), den.v_.get_mpz_t());
    return q;
}

bool divides_exactly(const Int& den, const Int& num) {
    if (den.is_zero()) return false;
    return mpz_divisible_p(num.v_.get_mpz_t(), den.v_.get_mpz_t()) != 0;
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.to_string(); }

}  // namespace kfib
