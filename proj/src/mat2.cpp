#include "kfib/mat2.hpp"

#include <optional>

#include "kfib/error.hpp"

namespace kfib {

Mat2::Mat2(Int n00, Int n01, Int n10, Int n11, unsigned scale)
    : n00_(std::move(n00)),
      n01_(std::move(n01)),
      n10_(std::move(n10)),
      n11_(std::move(n11)),
      scale_(scale) {
    canonicalize();
}

void Mat2::canonicalize() {
    while (scale_ > 0 && n00_.is_even() && n01_.is_even() && n10_.is_even() && n11_.is_even()) {
        n00_ = n00_.half();
        n01_ = n01_.half();
        n10_ = n10_.half();
        n11_ = n11_.half();
        --scale_;
    }
}

Int Mat2::det_numerator() const { return n00_ * n11_ - n01_ * n10_; }

Int Mat2::det() const {
    Int raw = det_numerator();
    if (scale_ == 0) return raw;
    return checked_div(raw, Int(1).shifted_left(2 * scale_));
}

std::string Mat2::to_string() const {
    std::string s = "[[" + n00_.to_string() + "," + n01_.to_string() + "],[" + n10_.to_string() +
                    "," + n11_.to_string() + "]]";
    if (scale_ > 0) s += "/2^" + std::to_string(scale_);
    return s;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return Mat2(x.n00() * y.n00() + x.n01() * y.n10(),
                x.n00() * y.n01() + x.n01() * y.n11(),
                x.n10() * y.n00() + x.n11() * y.n10(),
                x.n10() * y.n01() + x.n11() * y.n11(),
                x.scale() + y.scale());
}

Mat2 mat_pow(const Mat2& x, std::uint64_t e) {
    if (e == 0) return Mat2::identity();
    std::optional<Mat2> acc;
    Mat2 base = x;
    for (;;) {
        if (e & 1) acc = acc ? mat_mul(*acc, base) : base;
        e >>= 1;
        if (e == 0) break;
        base = mat_mul(base, base);
    }
    return *acc;
}

Mat2 mat_inv(const Mat2& x) {
    Int d = x.det_numerator();
    std::optional<unsigned> log2d = d.exact_log2_abs();
    if (!log2d) {
        throw NotInvertibleExactly("mat_inv: numerator determinant " + d.to_string() +
                                   " is not +/- a power of two");
    }
    // (N/2^s)^{-1} = sign(det N) * adj(N) / 2^{log2|det N| - s}
    Int a = x.n11(), b = -x.n01(), c = -x.n10(), dd = x.n00();
    if (d.sign() < 0) {
        a = -a;
        b = -b;
        c = -c;
        dd = -dd;
    }
    unsigned m = *log2d;
    unsigned s = x.scale();
    if (m >= s) return Mat2(a, b, c, dd, m - s);
    unsigned up = s - m;
    return Mat2(a.shifted_left(up), b.shifted_left(up), c.shifted_left(up), dd.shifted_left(up), 0);
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.to_string(); }

}  // namespace kfib
