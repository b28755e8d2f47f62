#pragma once

#include <stdexcept>

namespace kfib {

/// Validated (k, a) pair: k is the recurrence coefficient (k >= 1), a the
/// index stride (a >= 1). a >= 1 keeps F_{k,a} and the sum denominators
/// nonzero, which every closed form divides by.
struct Params {
    int k;
    int a;

    Params(int k_, int a_) : k(k_), a(a_) {
        if (k < 1) throw std::invalid_argument("Params: k must be >= 1");
        if (a < 1) throw std::invalid_argument("Params: a must be >= 1");
    }
};

}  // namespace kfib
