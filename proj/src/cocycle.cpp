#include "octwist/cocycle.hpp"

#include <stdexcept>

namespace octwist {

namespace {

struct PhiTable {
    int t[8][8];
    PhiTable() {
        for (F8 x : f8_all())
            for (F8 y : f8_all()) t[x.bits()][y.bits()] = trace(mul(y, bar(x)));
    }
};

PhiTable& phi_table() {
    static PhiTable tab;
    return tab;
}

}  // namespace

int phi(F8 x, F8 y) { return phi_table().t[x.bits()][y.bits()]; }

int sign_sigma(F8 x, F8 y) { return phi(x, y) ? -1 : 1; }

int ind_rank(std::span<const F8> xs) {
    if (xs.empty() || xs.size() > 3) throw std::invalid_argument("ind is defined for 1..3 vectors");
    // Gaussian elimination on 3-bit vectors.
    unsigned rows[3] = {0, 0, 0};
    std::size_t rank = 0;
    for (F8 x : xs) {
        unsigned v = x.bits();
        for (std::size_t i = 0; i < rank; ++i) {
            unsigned msb = 4;
            while (msb && !(rows[i] & msb)) msb >>= 1;
            if (v & msb) v ^= rows[i];
        }
        if (v) rows[rank++] = v;
    }
    return rank == xs.size() ? 1 : 0;
}

int ind_sum(std::span<const F8> xs) {
    if (xs.empty() || xs.size() > 3) throw std::invalid_argument("ind is defined for 1..3 vectors");
    const std::size_t n = xs.size();
    unsigned parity = 0;
    for (unsigned eps = 0; eps < (1u << n); ++eps) {
        F8 s = f8_zero;
        for (std::size_t i = 0; i < n; ++i) {
            if ((eps >> i) & 1u) s = add(s, xs[i]);
        }
        if (s == f8_zero) parity ^= 1u;
    }
    return static_cast<int>(parity);
}

int delta_phi(F8 x, F8 y, F8 z) {
    return (phi(y, z) + phi(add(x, y), z) + phi(x, add(y, z)) + phi(x, y)) % 2;
}

PhiCorruption::PhiCorruption(F8 x, F8 y) : x_(x), y_(y) {
    phi_table().t[x.bits()][y.bits()] ^= 1;
}

PhiCorruption::~PhiCorruption() { phi_table().t[x_.bits()][y_.bits()] ^= 1; }

}  // namespace octwist
