#include "octwist/gf8.hpp"

#include <stdexcept>

namespace octwist {

namespace {

constexpr unsigned clmul_reduce(unsigned a, unsigned b) {
    unsigned p = 0;
    for (int i = 0; i < 3; ++i) {
        if ((b >> i) & 1u) p ^= a << i;
    }
    // degree <= 4 here; reduce modulo t^3 + t + 1
    for (int i = 4; i >= 3; --i) {
        if ((p >> i) & 1u) p ^= 0b1011u << (i - 3);
    }
    return p & 7u;
}

struct MulTable {
    std::uint8_t t[8][8];
    MulTable() {
        for (unsigned x = 0; x < 8; ++x)
            for (unsigned y = 0; y < 8; ++y) t[x][y] = static_cast<std::uint8_t>(clmul_reduce(x, y));
        // defining relation a^3 = a + 1
        if (t[t[2][2]][2] != 3) throw std::logic_error("F8 table violates a^3 = a + 1");
        // a generates the multiplicative group
        unsigned seen = 0, p = 1;
        for (int j = 0; j < 7; ++j) {
            p = t[p][2];
            seen |= 1u << p;
        }
        if (seen != 0b11111110u || p != 1) throw std::logic_error("F8 table: alpha is not a generator");
    }
};

const MulTable& table() {
    static const MulTable tab;
    return tab;
}

}  // namespace

F8 mul(F8 x, F8 y) { return F8(table().t[x.bits()][y.bits()]); }

F8 pow(F8 x, unsigned n) {
    F8 r = f8_one;
    for (unsigned i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

F8 frobenius(F8 x) { return mul(x, x); }

int trace(F8 x) {
    F8 v = add(add(x, pow(x, 2)), pow(x, 4));
    if (v == f8_zero) return 0;
    if (v == f8_one) return 1;
    throw std::logic_error("trace left F2");
}

F8 bar(F8 x) { return pow(x, 6); }

F8 alpha_pow(unsigned j) { return pow(f8_alpha, j); }

}  // namespace octwist
