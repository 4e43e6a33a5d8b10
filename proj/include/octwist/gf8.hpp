#pragma once

#include <array>
#include <cstdint>

namespace octwist {

// Element of the field with 8 elements in the polynomial basis {1, a, a^2}
// with reduction a^3 = a + 1. Bit i of the value is the coefficient of a^i,
// so addition is XOR, 0 is the zero element and 1 the unit.
class F8 {
public:
    constexpr F8() = default;
    constexpr explicit F8(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 7u)) {}

    constexpr unsigned bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr bool operator==(F8 a, F8 b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator<(F8 a, F8 b) { return a.bits_ < b.bits_; }

private:
    std::uint8_t bits_ = 0;
};

inline constexpr F8 f8_zero{0};
inline constexpr F8 f8_one{1};
inline constexpr F8 f8_alpha{2};  // generator of the multiplicative group

constexpr F8 add(F8 x, F8 y) { return F8(x.bits() ^ y.bits()); }

// Table-backed multiplication; the table is built from carry-less
// multiplication reduced modulo t^3 + t + 1 and validated once at startup.
F8 mul(F8 x, F8 y);

// x^n with the convention pow(0, 0) = 1 (used only in generic helpers).
F8 pow(F8 x, unsigned n);

// Frobenius map x -> x^2.
F8 frobenius(F8 x);

// tr(x) = x + x^2 + x^4, always 0 or 1.
int trace(F8 x);

// bar(x) = x^6: the multiplicative inverse for x != 0, and 0 at 0.
F8 bar(F8 x);

// The 8 field elements in bit order.
constexpr std::array<F8, 8> f8_all() {
    return {F8(0), F8(1), F8(2), F8(3), F8(4), F8(5), F8(6), F8(7)};
}

// a^j for j >= 0 (a^0 = 1, a^7 = 1).
F8 alpha_pow(unsigned j);

}  // namespace octwist
