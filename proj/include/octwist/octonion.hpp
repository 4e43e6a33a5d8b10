#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "octwist/cocycle.hpp"
#include "octwist/gf8.hpp"

namespace octwist {

// Exact coefficient domain. Everything in this project lives in (1/2)Z^8 or
// Q^8; no floating point anywhere.
using Coeff = boost::rational<long long>;

inline Coeff half() { return Coeff(1, 2); }

inline bool is_integer(const Coeff& c) { return c.denominator() == 1; }

// "p/q" rendering, denominator always present.
std::string coeff_to_string(const Coeff& c);

// Parses "p/q" or "p".
Coeff coeff_from_string(const std::string& s);

// Element of the twisted group algebra O(Q): 8 exact coefficients indexed
// by the field elements of F8 (dense, bit order).
class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<Coeff, 8> coeffs) : c_(std::move(coeffs)) {}

    const Coeff& operator[](F8 x) const { return c_[x.bits()]; }
    Coeff& operator[](F8 x) { return c_[x.bits()]; }
    const std::array<Coeff, 8>& coeffs() const { return c_; }

    bool is_zero() const;

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }
    friend Octonion operator+(const Octonion& a, const Octonion& b);
    friend Octonion operator-(const Octonion& a, const Octonion& b);
    friend Octonion operator-(const Octonion& a);
    friend Octonion operator*(const Coeff& s, const Octonion& a);

private:
    std::array<Coeff, 8> c_{};
};

// e^x: coefficient 1 at x, 0 elsewhere. e^0 is the two-sided identity.
Octonion basis(F8 x);

// Bilinear extension of e^x e^y = (-1)^phi(x,y) e^(x+y).
Octonion multiply(const Octonion& a, const Octonion& b);

// a* = Re(a) - Im(a).
Octonion conjugate(const Octonion& a);

Octonion real_part(const Octonion& a);
Octonion imag_part(const Octonion& a);

// tr(a) = a + a* as a scalar, i.e. 2 a_0.
Coeff trace_oct(const Octonion& a);

// N(a) = a a* = sum of squared coefficients. Asserts internally that a a*
// really is that scalar times e^0.
Coeff norm(const Octonion& a);

// [a,b,c] = (ab)c - a(bc).
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

// Closed form (-1)^(phi(x,y)+phi(y,z)+phi(z,x)) (1 - (-1)^ind(x,y,z)) e^(x+y+z),
// evaluated literally; serves as an independent oracle for associator().
Octonion associator_formula(F8 x, F8 y, F8 z);

// One cell of the signed multiplication table of e_inf, e_1, ..., e_7.
// label 0 stands for e_inf; labels 1..7 are subscripts mod 7 (e_7 = e_0).
struct TableEntry {
    int label = 0;  // 0 = infinity, 1..7 otherwise
    int sign = 1;
    friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

using StandardTable = std::array<std::array<TableEntry, 8>, 8>;

// Row/column order e_inf, e_1, ..., e_7. Generated from multiply() and
// cross-checked against a regeneration from the seed relations alone
// (squares, anticommutation, e_1 e_2 = e_4, identity laws, index shift and
// index doubling). Throws std::logic_error if the two disagree.
StandardTable standard_table();

// The label's field element: e_inf -> 0, e_j -> alpha^j.
F8 label_to_f8(int label);
std::string label_to_string(int label);

// Report of the F4 twisted-algebra check: sigma(x,y) = (-1)^tr(y x^2) on F4
// yields a commutative associative algebra with every basis square = +e^0.
struct F4Report {
    bool commutative = false;
    bool associative = false;
    bool squares_identity = false;
    bool identity_laws = false;
    // sign of e^x e^y = sign * e^(x+y), indices in the F4 bit basis {1, w}
    std::array<std::array<int, 4>, 4> sign{};
    bool pass() const { return commutative && associative && squares_identity && identity_laws; }
};

F4Report check_f4_remark();

}  // namespace octwist
