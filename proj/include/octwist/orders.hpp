#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octwist/codes.hpp"
#include "octwist/octonion.hpp"

namespace octwist {

// Integer coordinate vector of an octonion scaled by 2: every element of
// every order lies in (1/2)Z^8, so scaled coordinates are integers.
using ScaledVec = std::array<long long, 8>;

// Z-lattice in (1/2)Z^8, stored as the Hermite normal form of its 2-scaled
// coordinates: upper triangular rows, positive diagonal, entries above a
// pivot reduced into [0, pivot). Canonical, so lattice equality is row
// equality.
struct Lattice {
    std::array<ScaledVec, 8> rows{};

    bool contains(const ScaledVec& v) const;  // triangular solve over Z
    Octonion basis_octonion(int i) const;     // row i divided by 2
    friend bool operator==(const Lattice&, const Lattice&) = default;
};

// HNF of the lattice generated by the given scaled rows; throws if the rank
// is below 8.
Lattice hermite_normal_form(std::vector<ScaledVec> rows);

ScaledVec scale_by_two(const Octonion& a);  // throws if a is outside (1/2)Z^8

// e^X/2: coefficient 1/2 at each member of X; rejects X outside H.
Octonion e_half(Subset x);

// Mask of indices carrying a non-integer coefficient; rejects denominators
// above 2 (halving sets are only defined inside (1/2)O(Z)).
Subset halving_set(const Octonion& a);

struct IntegralOrder {
    Orbit orbit;
    Code code;  // span(orbit), the halving-set membership test
    Lattice lattice;
    std::string name;  // Conway-Smith designation
};

// Conway-Smith names, usable directly as CLI selectors.
std::string conway_smith_name(const Orbit& orbit);

// Z-span of {e^z} and {e^X/2 : X in orbit}, reduced to HNF.
IntegralOrder build_order(const Orbit& orbit);

// All 16, in orbit_decomposition() order.
std::vector<IntegralOrder> build_all_orders();

// Halving-set membership test (description (b)), asserted to agree with the
// lattice solve against the basis.
bool contains(const IntegralOrder& order, const Octonion& a);

struct ClosureCertificate {
    bool pass = false;
    int products_checked = 0;
    int failures = 0;
};

// Brute-force E . E = E on the 64 ordered basis products.
ClosureCertificate verify_closed(const IntegralOrder& order);

struct GeneratedCertificate {
    bool pass = false;
    int iterations = 0;
};

// Description (c): the subring generated by O(Z) and e^X/2 reaches the same
// lattice as build_order(orbit). Throws if closure does not stabilize
// within a generous bound.
GeneratedCertificate verify_generated(const Orbit& orbit, Subset x);

struct GramCertificate {
    std::array<std::array<long long, 8>, 8> gram{};  // <b_i, b_j> = tr(b_i b_j*)
    long long determinant = 0;
    bool even = false;
    int unit_count = 0;
};

// Gram matrix under <x,y> = tr(x y*), exact integer determinant, evenness,
// and the number of norm-1 elements. Norm-1 forces every |coefficient| <= 1
// (the norm is the coefficient sum of squares), so enumerating the box
// {-1,-1/2,0,1/2,1}^8 filtered by code membership is exhaustive.
GramCertificate gram_certificate(const IntegralOrder& order);

struct Poset {
    std::array<std::array<bool, 16>, 16> leq{};  // leq[i][j]: order i inside order j
    std::vector<int> maximal;
    std::vector<int> minimal;
};

// Containment among the 16 orders, by code inclusion, asserted equal to
// lattice containment.
Poset containment_poset(const std::vector<IntegralOrder>& orders);

// beta of the two halving sets; asserted to equal the obstruction
// "tr(a b) is a half-odd integer".
int trace_pairing_obstruction(const Octonion& a, const Octonion& b);

}  // namespace octwist
