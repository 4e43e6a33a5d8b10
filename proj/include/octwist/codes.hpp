#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octwist/gf8.hpp"

namespace octwist {

// Subset of F8 as an 8-bit mask: bit b set iff the field element with bits b
// is a member. Symmetric difference is XOR, intersection is AND; the mask
// doubles as a length-8 F2 codeword.
using Subset = std::uint8_t;

inline constexpr Subset subset_empty = 0x00;
inline constexpr Subset subset_full = 0xff;

int subset_size(Subset x);
bool subset_contains(Subset x, F8 e);
Subset subset_complement(Subset x);
std::string subset_hex(Subset x);

// F8-sum of the members; 0 for the empty set.
F8 sigma_sum(Subset x);

// {z + x : x in X}.
Subset translate(Subset x, F8 z);

// Intersection parity form beta(X, Y) = |X & Y| mod 2.
int beta(Subset x, Subset y);

// The 72 subsets of size 0, 4 or 8.
std::vector<Subset> enumerate_H();

// The 7 lines {0, x, y, x+y}; each contains 0 and has sigma-sum 0.
std::vector<Subset> lines();

enum class OrbitKind { Empty, Full, LinePair, Outer };

std::string orbit_kind_name(OrbitKind k);

// Orbit of the translation action of F8 on H.
struct Orbit {
    OrbitKind kind = OrbitKind::Empty;
    // Line-pair orbits are labeled by their unique member containing 0 (the
    // line); outer orbits by their sigma-sum.
    Subset line_label = 0;
    F8 sigma_label;
    std::vector<Subset> members;  // sorted
};

// The 8 size-4 subsets with sigma-sum x; rejects x = 0.
Orbit outer_family(F8 x);

// The 16 orbits partitioning H: empty, full, 7 line-pairs, 7 outer
// families, in that order. Throws if the census disagrees.
std::vector<Orbit> orbit_decomposition();

// F2-subspace of 2^F8 closed under symmetric difference, containing the
// empty set. Words kept sorted.
struct Code {
    std::vector<Subset> words;
    bool contains(Subset w) const;
};

// Linear closure of the orbit members.
Code span(const Orbit& orbit);

// All subsets beta-orthogonal to every codeword, by brute force over all
// 256 subsets (independent of span()).
Code dual(const Code& code);

// Lemma check for a nonzero z: pairs X != Y, Y != complement(X) in O_z meet
// in exactly 2 points and X delta Y is a line through z or its complement.
struct IntersectionReport {
    bool pass = false;
    int pairs_checked = 0;
    std::vector<Subset> lines_through_z;  // each arising as complement(X delta Y)
};

IntersectionReport check_intersection_lemma(F8 z);

// Invertible F2-linear map of F8 as a 3x3 bit matrix acting on the 3-bit
// representation.
struct GL3 {
    std::array<std::uint8_t, 3> rows;  // row i: mask of input bits feeding output bit i
    F8 apply(F8 x) const;
    Subset apply(Subset s) const;
};

std::vector<GL3> gl3_elements();

}  // namespace octwist
