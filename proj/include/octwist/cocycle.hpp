#pragma once

#include <span>

#include "octwist/gf8.hpp"

namespace octwist {

// phi(x, y) = tr(y * bar(x)), the F2-valued pairing behind the octonion
// sign cocycle. Reads a precomputed 8x8 table so a test hook can corrupt
// single entries (see PhiCorruption).
int phi(F8 x, F8 y);

// sigma(x, y) = (-1)^phi(x, y), as +1 / -1.
int sign_sigma(F8 x, F8 y);

// 1 iff the given 1..3 vectors are F2-linearly independent (rank over F2).
// Throws std::invalid_argument for other lengths.
int ind_rank(std::span<const F8> xs);

// The same indicator computed as a parity sum of delta functions over all
// 2^n F2-combinations of the inputs; independent of ind_rank.
int ind_sum(std::span<const F8> xs);

// Coboundary of phi: phi(y,z) + phi(x+y,z) + phi(x,y+z) + phi(x,y) mod 2.
int delta_phi(F8 x, F8 y, F8 z);

// Test hook: flips one entry of the phi table for the lifetime of the guard.
// Exists so the verification suite can prove it actually depends on the
// cocycle (negative control).
class PhiCorruption {
public:
    PhiCorruption(F8 x, F8 y);
    ~PhiCorruption();
    PhiCorruption(const PhiCorruption&) = delete;
    PhiCorruption& operator=(const PhiCorruption&) = delete;

private:
    F8 x_, y_;
};

}  // namespace octwist
