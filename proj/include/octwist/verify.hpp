#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "octwist/octonion.hpp"

namespace octwist {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20170120;

// Random octonion with dyadic coefficients drawn uniformly from
// {-4,...,4}/2.
Octonion random_dyadic_octonion(std::mt19937_64& rng);

// Runs every exhaustive and randomized check across the modules; all
// randomized checks are seeded so failures reproduce.
std::vector<CheckResult> run_verification_suite(std::uint64_t seed = kDefaultSeed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace octwist
