#include <doctest.h>

#include <array>
#include <stdexcept>

#include "octwist/cocycle.hpp"

using namespace octwist;

TEST_CASE("phi spot values") {
    CHECK(phi(f8_alpha, pow(f8_alpha, 2)) == 0);  // tr(alpha^8) = tr(alpha) = 0
    CHECK(phi(f8_zero, f8_zero) == 0);
    for (F8 x : f8_all()) {
        CHECK(phi(f8_zero, x) == 0);
        if (!x.is_zero()) CHECK(phi(x, x) == 1);
    }
}

TEST_CASE("sigma follows phi") {
    CHECK(sign_sigma(f8_alpha, pow(f8_alpha, 2)) == 1);
    for (F8 x : f8_all()) {
        CHECK(sign_sigma(f8_zero, x) == 1);
        if (!x.is_zero()) CHECK(sign_sigma(x, x) == -1);
    }
}

TEST_CASE("ind_rank") {
    for (F8 x : f8_all()) {
        const std::array<F8, 1> v{x};
        CHECK(ind_rank(v) == (x.is_zero() ? 0 : 1));
    }
    const std::array<F8, 2> rep{f8_alpha, f8_alpha};
    CHECK(ind_rank(rep) == 0);
    const std::array<F8, 3> basis3{f8_one, f8_alpha, pow(f8_alpha, 2)};
    CHECK(ind_rank(basis3) == 1);
    const std::array<F8, 4> too_long{};
    CHECK_THROWS_AS(ind_rank(too_long), std::invalid_argument);
    CHECK_THROWS_AS(ind_rank(std::span<const F8>{}), std::invalid_argument);
}

TEST_CASE("ind_sum matches the delta-function formula") {
    const std::array<F8, 1> z{f8_zero};
    CHECK(ind_sum(z) == 0);
    for (F8 x : f8_all())
        for (F8 y : f8_all()) {
            const std::array<F8, 2> v{x, y};
            const int expected =
                (1 + (x.is_zero() ? 1 : 0) + (y.is_zero() ? 1 : 0) + (add(x, y).is_zero() ? 1 : 0)) % 2;
            CHECK(ind_sum(v) == expected);
        }
    const std::array<F8, 3> basis3{f8_one, f8_alpha, pow(f8_alpha, 2)};
    CHECK(ind_sum(basis3) == 1);
}

TEST_CASE("ind_sum agrees with ind_rank everywhere") {
    for (F8 x : f8_all()) {
        const std::array<F8, 1> v1{x};
        CHECK(ind_sum(v1) == ind_rank(v1));
        for (F8 y : f8_all()) {
            const std::array<F8, 2> v2{x, y};
            CHECK(ind_sum(v2) == ind_rank(v2));
            for (F8 z : f8_all()) {
                const std::array<F8, 3> v3{x, y, z};
                CHECK(ind_sum(v3) == ind_rank(v3));
            }
        }
    }
}

TEST_CASE("delta_phi equals ind3") {
    CHECK(delta_phi(f8_one, f8_alpha, pow(f8_alpha, 2)) == 1);
    for (F8 x : f8_all())
        for (F8 y : f8_all()) {
            CHECK(delta_phi(f8_zero, x, y) == 0);
            CHECK(delta_phi(x, y, add(x, y)) == 0);
            for (F8 z : f8_all()) {
                const std::array<F8, 3> v{x, y, z};
                CHECK(delta_phi(x, y, z) == ind_rank(v));
            }
        }
}

TEST_CASE("phi corruption hook flips exactly one entry and restores it") {
    const int before = phi(F8(3), F8(5));
    const int other = phi(F8(5), F8(3));
    {
        PhiCorruption guard(F8(3), F8(5));
        CHECK(phi(F8(3), F8(5)) == 1 - before);
        CHECK(phi(F8(5), F8(3)) == other);  // other entries untouched
    }
    CHECK(phi(F8(3), F8(5)) == before);
}
