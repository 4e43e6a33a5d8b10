#include <doctest.h>

#include <random>
#include <stdexcept>

#include "octwist/octonion.hpp"
#include "octwist/verify.hpp"

using namespace octwist;

TEST_CASE("basis and identity") {
    const Octonion id = basis(f8_zero);
    for (F8 x : f8_all()) {
        CHECK(multiply(id, basis(x)) == basis(x));
        CHECK(multiply(basis(x), id) == basis(x));
    }
    CHECK(basis(f8_alpha)[f8_alpha] == Coeff(1));
    CHECK(basis(pow(f8_alpha, 4))[pow(f8_alpha, 4)] == Coeff(1));
}

TEST_CASE("basis multiplication rules") {
    // e_1 e_2 = e_4
    CHECK(multiply(basis(alpha_pow(1)), basis(alpha_pow(2))) == basis(alpha_pow(4)));
    for (F8 x : f8_all()) {
        if (x.is_zero()) continue;
        CHECK(multiply(basis(x), basis(x)) == -basis(f8_zero));
        for (F8 y : f8_all()) {
            if (y.is_zero() || y == x) continue;
            CHECK(multiply(basis(x), basis(y)) == -multiply(basis(y), basis(x)));
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(conjugate(basis(f8_zero)) == basis(f8_zero));
    for (F8 x : f8_all()) {
        if (!x.is_zero()) CHECK(conjugate(basis(x)) == -basis(x));
    }
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Octonion a = random_dyadic_octonion(rng);
        CHECK(conjugate(conjugate(a)) == a);
        CHECK(real_part(a) + imag_part(a) == a);
        CHECK((conjugate(a) == a) == (a == real_part(a)));
    }
}

TEST_CASE("real and imaginary parts") {
    CHECK(real_part(basis(f8_zero)) == basis(f8_zero));
    CHECK(imag_part(basis(f8_zero)).is_zero());
    const Octonion a = basis(alpha_pow(1)) + Coeff(3) * basis(f8_zero);
    CHECK(real_part(a) == Coeff(3) * basis(f8_zero));
}

TEST_CASE("octonion trace") {
    CHECK(trace_oct(basis(f8_zero)) == Coeff(2));
    for (F8 x : f8_all())
        if (!x.is_zero()) CHECK(trace_oct(basis(x)) == Coeff(0));
}

TEST_CASE("norm") {
    for (F8 x : f8_all()) CHECK(norm(basis(x)) == Coeff(1));
    CHECK(norm(Octonion{}) == Coeff(0));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        const Octonion a = random_dyadic_octonion(rng);
        Coeff sum = 0;
        for (F8 x : f8_all()) sum += a[x] * a[x];
        CHECK(norm(a) == sum);
        CHECK((norm(a) == Coeff(0)) == a.is_zero());
    }
}

TEST_CASE("associator closed form matches the direct computation") {
    for (F8 x : f8_all())
        for (F8 y : f8_all())
            for (F8 z : f8_all()) {
                const Octonion direct = associator(basis(x), basis(y), basis(z));
                CHECK(direct == associator_formula(x, y, z));
                const std::array<F8, 3> v{x, y, z};
                if (ind_rank(v) == 0) CHECK(direct.is_zero());
            }
    CHECK(associator_formula(f8_zero, f8_alpha, f8_one).is_zero());
    // independent triple: the associator is +-2 e^(x+y+z)
    const Octonion t = associator(basis(f8_one), basis(f8_alpha), basis(pow(f8_alpha, 2)));
    const F8 idx = add(add(f8_one, f8_alpha), pow(f8_alpha, 2));
    CHECK((t[idx] == Coeff(2) || t[idx] == Coeff(-2)));
}

TEST_CASE("standard table") {
    const StandardTable t = standard_table();
    CHECK(t[1][2] == TableEntry{4, 1});
    for (int j = 0; j < 8; ++j) {
        CHECK(t[0][j] == TableEntry{j, 1});
        CHECK(t[j][0] == TableEntry{j, 1});
        if (j != 0) CHECK(t[j][j] == TableEntry{0, -1});
    }
    // index-shift and index-doubling applied to e_1 e_2 = e_4
    CHECK(t[2][3] == TableEntry{5, 1});
    CHECK(t[2][4] == TableEntry{1, 1});
}

TEST_CASE("f4 remark") {
    const F4Report r = check_f4_remark();
    CHECK(r.commutative);
    CHECK(r.associative);
    CHECK(r.squares_identity);
    CHECK(r.identity_laws);
    // every basis square is +e^0 (indices: 1 = field one, 2 = w, 3 = w+1)
    CHECK(r.sign[1][1] == 1);
    CHECK(r.sign[2][2] == 1);
    CHECK(r.sign[3][3] == 1);
}

TEST_CASE("coefficient string round trip") {
    CHECK(coeff_to_string(Coeff(1, 2)) == "1/2");
    CHECK(coeff_to_string(Coeff(-3)) == "-3/1");
    CHECK(coeff_from_string("7/2") == Coeff(7, 2));
    CHECK(coeff_from_string("-4") == Coeff(-4));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Octonion a = random_dyadic_octonion(rng);
        for (F8 x : f8_all()) CHECK(coeff_from_string(coeff_to_string(a[x])) == a[x]);
    }
}
