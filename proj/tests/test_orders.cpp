#include <doctest.h>

#include <random>
#include <stdexcept>

#include "octwist/orders.hpp"
#include "octwist/verify.hpp"

using namespace octwist;

TEST_CASE("e_half") {
    for (unsigned m = 0; m < 256; ++m) {
        const Subset x = static_cast<Subset>(m);
        const int sz = subset_size(x);
        if (sz != 0 && sz != 4 && sz != 8) {
            CHECK_THROWS_AS(e_half(x), std::invalid_argument);
            continue;
        }
        const Octonion a = e_half(x);
        CHECK(halving_set(a) == x);
        if (sz == 4) {
            CHECK(norm(a) == Coeff(1));
            const Octonion sq = multiply(a, a);
            if (subset_contains(x, f8_zero))
                CHECK(sq == a - basis(f8_zero));
            else
                CHECK(sq == -basis(f8_zero));
        }
    }
}

TEST_CASE("halving_set") {
    for (F8 x : f8_all()) CHECK(halving_set(basis(x)) == subset_empty);
    Octonion bad;
    bad[f8_zero] = Coeff(1, 4);
    CHECK_THROWS_AS(halving_set(bad), std::invalid_argument);
}

TEST_CASE("hermite normal form is canonical") {
    // same lattice from generators in a different order / with redundancy
    std::vector<ScaledVec> g1, g2;
    for (F8 x : f8_all()) g1.push_back(scale_by_two(basis(x)));
    const Subset line = 0x0f;
    g1.push_back(scale_by_two(e_half(line)));
    g2 = g1;
    std::reverse(g2.begin(), g2.end());
    g2.push_back(scale_by_two(e_half(line) + basis(f8_one)));
    CHECK(hermite_normal_form(g1) == hermite_normal_form(g2));

    std::vector<ScaledVec> deficient(g1.begin(), g1.begin() + 4);
    CHECK_THROWS_AS(hermite_normal_form(deficient), std::logic_error);
}

TEST_CASE("build_order basics") {
    const auto orders = build_all_orders();
    REQUIRE(orders.size() == 16);
    CHECK(orders[0].name == "Gravesian");
    CHECK(orders[1].name == "Kleinian");
    // Gravesian is O(Z): basis {e^x}
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(orders[0].lattice.rows[i][j] == (i == j ? 2 : 0));
    for (const auto& o : orders) {
        for (F8 x : f8_all()) CHECK(contains(o, basis(x)));  // O(Z) inside every order
        for (Subset m : o.orbit.members) CHECK(contains(o, e_half(m)));
    }
    // Gravesian excludes halved lines
    CHECK_FALSE(contains(orders[0], e_half(0x0f)));
}

TEST_CASE("verify_closed on all 16 orders") {
    for (const auto& o : build_all_orders()) {
        const ClosureCertificate c = verify_closed(o);
        CHECK(c.pass);
        CHECK(c.products_checked == 64);
    }
}

TEST_CASE("verify_generated reaches the built lattice") {
    for (const auto& orbit : orbit_decomposition()) {
        const GeneratedCertificate c = verify_generated(orbit, orbit.members.front());
        CHECK(c.pass);
    }
    const auto orbits = orbit_decomposition();
    CHECK_THROWS_AS(verify_generated(orbits[0], 0x0f), std::invalid_argument);
}

TEST_CASE("gram certificates match the oracle table") {
    // expected values from tests/oracle/units_oracle.py
    for (const auto& o : build_all_orders()) {
        const GramCertificate c = gram_certificate(o);
        CHECK(c.even);
        switch (o.orbit.kind) {
            case OrbitKind::Empty:
                CHECK(c.determinant == 256);
                CHECK(c.unit_count == 16);
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) CHECK(c.gram[i][j] == (i == j ? 2 : 0));
                break;
            case OrbitKind::Full:
                CHECK(c.determinant == 64);
                CHECK(c.unit_count == 16);
                break;
            case OrbitKind::LinePair:
                CHECK(c.determinant == 16);
                CHECK(c.unit_count == 48);
                break;
            case OrbitKind::Outer:
                CHECK(c.determinant == 1);
                CHECK(c.unit_count == 240);
                break;
        }
    }
}

TEST_CASE("containment poset") {
    const auto orders = build_all_orders();
    const Poset p = containment_poset(orders);
    CHECK(p.maximal.size() == 7);
    CHECK(p.minimal.size() == 1);
    CHECK(orders[static_cast<std::size_t>(p.minimal[0])].name == "Gravesian");
    for (int m : p.maximal) CHECK(orders[static_cast<std::size_t>(m)].orbit.kind == OrbitKind::Outer);
    // Kleinian sits below every octavian order
    for (int j = 0; j < 16; ++j)
        if (orders[static_cast<std::size_t>(j)].orbit.kind == OrbitKind::Outer) CHECK(p.leq[1][j]);
}

TEST_CASE("trace pairing obstruction") {
    CHECK(trace_pairing_obstruction(basis(f8_one), basis(f8_alpha)) == 0);
    const Orbit o = outer_family(f8_alpha);
    CHECK(trace_pairing_obstruction(e_half(o.members[0]), e_half(o.members[1])) == 0);
    // a line and a size-4 set meeting it in one point
    const Subset line = 0x0f;  // {0, 1, alpha, 1+alpha}
    const Subset other = 0xe1; // {0} plus three elements off the line
    REQUIRE(subset_size(static_cast<Subset>(line & other)) == 1);
    CHECK(trace_pairing_obstruction(e_half(line), e_half(other)) == 1);
}

TEST_CASE("conway smith names") {
    const auto orbits = orbit_decomposition();
    CHECK(conway_smith_name(orbits[0]) == "Gravesian");
    CHECK(conway_smith_name(orbits[1]) == "Kleinian");
    int j_names = 0, dh_names = 0;
    for (const auto& o : orbits) {
        const std::string n = conway_smith_name(o);
        if (n.ends_with("-integers")) ++j_names;
        if (n.starts_with("double-Hurwitzian")) ++dh_names;
    }
    CHECK(j_names == 7);
    CHECK(dh_names == 7);
}
