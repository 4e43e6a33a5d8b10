#include "octwist/orders.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace octwist {

namespace {

bool is_zero_row(const ScaledVec& r) {
    return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

void subtract_multiple(ScaledVec& r, const ScaledVec& p, long long q) {
    for (int j = 0; j < 8; ++j) r[j] -= q * p[j];
}

// Floor division, so the remainder lands in [0, |b|).
long long fdiv(long long a, long long b) {
    long long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

Lattice hermite_normal_form(std::vector<ScaledVec> rows) {
    std::erase_if(rows, is_zero_row);
    Lattice h;
    int pivot_row = 0;
    for (int col = 0; col < 8 && pivot_row < 8; ++col) {
        // Euclid on the column until a single nonzero entry survives.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;  // column is zero on the remaining rows
            bool remainder_left = false;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                subtract_multiple(rows[i], rows[best], fdiv(rows[i][col], rows[best][col]));
                if (rows[i][col] != 0) remainder_left = true;
            }
            if (!remainder_left) {
                ScaledVec p = rows[best];
                if (p[col] < 0)
                    for (auto& v : p) v = -v;
                h.rows[pivot_row++] = p;
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
                std::erase_if(rows, is_zero_row);
                break;
            }
        }
    }
    if (pivot_row != 8) throw std::logic_error("lattice rank below 8");
    // Reduce entries above each pivot into [0, pivot). For a fixed row,
    // pivots must be applied left to right: subtracting pivot row i only
    // touches columns >= i, so later (larger-i) reductions stay intact.
    for (int j = 6; j >= 0; --j) {
        for (int i = j + 1; i < 8; ++i) {
            const long long q = fdiv(h.rows[j][i], h.rows[i][i]);
            if (q != 0) subtract_multiple(h.rows[j], h.rows[i], q);
        }
    }
    return h;
}

bool Lattice::contains(const ScaledVec& v) const {
    ScaledVec w = v;
    for (int j = 0; j < 8; ++j) {
        if (w[j] % rows[j][j] != 0) return false;
        subtract_multiple(w, rows[j], w[j] / rows[j][j]);
    }
    return is_zero_row(w);
}

Octonion Lattice::basis_octonion(int i) const {
    Octonion a;
    for (int j = 0; j < 8; ++j) a[F8(static_cast<unsigned>(j))] = Coeff(rows[i][j], 2);
    return a;
}

ScaledVec scale_by_two(const Octonion& a) {
    ScaledVec v{};
    for (F8 x : f8_all()) {
        const Coeff c = 2 * a[x];
        if (!is_integer(c)) throw std::invalid_argument("octonion outside (1/2)Z^8");
        v[x.bits()] = c.numerator();
    }
    return v;
}

Octonion e_half(Subset x) {
    const int sz = subset_size(x);
    if (sz != 0 && sz != 4 && sz != 8) throw std::invalid_argument("subset outside H");
    Octonion a;
    for (F8 e : f8_all())
        if (subset_contains(x, e)) a[e] = half();
    return a;
}

Subset halving_set(const Octonion& a) {
    Subset s = 0;
    for (F8 x : f8_all()) {
        const auto d = a[x].denominator();
        if (d > 2) throw std::invalid_argument("halving sets are defined only inside (1/2)O(Z)");
        if (d == 2) s |= static_cast<Subset>(1u << x.bits());
    }
    return s;
}

std::string conway_smith_name(const Orbit& orbit) {
    switch (orbit.kind) {
        case OrbitKind::Empty: return "Gravesian";
        case OrbitKind::Full: return "Kleinian";
        case OrbitKind::LinePair: return "double-Hurwitzian-" + subset_hex(orbit.line_label);
        case OrbitKind::Outer:
            for (unsigned j = 0; j < 7; ++j)
                if (alpha_pow(j) == orbit.sigma_label) return std::to_string(j) + "-integers";
            break;
    }
    throw std::logic_error("unnameable orbit");
}

IntegralOrder build_order(const Orbit& orbit) {
    std::vector<ScaledVec> gens;
    for (F8 x : f8_all()) gens.push_back(scale_by_two(basis(x)));
    for (Subset m : orbit.members) gens.push_back(scale_by_two(e_half(m)));
    IntegralOrder o;
    o.orbit = orbit;
    o.code = span(orbit);
    o.lattice = hermite_normal_form(std::move(gens));
    o.name = conway_smith_name(orbit);
    return o;
}

std::vector<IntegralOrder> build_all_orders() {
    std::vector<IntegralOrder> out;
    for (const Orbit& o : orbit_decomposition()) out.push_back(build_order(o));
    return out;
}

bool contains(const IntegralOrder& order, const Octonion& a) {
    bool by_code = true;
    for (F8 x : f8_all())
        if (a[x].denominator() > 2) by_code = false;
    if (by_code) by_code = order.code.contains(halving_set(a));

    bool by_lattice = false;
    try {
        by_lattice = order.lattice.contains(scale_by_two(a));
    } catch (const std::invalid_argument&) {
        by_lattice = false;
    }
    if (by_code != by_lattice)
        throw std::logic_error("halving-set test disagrees with the lattice solve");
    return by_lattice;
}

ClosureCertificate verify_closed(const IntegralOrder& order) {
    ClosureCertificate cert;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            ++cert.products_checked;
            const Octonion p = multiply(order.lattice.basis_octonion(i), order.lattice.basis_octonion(j));
            if (!contains(order, p)) ++cert.failures;
        }
    }
    cert.pass = cert.failures == 0;
    return cert;
}

GeneratedCertificate verify_generated(const Orbit& orbit, Subset x) {
    if (std::find(orbit.members.begin(), orbit.members.end(), x) == orbit.members.end())
        throw std::invalid_argument("x is not a member of the orbit");
    const Lattice target = build_order(orbit).lattice;

    std::vector<ScaledVec> gens;
    for (F8 z : f8_all()) gens.push_back(scale_by_two(basis(z)));
    gens.push_back(scale_by_two(e_half(x)));
    Lattice current = hermite_normal_form(gens);

    GeneratedCertificate cert;
    constexpr int kMaxIterations = 16;
    for (;;) {
        if (++cert.iterations > kMaxIterations)
            throw std::logic_error("closure-by-generation did not stabilize");
        std::vector<ScaledVec> next;
        for (int i = 0; i < 8; ++i) next.push_back(current.rows[i]);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                next.push_back(scale_by_two(
                    multiply(current.basis_octonion(i), current.basis_octonion(j))));
        Lattice grown = hermite_normal_form(std::move(next));
        if (grown == current) break;
        current = grown;
    }
    cert.pass = current == target;
    return cert;
}

namespace {

// Fraction-free Bareiss determinant of an 8x8 integer matrix.
long long det_bareiss(std::array<std::array<long long, 8>, 8> m) {
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < 7; ++k) {
        if (m[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < 8; ++i)
                if (m[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < 8; ++i) {
            for (int j = k + 1; j < 8; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[7][7];
}

}  // namespace

GramCertificate gram_certificate(const IntegralOrder& order) {
    GramCertificate cert;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            // <b_i, b_j> = tr(b_i b_j*) = 2 sum_k b_ik b_jk = sum_k S_ik S_jk / 2
            long long dot = 0;
            for (int k = 0; k < 8; ++k) dot += order.lattice.rows[i][k] * order.lattice.rows[j][k];
            if (dot % 2 != 0) throw std::logic_error("Gram entry is not an integer");
            cert.gram[i][j] = dot / 2;
        }
    }
    cert.even = true;
    for (int i = 0; i < 8; ++i)
        if (cert.gram[i][i] % 2 != 0) cert.even = false;
    cert.determinant = det_bareiss(cert.gram);

    // norm-1 enumeration over the 2-scaled box {-2..2}^8
    ScaledVec v{};
    const auto count_units = [&](auto&& self, int pos, long long sq) -> void {
        if (sq > 4) return;
        if (pos == 8) {
            if (sq != 4) return;
            Subset halving = 0;
            for (int i = 0; i < 8; ++i)
                if (v[i] % 2 != 0) halving |= static_cast<Subset>(1u << i);
            if (order.code.contains(halving)) ++cert.unit_count;
            return;
        }
        for (long long c = -2; c <= 2; ++c) {
            v[pos] = c;
            self(self, pos + 1, sq + c * c);
        }
        v[pos] = 0;
    };
    count_units(count_units, 0, 0);
    return cert;
}

Poset containment_poset(const std::vector<IntegralOrder>& orders) {
    if (orders.size() != 16) throw std::invalid_argument("expected the 16 orders");
    Poset p;
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            bool code_inside = std::all_of(orders[i].code.words.begin(), orders[i].code.words.end(),
                                           [&](Subset w) { return orders[j].code.contains(w); });
            bool lattice_inside = true;
            for (int k = 0; k < 8; ++k)
                if (!orders[j].lattice.contains(orders[i].lattice.rows[k])) lattice_inside = false;
            if (code_inside != lattice_inside)
                throw std::logic_error("code containment disagrees with lattice containment");
            p.leq[i][j] = code_inside;
        }
    }
    for (int i = 0; i < 16; ++i) {
        bool is_max = true, is_min = true;
        for (int j = 0; j < 16; ++j) {
            if (j == i) continue;
            if (p.leq[i][j]) is_max = false;
            if (p.leq[j][i]) is_min = false;
        }
        if (is_max) p.maximal.push_back(i);
        if (is_min) p.minimal.push_back(i);
    }
    return p;
}

int trace_pairing_obstruction(const Octonion& a, const Octonion& b) {
    const int bit = beta(halving_set(a), halving_set(b));
    // tr(ab) mod Z is 0 or 1/2; doubling makes the obstruction a parity.
    const Coeff doubled = 2 * trace_oct(multiply(a, b));
    if (!is_integer(doubled)) throw std::logic_error("tr(ab) outside (1/2)Z");
    const int parity = static_cast<int>(((doubled.numerator() % 2) + 2) % 2);
    if (parity != bit) throw std::logic_error("trace obstruction disagrees with beta");
    return bit;
}

}  // namespace octwist
