#include "octwist/octonion.hpp"

#include <optional>
#include <stdexcept>

namespace octwist {

std::string coeff_to_string(const Coeff& c) {
    return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

Coeff coeff_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Coeff(std::stoll(s));
    return Coeff(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

bool Octonion::is_zero() const {
    for (const auto& v : c_)
        if (v.numerator() != 0) return false;
    return true;
}

Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

Octonion operator-(const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = -a.c_[i];
    return r;
}

Octonion operator*(const Coeff& s, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = s * a.c_[i];
    return r;
}

Octonion basis(F8 x) {
    Octonion r;
    r[x] = 1;
    return r;
}

Octonion multiply(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (F8 x : f8_all()) {
        if (a[x].numerator() == 0) continue;
        for (F8 y : f8_all()) {
            if (b[y].numerator() == 0) continue;
            const Coeff term = a[x] * b[y];
            r[add(x, y)] += sign_sigma(x, y) > 0 ? term : -term;
        }
    }
    return r;
}

Octonion conjugate(const Octonion& a) {
    Octonion r = -a;
    r[f8_zero] = a[f8_zero];
    return r;
}

Octonion real_part(const Octonion& a) {
    Octonion r;
    r[f8_zero] = a[f8_zero];
    return r;
}

Octonion imag_part(const Octonion& a) { return a - real_part(a); }

Coeff trace_oct(const Octonion& a) { return 2 * a[f8_zero]; }

Coeff norm(const Octonion& a) {
    Coeff n = 0;
    for (F8 x : f8_all()) n += a[x] * a[x];
    const Octonion p = multiply(a, conjugate(a));
    for (F8 x : f8_all()) {
        const Coeff want = x == f8_zero ? n : Coeff(0);
        if (p[x] != want) throw std::logic_error("a a* is not the scalar sum of squares");
    }
    return n;
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
    return multiply(multiply(a, b), c) - multiply(a, multiply(b, c));
}

Octonion associator_formula(F8 x, F8 y, F8 z) {
    const std::array<F8, 3> xs{x, y, z};
    const int ind = ind_rank(xs);
    const long long factor = 1 - (ind ? -1 : 1);  // 0 or 2
    const int parity = (phi(x, y) + phi(y, z) + phi(z, x)) % 2;
    Octonion r;
    r[add(add(x, y), z)] = Coeff((parity ? -1 : 1) * factor);
    return r;
}

F8 label_to_f8(int label) {
    if (label == 0) return f8_zero;
    return alpha_pow(static_cast<unsigned>(label));
}

std::string label_to_string(int label) { return label == 0 ? "e_inf" : "e_" + std::to_string(label); }

namespace {

// label of a basis index: 0 (infinity) for the field zero, else the j in
// 1..7 with alpha^j = x.
int f8_to_label(F8 x) {
    if (x == f8_zero) return 0;
    for (int j = 1; j <= 7; ++j)
        if (alpha_pow(static_cast<unsigned>(j)) == x) return j;
    throw std::logic_error("unreachable");
}

int norm7(int j) { return (j - 1) % 7 + ((j - 1) % 7 < 0 ? 7 : 0) + 1; }

StandardTable table_from_multiply() {
    StandardTable t;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Octonion p = multiply(basis(label_to_f8(i)), basis(label_to_f8(j)));
            TableEntry e;
            int nonzero = 0;
            for (F8 z : f8_all()) {
                if (p[z].numerator() == 0) continue;
                ++nonzero;
                e.label = f8_to_label(z);
                e.sign = p[z] > Coeff(0) ? 1 : -1;
                if (p[z] != Coeff(1) && p[z] != Coeff(-1))
                    throw std::logic_error("basis product is not a signed basis element");
            }
            if (nonzero != 1) throw std::logic_error("basis product is not a signed basis element");
            t[i][j] = e;
        }
    }
    return t;
}

StandardTable table_from_seed_relations() {
    // Positive products among e_1..e_7: closure of e_1 e_2 = e_4 under the
    // index-shift and index-doubling rules.
    std::optional<int> pos[8][8];
    pos[1][2] = 4;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= 7; ++i) {
            for (int j = 1; j <= 7; ++j) {
                if (!pos[i][j]) continue;
                const int k = *pos[i][j];
                const int triples[2][3] = {{norm7(i + 1), norm7(j + 1), norm7(k + 1)},
                                           {norm7(2 * i), norm7(2 * j), norm7(2 * k)}};
                for (const auto& tr : triples) {
                    auto& slot = pos[tr[0]][tr[1]];
                    if (!slot) {
                        slot = tr[2];
                        changed = true;
                    } else if (*slot != tr[2]) {
                        throw std::logic_error("seed relations are inconsistent");
                    }
                }
            }
        }
    }

    StandardTable t;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (i == 0) {
                t[i][j] = {j, 1};  // identity row
            } else if (j == 0) {
                t[i][j] = {i, 1};  // identity column
            } else if (i == j) {
                t[i][j] = {0, -1};  // squares are -e_inf
            } else if (pos[i][j]) {
                t[i][j] = {*pos[i][j], 1};
            } else if (pos[j][i]) {
                t[i][j] = {*pos[j][i], -1};  // anticommutation
            } else {
                throw std::logic_error("seed relations do not determine the table");
            }
        }
    }
    return t;
}

}  // namespace

StandardTable standard_table() {
    const StandardTable direct = table_from_multiply();
    const StandardTable seeded = table_from_seed_relations();
    if (direct != seeded) throw std::logic_error("seed-relation table disagrees with multiply()");
    return direct;
}

namespace {

// F4 in the basis {1, w} with w^2 = w + 1; bit i = coefficient of w^i.
unsigned f4_mul(unsigned a, unsigned b) {
    unsigned p = 0;
    for (int i = 0; i < 2; ++i)
        if ((b >> i) & 1u) p ^= a << i;
    if (p & 4u) p ^= 0b111u;
    return p & 3u;
}

int f4_phi(unsigned x, unsigned y) {
    const unsigned v = f4_mul(y, f4_mul(x, x));  // y x^2
    const unsigned tr = v ^ f4_mul(v, v);        // x + x^2, lands in F2
    return tr & 1u;
}

}  // namespace

F4Report check_f4_remark() {
    F4Report r;
    r.commutative = r.associative = r.squares_identity = r.identity_laws = true;
    for (unsigned x = 0; x < 4; ++x) {
        for (unsigned y = 0; y < 4; ++y) r.sign[x][y] = f4_phi(x, y) ? -1 : 1;
        if (f4_phi(x, x) != 0) r.squares_identity = false;
        if (f4_phi(0, x) != 0 || f4_phi(x, 0) != 0) r.identity_laws = false;
        for (unsigned y = 0; y < 4; ++y) {
            if (f4_phi(x, y) != f4_phi(y, x)) r.commutative = false;
            for (unsigned z = 0; z < 4; ++z) {
                // signs of (e^x e^y) e^z and e^x (e^y e^z); indices agree by
                // additivity, so associativity is a sign condition.
                const int lhs = (f4_phi(x, y) + f4_phi(x ^ y, z)) % 2;
                const int rhs = (f4_phi(y, z) + f4_phi(x, y ^ z)) % 2;
                if (lhs != rhs) r.associative = false;
            }
        }
    }
    return r;
}

}  // namespace octwist
