#include "octwist/codes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace octwist {

int subset_size(Subset x) { return std::popcount(x); }

bool subset_contains(Subset x, F8 e) { return (x >> e.bits()) & 1u; }

Subset subset_complement(Subset x) { return static_cast<Subset>(~x); }

std::string subset_hex(Subset x) {
    static const char* digits = "0123456789abcdef";
    return std::string{digits[x >> 4], digits[x & 15]};
}

F8 sigma_sum(Subset x) {
    F8 s = f8_zero;
    for (F8 e : f8_all())
        if (subset_contains(x, e)) s = add(s, e);
    return s;
}

Subset translate(Subset x, F8 z) {
    Subset r = 0;
    for (F8 e : f8_all())
        if (subset_contains(x, e)) r |= static_cast<Subset>(1u << add(z, e).bits());
    return r;
}

int beta(Subset x, Subset y) { return std::popcount(static_cast<Subset>(x & y)) & 1; }

std::vector<Subset> enumerate_H() {
    std::vector<Subset> h;
    for (unsigned m = 0; m < 256; ++m) {
        const int sz = std::popcount(m);
        if (sz == 0 || sz == 4 || sz == 8) h.push_back(static_cast<Subset>(m));
    }
    return h;
}

std::vector<Subset> lines() {
    std::set<Subset> out;
    for (F8 x : f8_all()) {
        for (F8 y : f8_all()) {
            if (x.is_zero() || y.is_zero() || x == y) continue;
            const Subset l = static_cast<Subset>(1u | (1u << x.bits()) | (1u << y.bits()) |
                                                 (1u << add(x, y).bits()));
            out.insert(l);
        }
    }
    if (out.size() != 7) throw std::logic_error("expected 7 lines");
    return {out.begin(), out.end()};
}

std::string orbit_kind_name(OrbitKind k) {
    switch (k) {
        case OrbitKind::Empty: return "empty";
        case OrbitKind::Full: return "full";
        case OrbitKind::LinePair: return "line-pair";
        case OrbitKind::Outer: return "outer";
    }
    return "?";
}

Orbit outer_family(F8 x) {
    if (x.is_zero()) throw std::invalid_argument("outer families need a nonzero sigma-sum");
    Orbit o;
    o.kind = OrbitKind::Outer;
    o.sigma_label = x;
    for (unsigned m = 0; m < 256; ++m) {
        const Subset s = static_cast<Subset>(m);
        if (subset_size(s) == 4 && sigma_sum(s) == x) o.members.push_back(s);
    }
    if (o.members.size() != 8) throw std::logic_error("outer family is not an orbit of size 8");
    return o;
}

std::vector<Orbit> orbit_decomposition() {
    std::vector<Orbit> orbits;
    orbits.push_back({OrbitKind::Empty, 0, f8_zero, {subset_empty}});
    orbits.push_back({OrbitKind::Full, 0, f8_zero, {subset_full}});

    std::set<Subset> assigned{subset_empty, subset_full};
    for (Subset l : lines()) {
        Orbit o;
        o.kind = OrbitKind::LinePair;
        o.line_label = l;
        o.members = {l, subset_complement(l)};
        std::sort(o.members.begin(), o.members.end());
        for (Subset m : o.members) assigned.insert(m);
        orbits.push_back(std::move(o));
    }
    for (F8 x : f8_all()) {
        if (x.is_zero()) continue;
        Orbit o = outer_family(x);
        for (Subset m : o.members) assigned.insert(m);
        orbits.push_back(std::move(o));
    }

    // census against H
    if (orbits.size() != 16) throw std::logic_error("expected 16 orbits");
    std::size_t total = 0;
    for (const Orbit& o : orbits) {
        total += o.members.size();
        for (Subset m : o.members) {
            for (F8 z : f8_all()) {
                const Subset t = translate(m, z);
                if (std::find(o.members.begin(), o.members.end(), t) == o.members.end())
                    throw std::logic_error("orbit not closed under translation");
            }
        }
    }
    if (total != 72 || assigned.size() != 72) throw std::logic_error("orbits do not partition H");
    return orbits;
}

bool Code::contains(Subset w) const { return std::binary_search(words.begin(), words.end(), w); }

Code span(const Orbit& orbit) {
    std::set<Subset> words{subset_empty};
    bool changed = true;
    while (changed) {
        changed = false;
        for (Subset g : orbit.members) {
            for (Subset w : std::vector<Subset>(words.begin(), words.end())) {
                if (words.insert(static_cast<Subset>(w ^ g)).second) changed = true;
            }
        }
    }
    // closure under symmetric difference of everything found
    for (Subset a : words)
        for (Subset b : words)
            if (!words.count(static_cast<Subset>(a ^ b)))
                throw std::logic_error("span is not closed under symmetric difference");
    return Code{{words.begin(), words.end()}};
}

Code dual(const Code& code) {
    Code d;
    for (unsigned m = 0; m < 256; ++m) {
        const Subset y = static_cast<Subset>(m);
        bool ok = true;
        for (Subset w : code.words)
            if (beta(y, w)) ok = false;
        if (ok) d.words.push_back(y);
    }
    return d;
}

IntersectionReport check_intersection_lemma(F8 z) {
    if (z.is_zero()) throw std::invalid_argument("z must be nonzero");
    IntersectionReport rep;
    rep.pass = true;
    const Orbit oz = outer_family(z);
    std::set<Subset> lines_z;
    for (Subset l : lines())
        if (subset_contains(l, z)) lines_z.insert(l);

    std::set<Subset> seen_lines;
    for (Subset x : oz.members) {
        for (Subset y : oz.members) {
            if (x == y || y == subset_complement(x)) continue;
            ++rep.pairs_checked;
            if (subset_size(static_cast<Subset>(x & y)) != 2) rep.pass = false;
            const Subset d = static_cast<Subset>(x ^ y);
            const Subset line = subset_contains(d, f8_zero) ? d : subset_complement(d);
            if (!lines_z.count(line)) rep.pass = false;
            seen_lines.insert(line);
        }
    }
    if (seen_lines != lines_z) rep.pass = false;
    rep.lines_through_z = {seen_lines.begin(), seen_lines.end()};
    return rep;
}

F8 GL3::apply(F8 x) const {
    unsigned out = 0;
    for (int i = 0; i < 3; ++i) out |= static_cast<unsigned>(std::popcount(static_cast<unsigned>(rows[i] & x.bits())) & 1) << i;
    return F8(out);
}

Subset GL3::apply(Subset s) const {
    Subset r = 0;
    for (F8 e : f8_all())
        if (subset_contains(s, e)) r |= static_cast<Subset>(1u << apply(e).bits());
    return r;
}

std::vector<GL3> gl3_elements() {
    std::vector<GL3> out;
    for (unsigned r0 = 1; r0 < 8; ++r0) {
        for (unsigned r1 = 1; r1 < 8; ++r1) {
            for (unsigned r2 = 1; r2 < 8; ++r2) {
                // invertible iff the rows are F2-independent
                if (r1 == r0 || r2 == r0 || r2 == r1 || r2 == (r0 ^ r1) || r1 == 0 || r2 == 0) continue;
                out.push_back(GL3{{static_cast<std::uint8_t>(r0), static_cast<std::uint8_t>(r1),
                                   static_cast<std::uint8_t>(r2)}});
            }
        }
    }
    if (out.size() != 168) throw std::logic_error("expected |GL3(F2)| = 168");
    return out;
}

}  // namespace octwist
