#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "octwist/cocycle.hpp"
#include "octwist/codes.hpp"
#include "octwist/octonion.hpp"
#include "octwist/orders.hpp"
#include "octwist/verify.hpp"

namespace py = pybind11;
using namespace octwist;

namespace {

F8 to_f8(unsigned bits) {
    if (bits > 7) throw std::invalid_argument("F8 elements are 0..7");
    return F8(bits);
}

Octonion octonion_from_fractions(const std::vector<std::string>& fractions) {
    if (fractions.size() != 8) throw std::invalid_argument("expected 8 coefficients");
    std::array<Coeff, 8> c;
    for (int i = 0; i < 8; ++i) c[static_cast<std::size_t>(i)] = coeff_from_string(fractions[static_cast<std::size_t>(i)]);
    return Octonion(c);
}

std::vector<std::string> octonion_to_fractions(const Octonion& a) {
    std::vector<std::string> out;
    for (F8 x : f8_all()) out.push_back(coeff_to_string(a[x]));
    return out;
}

}  // namespace

PYBIND11_MODULE(_octwist, m) {
    m.doc() = "exact octonion arithmetic over F8 and the 16 integral orders";

    // field and cocycle layer; elements are plain ints 0..7
    m.def("f8_add", [](unsigned x, unsigned y) { return add(to_f8(x), to_f8(y)).bits(); });
    m.def("f8_mul", [](unsigned x, unsigned y) { return mul(to_f8(x), to_f8(y)).bits(); });
    m.def("f8_pow", [](unsigned x, unsigned n) { return pow(to_f8(x), n).bits(); });
    m.def("f8_trace", [](unsigned x) { return trace(to_f8(x)); });
    m.def("f8_bar", [](unsigned x) { return bar(to_f8(x)).bits(); });
    m.def("phi", [](unsigned x, unsigned y) { return phi(to_f8(x), to_f8(y)); });
    m.def("sigma", [](unsigned x, unsigned y) { return sign_sigma(to_f8(x), to_f8(y)); });

    py::class_<Octonion>(m, "Octonion")
        .def(py::init(&octonion_from_fractions),
             "construct from 8 exact fraction strings, field bit order")
        .def_static("basis", [](unsigned x) { return basis(to_f8(x)); })
        .def("coefficients", &octonion_to_fractions)
        .def("__eq__", [](const Octonion& a, const Octonion& b) { return a == b; })
        .def("__add__", [](const Octonion& a, const Octonion& b) { return a + b; })
        .def("__sub__", [](const Octonion& a, const Octonion& b) { return a - b; })
        .def("__neg__", [](const Octonion& a) { return -a; })
        .def("__mul__", [](const Octonion& a, const Octonion& b) { return multiply(a, b); })
        .def("conjugate", [](const Octonion& a) { return conjugate(a); })
        .def("norm", [](const Octonion& a) { return coeff_to_string(norm(a)); })
        .def("trace", [](const Octonion& a) { return coeff_to_string(trace_oct(a)); })
        .def("__repr__", [](const Octonion& a) {
            std::string s = "Octonion([";
            for (F8 x : f8_all()) s += coeff_to_string(a[x]) + (x.bits() == 7 ? "" : ", ");
            return s + "])";
        });

    m.def("associator", &associator);
    m.def("associator_formula",
          [](unsigned x, unsigned y, unsigned z) { return associator_formula(to_f8(x), to_f8(y), to_f8(z)); });

    m.def("standard_table", [] {
        std::vector<std::vector<std::pair<std::string, int>>> rows;
        for (const auto& row : standard_table()) {
            std::vector<std::pair<std::string, int>> r;
            for (const TableEntry& e : row) r.emplace_back(label_to_string(e.label), e.sign);
            rows.push_back(std::move(r));
        }
        return rows;
    });

    m.def("orbits", [] {
        std::vector<py::dict> out;
        for (const Orbit& o : orbit_decomposition()) {
            py::dict d;
            d["kind"] = orbit_kind_name(o.kind);
            d["name"] = conway_smith_name(o);
            d["members"] = std::vector<int>(o.members.begin(), o.members.end());
            out.push_back(std::move(d));
        }
        return out;
    });

    m.def("order_certificate", [](const std::string& name) {
        for (const IntegralOrder& o : build_all_orders()) {
            if (o.name != name) continue;
            const GramCertificate c = gram_certificate(o);
            py::dict d;
            d["name"] = o.name;
            d["code"] = std::vector<int>(o.code.words.begin(), o.code.words.end());
            d["determinant"] = c.determinant;
            d["even"] = c.even;
            d["unit_count"] = c.unit_count;
            d["closure"] = verify_closed(o).pass;
            std::vector<std::vector<std::string>> b;
            for (int i = 0; i < 8; ++i) b.push_back(octonion_to_fractions(o.lattice.basis_octonion(i)));
            d["basis"] = b;
            return d;
        }
        throw std::invalid_argument("unknown order name");
    });

    m.def("order_names", [] {
        std::vector<std::string> names;
        for (const IntegralOrder& o : build_all_orders()) names.push_back(o.name);
        return names;
    });

    m.def(
        "run_verification_suite",
        [](std::uint64_t seed) {
            std::vector<py::dict> out;
            for (const CheckResult& r : run_verification_suite(seed)) {
                py::dict d;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("seed") = kDefaultSeed);
}
