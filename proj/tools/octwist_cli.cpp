#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "octwist/cocycle.hpp"
#include "octwist/codes.hpp"
#include "octwist/octonion.hpp"
#include "octwist/orders.hpp"
#include "octwist/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace octwist;

enum class Format { Text, Csv, Json };

std::string signed_label(const TableEntry& e) {
    return (e.sign < 0 ? "-" : "") + label_to_string(e.label);
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Octonion as the JSON object used across the CLI: keys e0, e_a1..e_a7
// (coefficient at the field element alpha^j), values "p/q".
json octonion_json(const Octonion& a) {
    json j = json::object();
    j["e0"] = coeff_to_string(a[f8_zero]);
    for (unsigned k = 1; k <= 7; ++k) j["e_a" + std::to_string(k)] = coeff_to_string(a[alpha_pow(k)]);
    return j;
}

json orbit_json(const Orbit& o) {
    json j = json::object();
    j["kind"] = orbit_kind_name(o.kind);
    if (o.kind == OrbitKind::LinePair)
        j["label"] = subset_hex(o.line_label);
    else if (o.kind == OrbitKind::Outer)
        j["label"] = "a^" + std::to_string([&] {
            for (unsigned k = 0; k < 7; ++k)
                if (alpha_pow(k) == o.sigma_label) return k;
            return 0u;
        }());
    else
        j["label"] = "";
    json members = json::array();
    for (Subset m : o.members) members.push_back(subset_hex(m));
    j["members"] = members;
    return j;
}

int cmd_table(Format fmt) {
    const StandardTable t = standard_table();  // throws (-> exit 1) if the cross-check fails
    const auto header = [](int i) { return label_to_string(i); };
    if (fmt == Format::Json) {
        json rows = json::array();
        for (int i = 0; i < 8; ++i) {
            json row = json::array();
            for (int j = 0; j < 8; ++j)
                row.push_back(json{{"index", label_to_f8(t[i][j].label).bits()}, {"sign", t[i][j].sign}});
            rows.push_back(row);
        }
        emit_json(json{{"rows", rows}});
    } else if (fmt == Format::Csv) {
        std::cout << "lhs";
        for (int j = 0; j < 8; ++j) std::cout << "," << header(j);
        std::cout << "\n";
        for (int i = 0; i < 8; ++i) {
            std::cout << header(i);
            for (int j = 0; j < 8; ++j) std::cout << "," << signed_label(t[i][j]);
            std::cout << "\n";
        }
    } else {
        std::cout << "        ";
        for (int j = 0; j < 8; ++j) std::cout << header(j) << (j < 7 ? "    " : "");
        std::cout << "\n";
        for (int i = 0; i < 8; ++i) {
            std::cout << header(i) << (i == 0 ? "   " : "     ");
            for (int j = 0; j < 8; ++j) {
                std::string cell = signed_label(t[i][j]);
                cell.resize(8, ' ');
                std::cout << cell;
            }
            std::cout << "\n";
        }
        std::cout << "(subscripts mod 7: e_7 = e_0)\n";
    }
    return 0;
}

int cmd_phi(Format fmt) {
    if (fmt == Format::Json) {
        json rows = json::array();
        for (F8 x : f8_all()) {
            json row = json::array();
            for (F8 y : f8_all()) row.push_back(phi(x, y));
            rows.push_back(row);
        }
        emit_json(json{{"phi", rows}});
        return 0;
    }
    const char sep = fmt == Format::Csv ? ',' : ' ';
    for (F8 x : f8_all()) {
        for (F8 y : f8_all()) std::cout << phi(x, y) << (y.bits() == 7 ? '\n' : sep);
    }
    return 0;
}

int cmd_orbits(Format fmt) {
    const auto orbits = orbit_decomposition();
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const Orbit& o : orbits) {
            json j = orbit_json(o);
            j["name"] = conway_smith_name(o);
            arr.push_back(j);
        }
        emit_json(json{{"orbits", arr}});
        return 0;
    }
    const std::string sep = fmt == Format::Csv ? "," : "  ";
    if (fmt == Format::Csv) std::cout << "kind,label,size,name,members\n";
    for (const Orbit& o : orbits) {
        const json j = orbit_json(o);
        std::string members;
        for (Subset m : o.members) members += subset_hex(m) + (fmt == Format::Csv ? ";" : " ");
        std::cout << j["kind"].get<std::string>() << sep << j["label"].get<std::string>() << sep
                  << o.members.size() << sep << conway_smith_name(o) << sep << members << "\n";
    }
    return 0;
}

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

int cmd_order(const std::string& selector, Format fmt) {
    const auto orders = build_all_orders();
    const IntegralOrder* found = nullptr;
    for (const auto& o : orders)
        if (lowered(o.name) == lowered(selector)) found = &o;
    if (!found) {
        std::cerr << "unknown order '" << selector << "'; valid names:\n";
        for (const auto& o : orders) std::cerr << "  " << o.name << "\n";
        return 2;
    }
    const auto& o = *found;
    const GramCertificate cert = gram_certificate(o);
    const ClosureCertificate closure = verify_closed(o);
    const GeneratedCertificate generated = verify_generated(o.orbit, o.orbit.members.front());

    json j = json::object();
    j["name"] = o.name;
    j["orbit"] = orbit_json(o.orbit);
    json code = json::array();
    for (Subset w : o.code.words) code.push_back(subset_hex(w));
    j["code"] = code;
    json basis = json::array();
    for (int i = 0; i < 8; ++i) basis.push_back(octonion_json(o.lattice.basis_octonion(i)));
    j["basis"] = basis;
    json gram = json::array();
    for (int i = 0; i < 8; ++i) {
        json row = json::array();
        for (int k = 0; k < 8; ++k) row.push_back(cert.gram[i][k]);
        gram.push_back(row);
    }
    j["gram"] = gram;
    j["determinant"] = cert.determinant;
    j["even"] = cert.even;
    j["unit_count"] = cert.unit_count;
    j["closure"] = closure.pass ? "pass" : "fail";
    j["generated_check"] = generated.pass ? "pass" : "fail";

    if (fmt == Format::Json) {
        emit_json(j);
    } else if (fmt == Format::Csv) {
        std::cout << "field,value\n";
        std::cout << "name," << o.name << "\n";
        std::cout << "kind," << orbit_kind_name(o.orbit.kind) << "\n";
        std::cout << "determinant," << cert.determinant << "\n";
        std::cout << "even," << (cert.even ? "true" : "false") << "\n";
        std::cout << "unit_count," << cert.unit_count << "\n";
        std::cout << "closure," << (closure.pass ? "pass" : "fail") << "\n";
        std::cout << "generated_check," << (generated.pass ? "pass" : "fail") << "\n";
    } else {
        std::cout << "order " << o.name << " (" << orbit_kind_name(o.orbit.kind) << ")\n";
        std::cout << "code:";
        for (Subset w : o.code.words) std::cout << " " << subset_hex(w);
        std::cout << "\nbasis (coefficients at e^x, field bit order):\n";
        for (int i = 0; i < 8; ++i) {
            std::cout << "  ";
            const Octonion b = o.lattice.basis_octonion(i);
            for (F8 x : f8_all()) std::cout << coeff_to_string(b[x]) << " ";
            std::cout << "\n";
        }
        std::cout << "gram:\n";
        for (int i = 0; i < 8; ++i) {
            std::cout << "  ";
            for (int k = 0; k < 8; ++k) std::cout << cert.gram[i][k] << " ";
            std::cout << "\n";
        }
        std::cout << "determinant: " << cert.determinant << "\n";
        std::cout << "even: " << (cert.even ? "true" : "false") << "\n";
        std::cout << "units: " << cert.unit_count << "\n";
        std::cout << "closure: " << (closure.pass ? "pass" : "fail") << "\n";
        std::cout << "generated_check: " << (generated.pass ? "pass" : "fail") << "\n";
    }
    return closure.pass && generated.pass ? 0 : 1;
}

int cmd_verify(std::uint64_t seed, Format fmt, const std::vector<int>& corrupt) {
    std::unique_ptr<PhiCorruption> corruption;
    if (corrupt.size() == 2)
        corruption = std::make_unique<PhiCorruption>(F8(static_cast<unsigned>(corrupt[0])),
                                                     F8(static_cast<unsigned>(corrupt[1])));
    const auto results = run_verification_suite(seed);
    if (fmt == Format::Json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        emit_json(json{{"seed", seed}, {"checks", arr}, {"all_pass", all_passed(results)}});
    } else {
        const char sep = fmt == Format::Csv ? ',' : ' ';
        if (fmt == Format::Csv) std::cout << "name,status,detail\n";
        for (const auto& r : results) {
            if (fmt == Format::Csv)
                std::cout << r.name << sep << (r.pass ? "pass" : "FAIL") << sep << r.detail << "\n";
            else
                std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  (" << r.detail << ")\n";
        }
        std::cout << (all_passed(results) ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return all_passed(results) ? 0 : 1;
}

int cmd_f4(Format fmt) {
    const F4Report r = check_f4_remark();
    if (fmt == Format::Json) {
        emit_json(json{{"commutative", r.commutative},
                       {"associative", r.associative},
                       {"squares_identity", r.squares_identity},
                       {"identity_laws", r.identity_laws},
                       {"pass", r.pass()}});
    } else {
        const char* names[4] = {"e^0", "e^1", "e^w", "e^(w+1)"};
        std::cout << "twisted F4 algebra, sigma(x,y) = (-1)^tr(y x^2)\n";
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j)
                std::cout << (r.sign[i][j] < 0 ? "-" : "") << names[i ^ j] << (j < 3 ? "\t" : "\n");
        }
        const char s = fmt == Format::Csv ? ',' : ' ';
        std::cout << "commutative" << s << (r.commutative ? "pass" : "fail") << "\n";
        std::cout << "associative" << s << (r.associative ? "pass" : "fail") << "\n";
        std::cout << "squares_identity" << s << (r.squares_identity ? "pass" : "fail") << "\n";
        std::cout << "identity_laws" << s << (r.identity_laws ? "pass" : "fail") << "\n";
    }
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact octonion arithmetic over F8 and the 16 integral orders"};
    app.require_subcommand(1);

    std::string format_str = "text";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_str, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };

    auto* table = app.add_subcommand("table", "signed multiplication table of e_inf, e_1..e_7");
    auto* phi_cmd = app.add_subcommand("phi", "8x8 matrix of the cocycle bit phi(x,y)");
    auto* orbits = app.add_subcommand("orbits", "the 16 translation orbits on H");
    auto* order = app.add_subcommand("order", "certificate for one of the 16 integral orders");
    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    auto* f4 = app.add_subcommand("f4", "the commutative associative twisted F4 algebra");
    for (auto* c : {table, phi_cmd, orbits, order, verify, f4}) add_format(c);

    std::string selector;
    order->add_option("name", selector, "order name (see `orbits` for the list)")->required();

    std::uint64_t seed = octwist::kDefaultSeed;
    verify->add_option("--seed", seed, "seed for the randomized checks");
    std::vector<int> corrupt;
    verify->add_option("--corrupt-phi", corrupt, "flip one phi table entry (test hook)")
        ->expected(2)
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2
    }

    const Format fmt = format_str == "json" ? Format::Json
                       : format_str == "csv" ? Format::Csv
                                             : Format::Text;
    try {
        if (table->parsed()) return cmd_table(fmt);
        if (phi_cmd->parsed()) return cmd_phi(fmt);
        if (orbits->parsed()) return cmd_orbits(fmt);
        if (order->parsed()) return cmd_order(selector, fmt);
        if (verify->parsed()) return cmd_verify(seed, fmt, corrupt);
        if (f4->parsed()) return cmd_f4(fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
