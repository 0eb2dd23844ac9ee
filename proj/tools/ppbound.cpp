// Command-line frontend: compute (ppd/prod/phi/order/torus/mp/bounds),
// verify (property suites with JSON/CSV/text reports), and census
// (emit oracle-backed rows / validate a census file).
//
// Exit codes: 0 success or suite PASS, 1 suite FAIL, 2 usage/input error.

#include <CLI11.hpp>

#include "ppbound/suites.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace ppbound;

namespace {

#ifndef PPBOUND_DATA_DIR
#define PPBOUND_DATA_DIR "data"
#endif

std::string census_path() {
    if (const char* env = std::getenv("PPBOUND_CENSUS")) return env;
    return std::string(PPBOUND_DATA_DIR) + "/census.csv";
}

GroupId parse_group(const std::string& family, unsigned d, std::uint64_t q,
                    unsigned degree) {
    auto fam = family_from_tag(family);
    if (!fam) throw std::invalid_argument("unknown family tag '" + family + "'");
    GroupId id;
    if (*fam == Family::Alt) {
        if (degree == 0) throw std::invalid_argument("Alt needs --degree");
        id = GroupId::alt(degree);
    } else if (is_exceptional(*fam)) {
        if (q == 0) throw std::invalid_argument(family + " needs --q");
        id = GroupId::exceptional(*fam, q);
    } else {
        if (d == 0 || q == 0) throw std::invalid_argument(family + " needs --d and --q");
        id = GroupId::classical(*fam, d, q);
    }
    validate(id);
    return id;
}

// exact integers up to 10^4 digits, log-space "exp(X)" beyond
std::string render_big(const cpp_int& v) {
    std::string s = v.str();
    if (s.size() <= 10000) return s;
    char buf[48];
    std::snprintf(buf, sizeof buf, "exp(%.12g)", log(Real(v)).convert_to<double>());
    return buf;
}

std::string render_log(const LogMagnitude& m) {
    if (m.exact) return render_big(*m.exact);
    char buf[48];
    std::snprintf(buf, sizeof buf, "exp(%.12g)", m.ln_value.convert_to<double>());
    return buf;
}

std::string torus_line(const TorusSpec& t) {
    std::string line = "order=" + t.order.str();
    if (t.z) line += " z=" + std::to_string(*t.z);
    line += " r_divides=" + t.r_divides.str();
    line += " normalizer=\"" + t.normalizer_shape + "\"";
    line += " source=" + t.source;
    if (!t.condition.empty()) line += " condition=\"" + t.condition + "\"";
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime-power class-count bound toolkit"};
    app.require_subcommand(1);

    // --- ppd / prod ---
    unsigned ppd_m = 0;
    std::uint64_t ppd_q = 0;
    bool ppd_json = false;
    auto* ppd_cmd = app.add_subcommand("ppd", "S(m), s-parts and Prod(m,q)");
    ppd_cmd->add_option("--m", ppd_m, "exponent m")->required();
    ppd_cmd->add_option("--q", ppd_q, "prime power q")->required();
    ppd_cmd->add_flag("--json", ppd_json, "JSON output");

    unsigned prod_m = 0;
    std::uint64_t prod_q = 0;
    auto* prod_cmd = app.add_subcommand("prod", "Prod(m,q) only");
    prod_cmd->add_option("--m", prod_m, "exponent m")->required();
    prod_cmd->add_option("--q", prod_q, "prime power q")->required();

    // --- phi ---
    std::string phi_n;
    auto* phi_cmd = app.add_subcommand("phi", "Euler phi");
    phi_cmd->add_option("--n", phi_n, "positive integer")->required();

    // --- order / torus / mp ---
    std::string g_family;
    unsigned g_d = 0, g_degree = 0;
    std::uint64_t g_q = 0;
    bool mp_include_identity = false;
    auto add_group_opts = [&](CLI::App* cmd, bool with_identity) {
        cmd->add_option("--family", g_family,
                        "family tag (Alt, PSL, PSU, PSp, OmegaOdd, OmegaPlus, "
                        "OmegaMinus, 2B2, 2G2, 2F4, 3D4, G2, F4, E6, 2E6, E7, E8)")
            ->required();
        cmd->add_option("--d", g_d, "dimension parameter (classical families)");
        cmd->add_option("--q", g_q, "prime power");
        cmd->add_option("--degree", g_degree, "degree (Alt)");
        if (with_identity)
            cmd->add_flag("--include-identity", mp_include_identity,
                          "count the identity class");
    };
    auto* order_cmd = app.add_subcommand("order", "exact group order");
    add_group_opts(order_cmd, false);
    auto* torus_cmd = app.add_subcommand("torus", "catalog torus rows");
    add_group_opts(torus_cmd, false);
    auto* mp_cmd = app.add_subcommand("mp", "m_p table and m(T) from the oracle");
    add_group_opts(mp_cmd, true);

    // --- bounds ---
    unsigned bounds_n = 0;
    std::string bounds_which = "f";
    auto* bounds_cmd = app.add_subcommand("bounds", "explicit bound functions");
    bounds_cmd->add_option("--n", bounds_n, "argument n")->required();
    bounds_cmd->add_option("--which", bounds_which, "c2|c3|g|falt|h|f (default f)");

    // --- verify ---
    std::string v_suite, v_format = "text", v_out;
    std::vector<std::string> v_sets;
    std::uint64_t v_max_m = 0, v_max_q = 0;
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd
        ->add_option("--suite", v_suite,
                     "suite id (L21 L23 L24 L25 L31 R32 L41 P42 T45 P53 F6)")
        ->required();
    verify_cmd->add_option("--max-m", v_max_m, "grid override max_m");
    verify_cmd->add_option("--max-q", v_max_q, "grid override max_q");
    verify_cmd->add_option("--set", v_sets, "grid override key=value (repeatable)");
    verify_cmd->add_option("--format", v_format, "json|csv|text (default text)");
    verify_cmd->add_option("--out", v_out, "write the report to a file");

    // --- census ---
    std::string c_check;
    bool c_emit = false;
    auto* census_cmd = app.add_subcommand("census", "emit or validate census rows");
    census_cmd->add_option("--check", c_check, "validate a census file ('-' = stdin)");
    census_cmd->add_flag("--emit", c_emit, "emit oracle-backed rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e, std::cout, std::cerr);
        return 2;
    }

    try {
        if (ppd_cmd->parsed() || prod_cmd->parsed()) {
            unsigned m = ppd_cmd->parsed() ? ppd_m : prod_m;
            std::uint64_t q = ppd_cmd->parsed() ? ppd_q : prod_q;
            auto set = ppd_set(m, q);
            if (prod_cmd->parsed()) {
                std::cout << set.prod << "\n";
            } else if (ppd_json) {
                nlohmann::ordered_json j;
                j["m"] = m;
                j["q"] = q;
                auto primes = nlohmann::ordered_json::array();
                nlohmann::ordered_json sparts;
                for (const auto& s : set.primes) {
                    primes.push_back(s.str());
                    sparts[s.str()] = set.s_parts.at(s).str();
                }
                j["primes"] = primes;
                j["s_parts"] = sparts;
                j["prod"] = set.prod.str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "S(" << m << ")={";
                for (std::size_t i = 0; i < set.primes.size(); ++i)
                    std::cout << (i ? "," : "") << set.primes[i];
                std::cout << "}, Prod=" << set.prod << "\n";
            }
        } else if (phi_cmd->parsed()) {
            std::cout << euler_phi(cpp_int(phi_n)) << "\n";
        } else if (order_cmd->parsed()) {
            GroupId id = parse_group(g_family, g_d, g_q, g_degree);
            std::cout << render_big(group_order(id)) << "\n";
        } else if (torus_cmd->parsed()) {
            GroupId id = parse_group(g_family, g_d, g_q, g_degree);
            if (is_classical(id.family)) {
                std::cout << torus_line(classical_torus(id)) << "\n";
            } else {
                for (const auto& t : exceptional_torus(id))
                    std::cout << torus_line(t) << "\n";
            }
        } else if (mp_cmd->parsed()) {
            GroupId id = parse_group(g_family, g_d, g_q, g_degree);
            MofResult best{0, 0};
            for (const auto& [p, e] : factorize(group_order(id)).factors) {
                std::uint64_t pv = p.convert_to<std::uint64_t>();
                std::uint64_t c = aut_class_count(id, pv, mp_include_identity);
                std::cout << "m_" << pv << " = " << c << "\n";
                if (c > best.n) best = {c, pv};
            }
            std::cout << "m(" << to_string(id) << ") = " << best.n
                      << " (witness p=" << best.witness_prime << ")\n";
        } else if (bounds_cmd->parsed()) {
            if (bounds_which == "c2") std::cout << render_big(c2(bounds_n)) << "\n";
            else if (bounds_which == "falt") std::cout << render_big(f_alt(bounds_n)) << "\n";
            else if (bounds_which == "c3") std::cout << render_log(c3_log(bounds_n)) << "\n";
            else if (bounds_which == "g") std::cout << render_log(g_log(bounds_n)) << "\n";
            else if (bounds_which == "h")
                std::cout << render_log(h_exceptional_log(bounds_n)) << "\n";
            else if (bounds_which == "f")
                std::cout << render_log(f_final_log(bounds_n)) << "\n";
            else throw std::invalid_argument("unknown bound '" + bounds_which + "'");
        } else if (verify_cmd->parsed()) {
            auto fmt = report_format_from(v_format);
            if (!fmt) throw std::invalid_argument("unknown format '" + v_format + "'");
            SuiteParams params;
            if (v_max_m) params["max_m"] = v_max_m;
            if (v_max_q) params["max_q"] = v_max_q;
            for (const auto& kv : v_sets) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("--set expects key=value");
                params[kv.substr(0, eq)] = std::stoull(kv.substr(eq + 1));
            }
            Census census;
            if (v_suite == "P53" || v_suite == "F6") {
                std::ifstream f(census_path());
                if (f) census = load_class_census(f);
                else std::cerr << "note: census file " << census_path()
                               << " not found; oracle groups only\n";
            }
            auto rep = run_suite(v_suite, params, census);
            std::string payload = emit_report(rep, *fmt);
            if (v_out.empty()) {
                std::cout << payload;
            } else {
                std::ofstream out(v_out, std::ios::binary);
                if (!out) throw std::invalid_argument("cannot write " + v_out);
                out << payload;
                std::cerr << "report written to " << v_out << "\n";
            }
            std::cerr << "suite " << v_suite << ": "
                      << (rep.overall_pass() ? "PASS" : "FAIL") << " ("
                      << rep.checks.size() << " checks, "
                      << rep.count(CheckStatus::Fail) << " failed, "
                      << rep.count(CheckStatus::Skip) << " skipped)\n";
            return rep.overall_pass() ? 0 : 1;
        } else if (census_cmd->parsed()) {
            if (c_emit == !c_check.empty())
                throw std::invalid_argument("census needs exactly one of --emit / --check");
            if (c_emit) {
                std::cout << "# census rows computed by the built-in oracle\n";
                std::cout << "# family,d_or_degree,q,p,count,provenance\n";
                for (const auto& [key, entry] : oracle_census()) {
                    const auto& [id, p] = key;
                    std::cout << family_tag(id.family) << ",";
                    if (id.family == Family::Alt) std::cout << id.m_alt << ",,";
                    else if (is_exceptional(id.family)) std::cout << "," << id.q << ",";
                    else std::cout << id.d << "," << id.q << ",";
                    std::cout << p << "," << entry.count << "," << entry.provenance << "\n";
                }
            } else {
                Census c = c_check == "-" ? load_class_census(std::cin)
                                          : load_class_census(c_check);
                std::cerr << "census OK: " << c.size() << " rows\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
