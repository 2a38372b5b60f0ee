#include "rinf/cli_app.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "rinf/certificate_io.hpp"
#include "rinf/errors.hpp"
#include "rinf/finite_group.hpp"
#include "rinf/witness.hpp"

namespace rinf::cli {

namespace {

using nlohmann::json;

// Seeded values in a fixed range, mapped by explicit modulo so the sequence
// is identical across platforms.
struct SeededValues {
    std::mt19937_64 eng;
    explicit SeededValues(std::uint64_t seed) : eng(seed) {}
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

json report_json(const Report& rep) {
    json doc;
    doc["command"] = rep.command;
    json params = json::object();
    for (const auto& [k, v] : rep.parameters) params[k] = v;
    doc["parameters"] = params;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    doc["checks"] = checks;
    return doc;
}

std::string degree_str(const std::optional<int>& d) {
    return d ? std::to_string(*d) : "-inf";
}

std::string shape_detail(const ShapeReport& rep) {
    return "deg f=" + degree_str(rep.deg_f) + ", deg g=" + degree_str(rep.deg_g) +
           ", deg h=" + degree_str(rep.deg_h) + ", deg p=" + degree_str(rep.deg_p);
}

SquareMatrix fp_matrix(std::uint64_t p, const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<RingValue>> out;
    for (const auto& row : rows) {
        std::vector<RingValue> r;
        for (long v : row) r.push_back(RingValue::prime_field(v, p));
        out.push_back(std::move(r));
    }
    return SquareMatrix::from_rows(out);
}

std::vector<SquareMatrix> preset_generators(const std::string& name, std::uint64_t p) {
    if (name == "sl2")
        return {fp_matrix(p, {{1, 1}, {0, 1}}), fp_matrix(p, {{0, 1}, {-1, 0}})};
    if (name == "sp4") {
        // Five symplectic transvections; they generate all of Sp_4(F_p)
        // (order 720 over F_2, 51840 over F_3 -- raise --cap for p >= 3).
        return {fp_matrix(p, {{1, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                fp_matrix(p, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}}),
                fp_matrix(p, {{1, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                fp_matrix(p, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}}),
                fp_matrix(p, {{1, 0, -1, -1}, {0, 1, -1, -1}, {0, 0, 1, 0}, {0, 0, 0, 1}})};
    }
    if (name == "omega4") {
        // X_D(1) and Y_D(1); their commutator is the Z(1) witness.
        return {fp_matrix(p, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}}),
                fp_matrix(p, {{1, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 1}})};
    }
    throw std::invalid_argument("unknown generator preset: " + name);
}

// "1,1;0,1|0,1;-1,0" -> two matrices (rows split by ';', entries by ',').
std::vector<SquareMatrix> parse_generator_list(const std::string& text, std::uint64_t p) {
    std::vector<SquareMatrix> gens;
    std::stringstream mats(text);
    std::string mat;
    while (std::getline(mats, mat, '|')) {
        std::vector<std::vector<long>> rows;
        std::stringstream rs(mat);
        std::string row;
        while (std::getline(rs, row, ';')) {
            std::vector<long> entries;
            std::stringstream es(row);
            std::string e;
            while (std::getline(es, e, ',')) entries.push_back(std::stol(e));
            rows.push_back(std::move(entries));
        }
        gens.push_back(fp_matrix(p, rows));
    }
    if (gens.empty()) throw std::invalid_argument("empty generator list");
    return gens;
}

std::vector<BigInt> parse_orbit(const std::string& text) {
    std::vector<BigInt> orbit;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) orbit.emplace_back(item);
    if (orbit.empty()) throw std::invalid_argument("empty orbit");
    return orbit;
}

struct CommandOutput {
    Report report;
    json extra; // merged into the JSON document (certificate body, tables)
    CommandOutput() : extra(json::object()) {}
};

int finish(const CommandOutput& out, bool json_mode, std::ostream& os, int exit_code) {
    if (json_mode) {
        json doc = report_json(out.report);
        for (auto it = out.extra.begin(); it != out.extra.end(); ++it) doc[it.key()] = it.value();
        os << doc.dump(2) << "\n";
    } else {
        out.report.print_text(os);
    }
    return exit_code;
}

int cmd_verify_aux(const std::string& case_name, int l, int kmax, std::uint64_t seed,
                   int trials, bool json_mode, std::ostream& out) {
    CommandOutput co;
    co.report.command = "verify-aux";
    co.report.parameters = {{"case", case_name},
                            {"l", std::to_string(l)},
                            {"kmax", std::to_string(kmax)},
                            {"seed", std::to_string(seed)},
                            {"trials", std::to_string(trials)}};
    const auto t0 = std::chrono::steady_clock::now();

    SeededValues rng(seed);
    for (int k = 1; k <= kmax; ++k) {
        if (case_name == "C") {
            for (int trial = 0; trial < trials; ++trial) {
                std::vector<BigInt> ys;
                std::string ys_text;
                for (int m = 0; m < k; ++m) {
                    const std::int64_t y = rng.range(-3, 3);
                    ys.emplace_back(y);
                    ys_text += (m ? "," : "") + std::to_string(y);
                }
                CheckResult check;
                check.name = "C l=" + std::to_string(l) + " k=" + std::to_string(k) +
                             " ys=[" + ys_text + "]";
                try {
                    const ShapeReport rep = aux_shape_check_C(l, k, ys);
                    check.pass = rep.ok;
                    check.detail = shape_detail(rep);
                } catch (const ShapeViolation& e) {
                    check.pass = false;
                    check.detail = e.what();
                }
                co.report.checks.push_back(std::move(check));
            }
        } else {
            CheckResult check;
            check.name = "D l=" + std::to_string(l) + " k=" + std::to_string(k);
            try {
                const ShapeReport rep = aux_shape_check_D(l, k);
                check.pass = rep.ok;
                check.detail = shape_detail(rep);
            } catch (const ShapeViolation& e) {
                check.pass = false;
                check.detail = e.what();
            }
            co.report.checks.push_back(std::move(check));
        }
    }

    co.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(co, json_mode, out, co.report.all_pass() ? 0 : 3);
}

int cmd_certificate(const std::string& case_name, int l, const std::string& orbit_text, int k,
                    int count, const std::string& out_path, bool json_mode, std::ostream& out) {
    CommandOutput co;
    co.report.command = "certificate";
    const auto t0 = std::chrono::steady_clock::now();

    AutomorphismSpec spec;
    if (case_name == "C") {
        if (orbit_text.empty()) throw std::invalid_argument("case C needs --orbit");
        std::vector<RingValue> orbit;
        for (const auto& y : parse_orbit(orbit_text)) orbit.emplace_back(y);
        spec = AutomorphismSpec::case_C(l, std::move(orbit));
    } else if (case_name == "D") {
        spec = AutomorphismSpec::case_D(l, k);
    } else {
        spec = AutomorphismSpec::case_B(l, k);
    }
    co.report.parameters = {{"case", case_name},
                            {"l", std::to_string(l)},
                            {"k", std::to_string(spec.period)},
                            {"orbit", orbit_text.empty() ? "-" : orbit_text},
                            {"count", std::to_string(count)},
                            {"out", out_path.empty() ? "-" : out_path}};

    SeparationCertificate cert = build_certificate(spec, count);
    const VerificationVerdict verdict = verify_certificate(cert);
    cert.verdict = verdict;

    if (spec.inner)
        co.report.checks.push_back(
            {"inner conjugator", true, "dropped: inner twists never change class counts"});
    co.report.checks.push_back({"witness count", true, std::to_string(cert.points.size())});
    if (cert.psi)
        co.report.checks.push_back({"psi", true, "psi(T) = " + cert.psi->str()});
    std::string table;
    for (std::size_t i = 0; i < cert.points.size(); ++i) {
        if (i) table += "  ";
        table += cert.points[i].get_str() + "->" + cert.invariants[i].str();
    }
    co.report.checks.push_back({"invariants (point->value)", true, table});
    co.report.checks.push_back({"re-verification", verdict.ok, verdict.ok ? "verified" : verdict.detail});

    if (!out_path.empty()) {
        write_certificate_file(cert, out_path);
        co.report.checks.push_back({"written", true, out_path});
    }
    if (json_mode) co.extra["certificate"] = json::parse(certificate_to_json(cert));
    co.extra["verified"] = verdict.ok;

    co.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(co, json_mode, out, verdict.ok ? 0 : 3);
}

int cmd_verify_certificate(const std::string& path, bool json_mode, std::ostream& out) {
    CommandOutput co;
    co.report.command = "verify-certificate";
    co.report.parameters = {{"file", path}};
    const auto t0 = std::chrono::steady_clock::now();

    SeparationCertificate cert = read_certificate_file(path);
    const VerificationVerdict verdict = verify_certificate(cert);
    cert.verdict = verdict;
    co.report.checks.push_back(
        {"verification", verdict.ok, verdict.ok ? "verified" : verdict.detail});
    co.extra["verified"] = verdict.ok;

    co.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(co, json_mode, out, verdict.ok ? 0 : 3);
}

int cmd_reidemeister(std::uint64_t p, const std::string& gens_spec, const std::string& aut_spec,
                     std::size_t cap, bool check_inner, bool quotient_center, bool json_mode,
                     std::ostream& out) {
    CommandOutput co;
    co.report.command = "reidemeister";
    co.report.parameters = {{"p", std::to_string(p)},
                            {"gens", gens_spec},
                            {"aut", aut_spec},
                            {"cap", std::to_string(cap)}};
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<SquareMatrix> gens;
    try {
        gens = preset_generators(gens_spec, p);
    } catch (const std::invalid_argument&) {
        gens = parse_generator_list(gens_spec, p);
    }
    const FiniteGroupTable group = FiniteGroupTable::generate(gens, cap);

    FiniteAutomorphism phi = FiniteAutomorphism::identity(group);
    if (aut_spec == "id") {
        // identity
    } else if (aut_spec == "frobenius") {
        phi = FiniteAutomorphism::frobenius(group);
    } else if (aut_spec.rfind("inner:", 0) == 0) {
        phi = FiniteAutomorphism::inner(group, std::stoul(aut_spec.substr(6)));
    } else {
        throw std::invalid_argument("unknown automorphism spec: " + aut_spec);
    }

    const auto classes = twisted_classes(group, phi);
    co.report.checks.push_back({"group order", true, std::to_string(group.size())});
    co.report.checks.push_back({"reidemeister number", true, std::to_string(classes.size())});
    std::string sizes;
    for (std::size_t i = 0; i < classes.size(); ++i)
        sizes += (i ? " " : "") + std::to_string(classes[i].size());
    co.report.checks.push_back({"class sizes", true, sizes});
    co.extra["order"] = group.size();
    co.extra["reidemeister"] = classes.size();

    bool ok = true;
    if (check_inner) {
        const InnerInvarianceReport rep = check_inner_invariance(group, phi);
        co.report.checks.push_back({"inner invariance",
                                    rep.all_equal,
                                    "R = " + std::to_string(rep.base_reidemeister) + " across " +
                                        std::to_string(group.size()) + " inner twists"});
        ok = ok && rep.all_equal;
    }
    if (quotient_center) {
        std::vector<std::size_t> center;
        for (std::size_t i = 0; i < group.size(); ++i) {
            const SquareMatrix& m = group.element(i);
            if (m.is_identity() || (-m).is_identity()) center.push_back(i);
        }
        const QuotientLemmaReport rep = check_quotient_lemma(group, center, phi);
        co.report.checks.push_back(
            {"quotient lemma", rep.holds,
             "R_G = " + std::to_string(rep.r_group) + " >= R_{G/N} = " +
                 std::to_string(rep.r_quotient) + " (|G/N| = " +
                 std::to_string(rep.quotient_order) + ")"});
        ok = ok && rep.holds;
    }

    co.report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(co, json_mode, out, ok ? 0 : 3);
}

} // namespace

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::print_text(std::ostream& out) const {
    out << command;
    for (const auto& [k, v] : parameters) out << " " << k << "=" << v;
    out << "\n";
    for (const auto& c : checks)
        out << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name
            << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    out << "  elapsed: " << elapsed_ms << " ms\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact witnesses, separation certificates and brute-force Reidemeister "
                 "numbers for classical matrix groups"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output");

    auto* aux = app.add_subcommand("verify-aux",
                                   "run the block-shape and degree checks for a witness family");
    std::string aux_case;
    int aux_l = 2, aux_kmax = 4, aux_trials = 20;
    std::uint64_t aux_seed = 0;
    aux->add_option("--case", aux_case, "family: C or D")
        ->required()
        ->check(CLI::IsMember({"C", "D"}));
    aux->add_option("--l", aux_l, "rank, 1..10 (D needs >= 2)")->required()->check(CLI::Range(1, 10));
    aux->add_option("--kmax", aux_kmax, "check k = 1..kmax")->check(CLI::Range(1, 10));
    aux->add_option("--seed", aux_seed, "seed for the random y tuples (case C)");
    aux->add_option("--trials", aux_trials, "random y tuples per k (case C)")
        ->check(CLI::Range(1, 100));

    auto* cert = app.add_subcommand("certificate", "build, verify and emit a certificate");
    std::string cert_case, cert_orbit, cert_out;
    int cert_l = 2, cert_k = 1, cert_count = 10;
    cert->add_option("--case", cert_case, "family: C, D or B")
        ->required()
        ->check(CLI::IsMember({"C", "D", "B"}));
    cert->add_option("--l", cert_l, "rank, 1..10")->required()->check(CLI::Range(1, 10));
    cert->add_option("--orbit", cert_orbit, "comma-separated orbit values (case C)");
    cert->add_option("--k", cert_k, "automorphism period (cases D/B)")->check(CLI::Range(1, 8));
    cert->add_option("--count", cert_count, "number of witnesses")->check(CLI::Range(1, 500));
    cert->add_option("--out", cert_out, "path for the JSON certificate");

    auto* vc = app.add_subcommand("verify-certificate", "re-verify a certificate file");
    std::string vc_path;
    vc->add_option("file", vc_path, "certificate JSON path")->required();

    auto* rei = app.add_subcommand("reidemeister",
                                   "enumerate a finite matrix group and count twisted classes");
    std::uint64_t rei_p = 2;
    std::string rei_gens = "sl2", rei_aut = "id";
    std::size_t rei_cap = FiniteGroupTable::default_cap;
    bool rei_inner = false, rei_quot = false;
    rei->add_option("--p", rei_p, "field prime")->required();
    rei->add_option("--gens", rei_gens,
                    "preset (sl2, sp4, omega4) or matrices \"a,b;c,d|...\"");
    rei->add_option("--aut", rei_aut, "id | inner:<index> | frobenius");
    rei->add_option("--cap", rei_cap, "element cap")->check(CLI::Range(std::size_t(1), std::size_t(200000)));
    rei->add_flag("--check-inner", rei_inner, "verify R across all inner twists");
    rei->add_flag("--quotient-center", rei_quot, "check the quotient inequality for N = {+-I}");

    try {
        std::vector<const char*> argv;
        argv.push_back("rinf");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (aux->parsed())
            return cmd_verify_aux(aux_case, aux_l, aux_kmax, aux_seed, aux_trials, json_mode, out);
        if (cert->parsed())
            return cmd_certificate(cert_case, cert_l, cert_orbit, cert_k, cert_count, cert_out,
                                   json_mode, out);
        if (vc->parsed()) return cmd_verify_certificate(vc_path, json_mode, out);
        if (rei->parsed())
            return cmd_reidemeister(rei_p, rei_gens, rei_aut, rei_cap, rei_inner, rei_quot,
                                    json_mode, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace rinf::cli
