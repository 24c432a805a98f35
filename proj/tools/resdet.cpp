// Copyright 2026 The resdet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// resdet: residue determinants S_{n,k}(d,p) from the command line.
//
//   resdet det      --p 5 --k 2 --n 3 --d -1 --exact --pfaffian
//   resdet verify   T3 --pmax 500 --klist 2
//   resdet ekm      --k 2 --m 13
//   resdet char     --p 13 --a 10 --k 3
//   resdet selftest
//
// Exit status: 0 on success, 1 when a sweep finds a violation or a report is
// incomplete, 2 on invalid arguments.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "resdet/closed_forms.hpp"
#include "resdet/ekm_search.hpp"
#include "resdet/finite_field.hpp"
#include "resdet/parallel.hpp"
#include "resdet/properties.hpp"
#include "resdet/residue_matrix.hpp"
#include "resdet/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace resdet;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct GlobalOptions {
    std::string format = "json";
    unsigned jobs = default_jobs();
};

bool table(const GlobalOptions& g) { return g.format == "table"; }

/// Prints a flat JSON object as aligned "key  value" lines.
void print_table(const json& obj)
{
    std::size_t width = 0;
    for (auto it = obj.begin(); it != obj.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        std::cout << it.key() << std::string(width - it.key().size() + 2, ' ');
        if (it->is_string()) std::cout << it->get<std::string>();
        else std::cout << it->dump();
        std::cout << '\n';
    }
}

void emit(const GlobalOptions& g, const json& obj)
{
    if (table(g)) print_table(obj);
    else std::cout << obj.dump() << '\n';
}

// det ----------------------------------------------------------------------

struct DetOptions {
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::int64_t d = 0;
    bool exact = false;
    bool pfaffian = false;
};

int cmd_det(const GlobalOptions& g, const DetOptions& o)
{
    const auto p = PrimeModulus::of(o.p);
    const ResidueList res = kth_residues(p, o.k);
    const ResidueMatrix mat = build_matrix(res, o.n, o.d);
    const residue det = det_mod_p(mat);
    json out;
    out["p"] = o.p;
    out["k"] = o.k;
    out["n"] = o.n;
    out["d"] = o.d;
    out["dim"] = res.size();
    out["det_mod_p"] = det;
    out["legendre_of_det"] = legendre(static_cast<std::int64_t>(det), p);
    if (o.exact) out["det_exact"] = to_decimal(det_exact(res, o.n, o.d));
    if (o.pfaffian) out["pfaffian"] = pfaffian_mod_p(mat);
    emit(g, out);
    return exit_ok;
}

// verify -------------------------------------------------------------------

struct VerifyOptions {
    std::string id;
    std::optional<std::uint64_t> pmax;
    std::vector<std::uint64_t> klist;
    std::vector<std::uint64_t> mlist;
    std::vector<std::int64_t> dlist;
    bool only_violations = false;
};

json record_json(const VerificationRecord& r)
{
    json out;
    out["id"] = to_string(r.id);
    if (r.p) out["p"] = *r.p;
    if (r.q) out["q"] = *r.q;
    if (r.k) out["k"] = *r.k;
    if (r.m) out[r.id == TheoremId::T5 ? "m" : "n"] = *r.m;
    if (r.d) out["d"] = *r.d;
    if (r.lhs) out["lhs"] = *r.lhs;
    if (r.rhs) out["rhs"] = *r.rhs;
    out["relation"] = to_string(r.relation);
    out["verdict"] = to_string(r.verdict);
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

void print_record_row(const VerificationRecord& r)
{
    auto field = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::cout << to_string(r.id) << '\t' << field(r.p) << '\t' << field(r.q) << '\t' << field(r.k) << '\t'
              << field(r.m) << '\t' << field(r.d) << '\t' << field(r.lhs) << '\t' << to_string(r.relation) << '\t'
              << field(r.rhs) << '\t' << to_string(r.verdict);
    if (!r.note.empty()) std::cout << '\t' << r.note;
    std::cout << '\n';
}

int cmd_verify(const GlobalOptions& g, const VerifyOptions& o)
{
    const auto id = parse_theorem_id(o.id);
    if (!id) {
        std::cerr << "resdet: unknown identity '" << o.id << "'\n";
        return exit_usage;
    }
    SweepOptions opt;
    opt.pmax = o.pmax;
    opt.klist = o.klist;
    opt.mlist = o.mlist;
    opt.dlist = o.dlist;
    opt.jobs = g.jobs;
    const auto started = std::chrono::steady_clock::now();
    const VerificationReport report = run_verification(*id, opt);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (table(g)) std::cout << "id\tp\tq\tk\tn|m\td\tlhs\trel\trhs\tverdict\n";
    for (const auto& r : report.records) {
        if (o.only_violations && r.verdict != Verdict::Violated) continue;
        if (table(g)) print_record_row(r);
        else std::cout << record_json(r).dump() << '\n';
    }
    json summary;
    summary["id"] = to_string(*id);
    summary["pmax"] = opt.pmax.value_or(default_pmax(*id));
    summary["holds"] = report.summary.holds;
    summary["violated"] = report.summary.violated;
    summary["inapplicable"] = report.summary.inapplicable;
    summary["seconds"] = seconds;
    if (table(g)) {
        std::cout << "summary " << to_string(*id) << ": holds=" << report.summary.holds
                  << " violated=" << report.summary.violated << " inapplicable=" << report.summary.inapplicable
                  << '\n';
    } else {
        std::cout << json{{"summary", summary}}.dump() << '\n';
    }
    return report.summary.violated == 0 ? exit_ok : exit_failed;
}

// ekm ----------------------------------------------------------------------

struct EkmCliOptions {
    std::uint64_t k = 2;
    std::uint64_t m = 1;
    std::uint64_t bound = 1000;
    bool criterion_only = false;
    bool scan_only = false;
};

json factorization_json(const Factorization& f)
{
    json factors = json::array();
    for (const auto& [q, e] : f.factors) factors.push_back({{"prime", to_decimal(q)}, {"exponent", e}});
    json unfactored = json::array();
    for (const auto& c : f.unfactored) unfactored.push_back(to_decimal(c));
    return {{"factors", factors}, {"unfactored", unfactored}};
}

std::string factorization_text(const Factorization& f)
{
    std::string out;
    for (const auto& [q, e] : f.factors) {
        if (!out.empty()) out += " * ";
        out += to_decimal(q);
        if (e > 1) out += "^" + std::to_string(e);
    }
    for (const auto& c : f.unfactored) out += (out.empty() ? "" : " * ") + ("[" + to_decimal(c) + "]");
    return out;
}

json decimal_list(const std::vector<ExactInteger>& xs)
{
    json out = json::array();
    for (const auto& x : xs) out.push_back(to_decimal(x));
    return out;
}

int cmd_ekm(const GlobalOptions& g, const EkmCliOptions& o)
{
    require(o.k >= 2, "k must be at least 2");
    require(o.m % 2 == 1, "m must be odd");
    require(!(o.criterion_only && o.scan_only), "--criterion-only and --scan-only are exclusive");

    json out;
    out["k"] = o.k;
    out["m"] = o.m;
    bool ok = true;

    std::optional<std::vector<std::uint64_t>> scan;
    if (!o.criterion_only) scan = ekm_by_scan(o.k, o.m, o.bound, g.jobs);

    std::optional<EkmReport> report;
    if (!o.scan_only) {
        EkmOptions opt;
        opt.jobs = g.jobs;
        report = ekm_by_criterion(o.k, o.m, opt);
        ok = ok && report->clean();

        json members = json::array();
        for (const auto& e : report->members)
            members.push_back({{"p", e.p}, {"provenance", to_string(e.provenance)},
                               {"verified_by", to_string(e.verified_by)}});
        out["members"] = report->primes();
        out["provenance"] = members;
        if (report->head) {
            out["head"] = {{"value", to_decimal(report->head->value)},
                           {"factorization", factorization_json(report->head->factorization)}};
        }
        json quotients = json::array();
        for (std::size_t i = 0; i < report->quotients.size(); ++i) {
            const auto& q = report->quotients[i];
            quotients.push_back(
                {{"l", i + 1}, {"value", to_decimal(q.value)}, {"factorization", factorization_json(q.factorization)}});
        }
        out["quotients"] = quotients;
        out["unfactored_cofactors"] = decimal_list(report->unfactored_cofactors);
        out["unverified"] = decimal_list(report->unverified);
        out["rejected"] = report->rejected;
        out["members_within_bound"] = report->primes_up_to(o.bound);
    }
    if (scan) {
        out["scan"] = {{"bound", o.bound}, {"primes", *scan}};
        if (report) {
            const bool agree = report->primes_up_to(o.bound) == *scan;
            out["routes_agree"] = agree;
            ok = ok && agree;
        }
    }

    if (table(g)) {
        json flat;
        flat["k"] = o.k;
        flat["m"] = o.m;
        if (report) {
            flat["members"] = report->primes();
            if (report->head)
                flat["head"] = to_decimal(report->head->value) + " = " + factorization_text(report->head->factorization);
            for (std::size_t i = 0; i < report->quotients.size(); ++i) {
                const auto& q = report->quotients[i];
                flat["quotient l=" + std::to_string(i + 1)] =
                    to_decimal(q.value) + " = " + factorization_text(q.factorization);
            }
            flat["members <= " + std::to_string(o.bound)] = report->primes_up_to(o.bound);
        }
        if (scan) flat["scan <= " + std::to_string(o.bound)] = *scan;
        if (out.contains("routes_agree")) flat["routes_agree"] = out["routes_agree"];
        print_table(flat);
    } else {
        std::cout << out.dump() << '\n';
    }
    return ok ? exit_ok : exit_failed;
}

// char ---------------------------------------------------------------------

struct CharOptions {
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::optional<std::uint64_t> k;
};

int cmd_char(const GlobalOptions& g, const CharOptions& o)
{
    const auto p = PrimeModulus::of(o.p);
    json out;
    out["p"] = o.p;
    out["a"] = o.a;
    out["legendre"] = legendre(o.a, p);
    const auto root = sqrt_mod(o.a, p);
    if (root) out["sqrt"] = *root;
    else out["sqrt"] = nullptr;
    out["primitive_root"] = p.generator();
    if (o.k) {
        const CharacterValue chi = chi_k(o.a, *o.k, p);
        out["k"] = *o.k;
        out["chi_k_raw"] = chi.raw;
        out["chi_k_class"] = to_string(chi.cls);
    }
    emit(g, out);
    return exit_ok;
}

// selftest -----------------------------------------------------------------

int cmd_selftest(const GlobalOptions& g)
{
    bool ok = true;
    for (const auto& suite : property_suites()) {
        const auto started = std::chrono::steady_clock::now();
        const PropertyResult r = suite.run();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        ok = ok && r.passed();
        if (table(g)) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases
                      << " failures=" << r.failures;
            if (!r.first_failure.empty()) std::cout << " first=" << r.first_failure;
            std::cout << '\n';
        } else {
            json line{{"suite", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures},
                      {"seconds", seconds}};
            if (!r.first_failure.empty()) line["first_failure"] = r.first_failure;
            std::cout << line.dump() << '\n';
        }
    }
    return ok ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Residue determinants S_{n,k}(d,p) over k-th power residues"};
    app.require_subcommand(1);
    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--jobs", global.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    DetOptions det;
    auto* det_cmd = app.add_subcommand("det", "Evaluate S_{n,k}(d,p) mod p");
    det_cmd->add_option("--p", det.p, "Odd prime")->required();
    det_cmd->add_option("--k", det.k, "Power index, k | p-1 and 2 <= k <= (p-1)/2")->required();
    det_cmd->add_option("--n", det.n, "Exponent")->required();
    det_cmd->add_option("--d", det.d, "Parameter d, not divisible by p")->required();
    det_cmd->add_flag("--exact", det.exact, "Also compute the integer determinant ((p-1)/k <= 12)");
    det_cmd->add_flag("--pfaffian", det.pfaffian, "Also compute the Pfaffian (skew-symmetric, even order)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep one identity and compare both sides");
    verify_cmd->add_option("id", verify.id, "T1 T2 T3 T4 T5 C63 C64 L23 L24 L25 L26 E1 E2 E3 QR")->required();
    verify_cmd->add_option("--pmax", verify.pmax, "Largest prime");
    verify_cmd->add_option("--klist", verify.klist, "Power indices")->delimiter(',');
    verify_cmd->add_option("--mlist", verify.mlist, "Exponents (T1, T2, L26) or odd offsets m (T5)")->delimiter(',');
    verify_cmd->add_option("--dlist", verify.dlist, "Values of d")->delimiter(',');
    verify_cmd->add_flag("--only-violations", verify.only_violations, "Print violated records only");
    verify_cmd->add_option("--jobs", global.jobs, "Worker threads")->check(CLI::PositiveNumber);

    EkmCliOptions ekm;
    auto* ekm_cmd = app.add_subcommand("ekm", "Exceptional set E_k(m)");
    ekm_cmd->add_option("--k", ekm.k, "Power index")->capture_default_str();
    ekm_cmd->add_option("--m", ekm.m, "Odd offset m")->required();
    ekm_cmd->add_option("--bound", ekm.bound, "Scan bound")->capture_default_str();
    ekm_cmd->add_flag("--criterion-only", ekm.criterion_only, "Skip the direct scan");
    ekm_cmd->add_flag("--scan-only", ekm.scan_only, "Skip the criterion");
    ekm_cmd->add_option("--jobs", global.jobs, "Worker threads")->check(CLI::PositiveNumber);

    CharOptions chr;
    auto* char_cmd = app.add_subcommand("char", "Legendre symbol, square root and chi_k");
    char_cmd->add_option("--p", chr.p, "Odd prime")->required();
    char_cmd->add_option("--a", chr.a, "Integer")->required();
    char_cmd->add_option("--k", chr.k, "Character order");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run every property suite");

    for (auto* sub : {det_cmd, verify_cmd, ekm_cmd, char_cmd, selftest_cmd})
        sub->add_option("--format", global.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*det_cmd) return cmd_det(global, det);
        if (*verify_cmd) return cmd_verify(global, verify);
        if (*ekm_cmd) return cmd_ekm(global, ekm);
        if (*char_cmd) return cmd_char(global, chr);
        if (*selftest_cmd) return cmd_selftest(global);
    } catch (const precondition_error& e) {
        std::cerr << "resdet: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "resdet: " << e.what() << '\n';
        return exit_failed;
    }
    return exit_usage;
}
