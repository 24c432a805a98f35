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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "resdet/closed_forms.hpp"
#include "resdet/ekm_search.hpp"
#include "resdet/parallel.hpp"
#include "resdet/properties.hpp"
#include "resdet/residue_matrix.hpp"
#include "resdet/verify.hpp"

namespace {

using namespace resdet;
using Primes = std::vector<std::uint64_t>;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what)
    {
        if (ok) return;
        if (!passed) detail << "; ";
        passed = false;
        detail << what;
    }
};

std::string list(const Primes& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

/// Runs one sweep and folds its summary into the outcome.
VerificationSummary sweep(Outcome& out, TheoremId id, SweepOptions opt, const std::string& label)
{
    opt.jobs = default_jobs();
    const auto report = run_verification(id, opt);
    out.expect(report.summary.violated == 0, label + " violated=" + std::to_string(report.summary.violated));
    out.expect(report.summary.holds > 0, label + " checked nothing");
    return report.summary;
}

std::string counts(const std::string& label, const VerificationSummary& s)
{
    return label + "=" + std::to_string(s.holds);
}

Outcome ac1_exceptional_sets()
{
    Outcome out;
    const std::vector<std::pair<std::uint64_t, Primes>> listed{
        {5, {29}}, {7, {13, 53}}, {9, {13, 17, 29}}, {11, {17, 29}}, {13, {17, 109, 401}}};
    EkmOptions opt;
    opt.jobs = default_jobs();
    for (const auto& [m, expect] : listed) {
        const Primes scan = ekm_by_scan(2, m, 1000, opt.jobs);
        const EkmReport report = ekm_by_criterion(2, m, opt);
        out.expect(scan == expect, "scan E_2(" + std::to_string(m) + ")=" + list(scan));
        out.expect(report.primes_up_to(1000) == expect,
                   "criterion E_2(" + std::to_string(m) + ")<1000=" + list(report.primes_up_to(1000)));
        out.expect(report.clean(), "E_2(" + std::to_string(m) + ") report incomplete");
    }
    const EkmReport e13 = ekm_by_criterion(2, 13, opt);
    out.expect(e13.primes() == Primes{17, 109, 401, 29629, 924397}, "E_2(13)=" + list(e13.primes()));
    const std::vector<std::pair<ExactInteger, unsigned>> head{{3, 6},  {5, 2},   {7, 1},    {11, 1},
                                                              {13, 1}, {109, 1}, {29629, 1}};
    out.expect(e13.head && e13.head->value == ExactInteger("58917607974225") &&
                   e13.head->factorization.factors == head && e13.head->factorization.complete(),
               "head factorization differs");
    if (out.passed) out.detail << "E_2(5,7,9,11) below 1000 by both routes; E_2(13)=" << list(e13.primes());
    return out;
}

Outcome ac2_master_congruence()
{
    Outcome out;
    const auto s = sweep(out, TheoremId::L26, {.pmax = 200}, "L26");
    if (out.passed) out.detail << s.holds << " tuples with a^2 b = det";
    return out;
}

/// Whether a T3/T4 sweep covered both p = 2k+1 and p = 4k+1.
bool covers_edges(TheoremId id, const SweepOptions& opt)
{
    const auto report = run_verification(id, opt);
    bool two = false, four = false;
    for (const auto& r : report.records) {
        if (r.verdict != Verdict::Holds) continue;
        two = two || *r.p == 2 * *r.k + 1;
        four = four || *r.p == 4 * *r.k + 1;
    }
    return two && four;
}

Outcome ac3_theorem_sweeps()
{
    Outcome out;
    const auto t1 = sweep(out, TheoremId::T1, {.pmax = 200}, "T1");
    const auto t2 = sweep(out, TheoremId::T2, {.pmax = 200}, "T2");
    const auto t3a = sweep(out, TheoremId::T3, {.pmax = 500, .klist = {2}}, "T3 k=2");
    const auto t3b = sweep(out, TheoremId::T3, {.pmax = 200}, "T3");
    const auto t4a = sweep(out, TheoremId::T4, {.pmax = 500, .klist = {2}}, "T4 k=2");
    const auto t4b = sweep(out, TheoremId::T4, {.pmax = 200}, "T4");
    const auto e1 = sweep(out, TheoremId::E1, {.pmax = 500}, "E1");
    out.expect(covers_edges(TheoremId::T3, {.pmax = 200, .jobs = default_jobs()}), "T3 missed p=2k+1 or p=4k+1");
    out.expect(covers_edges(TheoremId::T4, {.pmax = 200, .jobs = default_jobs()}), "T4 missed p=2k+1 or p=4k+1");
    if (out.passed)
        out.detail << counts("T1", t1) << " " << counts("T2", t2) << " " << counts("T3", t3a) << "+"
                   << t3b.holds << " " << counts("T4", t4a) << "+" << t4b.holds << " " << counts("E1", e1);
    return out;
}

Outcome ac4_conjecture_corollaries()
{
    Outcome out;
    const auto c63 = sweep(out, TheoremId::C63, {.pmax = 1000}, "C63");
    const auto c64 = sweep(out, TheoremId::C64, {.pmax = 1000}, "C64");

    const auto p = PrimeModulus::of(5);
    const ResidueList res = kth_residues(p, 2);
    ExactInteger r1, r3;
    const ExactInteger d1 = det_exact(res, 3, -1), d3 = det_exact(res, 5, -1);
    mpz_sqrt(r1.get_mpz_t(), d1.get_mpz_t());
    mpz_sqrt(r3.get_mpz_t(), d3.get_mpz_t());
    out.expect(d1 == 729 && r1 == 27 && d3 == 59049 && r3 == 243, "exact determinants at p=5");
    const int exact1 = legendre(static_cast<std::int64_t>(mod_u64(r1, 5)), p);
    const int exact3 = legendre(static_cast<std::int64_t>(mod_u64(r3, 5)), p);
    out.expect(exact1 == legendre(pfaffian_mod_p(build_matrix(res, 3, -1)), p) && exact1 == conjecture63_rhs(p),
               "exact and modular routes differ for S_3");
    out.expect(exact3 == legendre(pfaffian_mod_p(build_matrix(res, 5, -1)), p) && exact3 == conjecture64_rhs(p),
               "exact and modular routes differ for S_5");
    if (out.passed) out.detail << counts("C63", c63) << " " << counts("C64", c64) << " primes; p=5 exact route agrees";
    return out;
}

Outcome ac5_criterion_equivalence()
{
    Outcome out;
    const auto s = sweep(out, TheoremId::T5, {.pmax = 1000, .klist = {2, 3}, .mlist = {3, 5, 7}}, "T5");
    if (out.passed) out.detail << s.holds << " primes with p | det iff criterion";
    return out;
}

Outcome ac6_property_suites()
{
    Outcome out;
    std::uint64_t cases = 0;
    for (const auto& suite : property_suites()) {
        const PropertyResult r = suite.run();
        cases += r.cases;
        out.expect(r.passed(), r.name + " failed at " + r.first_failure);
    }
    if (out.passed) out.detail << property_suites().size() << " suites, " << cases << " cases";
    return out;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 exceptional sets E_2(m)", ac1_exceptional_sets},
        {"AC2 a^2 b master congruence, p <= 200", ac2_master_congruence},
        {"AC3 theorem sweeps T1-T4", ac3_theorem_sweeps},
        {"AC4 sign formulas for p = 1 mod 4, p <= 1000", ac4_conjecture_corollaries},
        {"AC5 criterion biconditional, k in {2,3}, m in {3,5,7}", ac5_criterion_equivalence},
        {"AC6 property suites", ac6_property_suites},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto started = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail << "exception: " << e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        all = all && o.passed;
        std::cout << (o.passed ? "PASS " : "FAIL ") << name << " [" << o.detail.str() << "] (" << std::fixed
                  << std::setprecision(1) << seconds << " s)" << std::endl;
    }
    return all ? 0 : 1;
}
