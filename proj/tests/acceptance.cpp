// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include "corelab/error.hpp"
#include "corelab/harness.hpp"
#include "corelab/oracle.hpp"
#include "corelab/path.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace corelab;

namespace {

constexpr double kCellBudgetSecs = 60.0;
constexpr double kSweepLimitSecs = 600.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
    void merge(const std::optional<std::string>& err, const std::string& where) {
        if (err) fail(where + ": " + *err);
    }
};

std::string cell(int s, int k) { return "(" + std::to_string(s) + "," + std::to_string(k) + ")"; }

Outcome guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        Outcome o;
        o.fail(std::string("exception: ") + e.what());
        return o;
    }
}

Outcome equinumerosity_sweep() {
    const auto start = std::chrono::steady_clock::now();
    SweepConfig c;
    c.s_lo = 2;
    c.s_hi = 12;
    c.k_lo = 1;
    c.k_hi = 5;
    c.budget_secs = kCellBudgetSecs;
    const VerificationReport r = run_sweep(c);
    Outcome o;
    for (const CellReport& cr : r.cells) {
        if (cr.skipped) o.fail(cell(cr.s, cr.k) + " ran out of its time budget");
        else if (!cr.pass) o.fail(cell(cr.s, cr.k) + " counts disagree");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > kSweepLimitSecs) o.fail("sweep took " + std::to_string(secs) + " s");
    if (o.pass) o.detail = std::to_string(r.cells.size()) + " cells, " + std::to_string(static_cast<int>(secs * 1000)) + " ms";
    return o;
}

Outcome hooks_are_nice_ideals() {
    Outcome o;
    for (int s = 2; s <= 10; ++s)
        for (int k = 1; k <= 4; ++k) o.merge(check_hooks_are_nice_ideals(s, k), cell(s, k));
    return o;
}

Outcome goldens(bool micro) {
    Outcome o;
    int n = 0;
    for (const CheckResult& c : golden_checks()) {
        if ((c.name.rfind("micro-", 0) == 0) != micro) continue;
        ++n;
        if (!c.pass) o.fail(c.name + ": " + c.detail);
    }
    if (n == 0) o.fail("no fixtures ran");
    if (o.pass) o.detail = std::to_string(n) + " fixtures";
    return o;
}

Outcome roundtrips() {
    Outcome o;
    for (int s = 2; s <= 10; ++s)
        for (int k = 1; k <= 4; ++k)
            for (const CheckResult& c : verify_roundtrips(s, k))
                if (!c.pass) o.fail(cell(s, k) + " " + c.name + ": " + c.detail);
    return o;
}

Outcome formulas() {
    Outcome o;
    auto all_equal = [&](int s, int k, std::uint64_t expect) {
        const CellReport r = verify_equinumerosity(s, k);
        for (const auto& v : {r.sc_cores, r.nice_ideals, r.admissible_ideals, r.sym_dyck})
            if (!v || *v != expect) o.fail(cell(s, k) + " count differs from " + std::to_string(expect));
    };
    for (int s = 2; s <= 10; ++s) all_equal(s, 1, binomial(s, s / 2));
    for (int s = 2; s <= 14; ++s) all_equal(s, 2, chs_count(s));
    for (int s = 0; s <= 14; ++s)
        if (count(FamilySpec::dyck(s, 2)) != motzkin(s)) o.fail("(s,2)-Dyck count differs at s=" + std::to_string(s));
    return o;
}

Outcome structure() {
    Outcome o;
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= 4; ++k) o.merge(check_planar_identity(m, k), "planar identity " + cell(m, k));
    for (int m = 0; m <= 5; ++m)
        for (int k = 0; k <= 3; ++k) o.merge(check_restricted_identity(m, k), "restricted identity " + cell(m, k));
    for (int s = 1; s <= 20; ++s)
        for (int k = 1; k <= 5; ++k) o.merge(check_left_right_closure(s, k), "closure " + cell(s, k));
    for (int s = 1; s <= 14; ++s)
        for (int k = 1; k <= 5; ++k) o.merge(check_chi_transport(s, k), "chi transport " + cell(s, k));
    for (int m = 1; m <= 5; ++m)
        for (int k = 1; k <= 3; ++k) o.merge(check_xi_count(m, k), "xi count " + cell(m, k));
    return o;
}

Outcome oracle_stability() {
    Outcome o;
    for (int s = 2; s <= 12; ++s)
        for (int k = 1; k <= 5; ++k) {
            const OracleRun run = enumerate_sc_cores_stable(s, k);
            if (enumerate_sc_cores(s, k, run.cap + 1) != run.cores) o.fail(cell(s, k) + " caps C and C+1 disagree");
        }
    OracleOptions forced;
    forced.initial_cap = 1;
    forced.ceiling = 1;
    try {
        enumerate_sc_cores_stable(10, 1, forced);
        o.fail("escalation past the ceiling returned a result");
    } catch (const CapInstability&) {
    }
    return o;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"equinumerosity sweep s=2..12 k=1..5", equinumerosity_sweep},
        {"diagonal-hook sets equal nice ideals s<=10 k<=4", hooks_are_nice_ideals},
        {"micro fixtures (4,4) (2,3) (3,3)", [] { return goldens(true); }},
        {"worked-example fixtures", [] { return goldens(false); }},
        {"round-trips s<=10 k<=4", roundtrips},
        {"formula cross-checks", formulas},
        {"structural identities", structure},
        {"oracle cap stability", oracle_stability},
    };
    bool all = true;
    int n = 0;
    for (const auto& [name, body] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const Outcome o = guarded(body);
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::ostringstream line;
        line << (o.pass ? "PASS" : "FAIL") << " " << ++n << " " << name << " [" << ms << " ms]";
        if (!o.detail.empty()) line << " " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
