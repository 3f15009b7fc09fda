#include "corelab/harness.hpp"

#include "corelab/bijection.hpp"
#include "corelab/error.hpp"
#include "corelab/json_forms.hpp"
#include "corelab/oracle.hpp"
#include "corelab/partition.hpp"
#include "corelab/path.hpp"
#include "corelab/poset.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace corelab {

namespace {

std::string describe(const PathWord& w) { return "word '" + to_string(w) + "'"; }
std::string describe(const PlanarIdeal& i) { return "ideal " + to_json(i).dump(); }
std::string describe(const Partition& p) { return "partition " + to_json(p).dump(); }

using Failure = std::optional<std::string>;

// Applies fn to every item; the first failure or exception becomes the check's detail.
template <class Items, class Fn>
CheckResult each(const std::string& name, const Items& items, const Deadline& deadline, Fn&& fn) {
    for (const auto& item : items) {
        deadline.check();
        try {
            if (Failure f = fn(item)) return {name, false, describe(item) + ": " + *f};
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const std::exception& e) {
            return {name, false, describe(item) + ": " + e.what()};
        }
    }
    return {name, true, ""};
}

// Streaming form of each() over a word family, optionally filtered by final-height parity.
template <class Fn>
CheckResult each_word(const std::string& name, const FamilySpec& family, std::optional<bool> odd_height,
                      const EnumLimits& limits, Fn&& fn) {
    std::optional<CheckResult> failed;
    for_each_word(
        family,
        [&](const PathWord& w) {
            if (failed) return;
            if (odd_height && (final_height(w) % 2 != 0) != *odd_height) return;
            try {
                if (Failure f = fn(w)) failed = CheckResult{name, false, describe(w) + ": " + *f};
            } catch (const BudgetExceeded&) {
                throw;
            } catch (const std::exception& e) {
                failed = CheckResult{name, false, describe(w) + ": " + e.what()};
            }
        },
        limits);
    return failed ? *failed : CheckResult{name, true, ""};
}

CheckResult from_failure(const std::string& name, const Failure& f) {
    return f ? CheckResult{name, false, *f} : CheckResult{name, true, ""};
}

// Up and down share a shape; horizontals keep their length.
std::multiset<int> step_shapes(const PathWord& w) {
    std::multiset<int> out;
    for (const Step& st : w.steps) out.insert(st.is_horiz() ? st.len : 0);
    return out;
}

bool is_sym_dyck(const PathWord& w, int width2, int kparam) {
    return matches(w, FamilySpec{width2, kparam, 0, true, false}) && is_symmetric(w);
}

std::vector<std::vector<int>> hook_sets(const std::vector<Partition>& cores) {
    std::vector<std::vector<int>> out;
    for (const Partition& p : cores) out.push_back(diagonal_hooks(p).ascending());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> member_sets(const std::vector<CoreIdeal>& ideals) {
    std::vector<std::vector<int>> out;
    for (const CoreIdeal& i : ideals) out.push_back(i.members);
    std::sort(out.begin(), out.end());
    return out;
}

template <class T>
std::optional<std::pair<T, bool>> first_difference(const std::vector<T>& a, const std::vector<T>& b) {
    // Both sorted; returns the smallest element of the symmetric difference and whether it came from a.
    std::vector<T> only_a;
    std::vector<T> only_b;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
    if (only_a.empty() && only_b.empty()) return std::nullopt;
    if (only_b.empty() || (!only_a.empty() && only_a.front() < only_b.front())) return std::make_pair(only_a.front(), true);
    return std::make_pair(only_b.front(), false);
}

std::string half_label(int a2) {
    if (a2 % 2 == 0) return std::to_string(a2 / 2);
    std::string out = std::to_string(a2 / 2) + ".5";
    if (a2 < 0 && a2 / 2 == 0) out = "-" + out;
    return out;
}

std::string point_label(PlanarPoint p) { return "(" + half_label(p.a2) + "," + std::to_string(p.b) + ")"; }

} // namespace

std::vector<Suite> parse_suites(const std::string& name) {
    if (name == "equinumerosity") return {Suite::Equinumerosity};
    if (name == "roundtrip") return {Suite::Roundtrip};
    if (name == "structure") return {Suite::Structure};
    if (name == "golden") return {Suite::Golden};
    if (name == "all") return {Suite::Equinumerosity, Suite::Roundtrip, Suite::Structure, Suite::Golden};
    throw InvalidInput("unknown suite '" + name + "'");
}

void SweepConfig::validate() const {
    if (s_lo > s_hi || k_lo > k_hi) throw InvalidInput("sweep ranges must be nonempty");
    if (s_lo < 2 || k_lo < 1) throw InvalidInput("sweep needs s >= 2 and k >= 1");
    if (!(budget_secs > 0)) throw InvalidInput("budget must be positive");
    if (suites.empty()) throw InvalidInput("no suites selected");
}

bool VerificationReport::pass() const {
    return std::all_of(cells.begin(), cells.end(), [](const CellReport& c) { return c.pass; }) &&
           std::all_of(global.begin(), global.end(), [](const CheckResult& c) { return c.pass; });
}

// ---------------------------------------------------------------- structure

std::optional<std::string> check_planar_identity(int m, int k) {
    if (!posets_equal(build_planar_poset(2 * m, 2 * k), build_planar_poset(2 * m + 1, 2 * k)))
        return "P'(" + std::to_string(2 * m) + "," + std::to_string(2 * k) + ") differs from P'(" +
               std::to_string(2 * m + 1) + "," + std::to_string(2 * k) + ")";
    return std::nullopt;
}

std::optional<std::string> check_restricted_identity(int m, int k) {
    auto strip = [](const std::vector<PlanarIdeal>& ideals) {
        std::vector<std::vector<PlanarPoint>> out;
        for (const auto& i : ideals) out.push_back(i.members);
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto restricted = strip(enumerate_restricted_ideals(m, k));
    const auto plain = strip(enumerate_admissible_ideals(2 * m + 1, 2 * k + 1));
    if (restricted != plain)
        return "restricted ideals of P'(" + std::to_string(2 * m + 2) + "," + std::to_string(2 * k + 1) +
               ") number " + std::to_string(restricted.size()) + ", ideals of P'(" + std::to_string(2 * m + 1) + "," +
               std::to_string(2 * k + 1) + ") number " + std::to_string(plain.size());
    return std::nullopt;
}

std::optional<std::string> check_left_right_closure(int s, int k) {
    const CorePoset p = build_core_poset(s, k);
    if (p.elements().empty()) return std::nullopt;
    const int hi = p.max_element() + 2 * s + 2 * k;
    for (int x = 2 * s + 1; x <= hi; x += 2) {
        bool all_left = true;
        bool all_right = true;
        for (int t = s; t <= s + k; ++t) {
            all_left = all_left && in_left_family(s, k, x - 2 * t);
            all_right = all_right && in_right_family(s, k, x - 2 * t);
        }
        if (in_left_family(s, k, x) != all_left) return "left closure fails at x=" + std::to_string(x);
        if (in_right_family(s, k, x) != all_right) return "right closure fails at x=" + std::to_string(x);
    }
    return std::nullopt;
}

std::optional<std::string> check_chi_isomorphism(int s, int k) {
    const CorePoset p = build_core_poset(s, k);
    const PlanarPoset q = build_planar_poset(s, k);
    std::vector<PlanarPoint> image;
    for (int x : p.elements()) {
        const PlanarPoint c = chi(s, k, x);
        if (chi_inv(s, k, c) != x) return "chi_inv(chi(" + std::to_string(x) + ")) differs";
        if ((c.b >= 0) != (p.side(x) == Side::Left)) return "chi puts " + std::to_string(x) + " on the wrong side";
        image.push_back(c);
    }
    std::sort(image.begin(), image.end());
    if (image != q.elements()) return "chi image differs from the planar element set";
    std::vector<std::pair<PlanarPoint, PlanarPoint>> covers;
    for (auto [lo, hi] : p.cover_pairs()) covers.emplace_back(chi(s, k, lo), chi(s, k, hi));
    std::sort(covers.begin(), covers.end());
    if (covers != q.cover_pairs()) return "chi does not carry covers onto covers";
    return std::nullopt;
}

std::optional<std::string> check_cover_counts(int s, int k) {
    const CorePoset p = build_core_poset(s, k);
    for (int x : p.elements())
        if (p.rank(x) >= 1 && static_cast<int>(p.lower_covers(x).size()) != k + 1)
            return std::to_string(x) + " covers " + std::to_string(p.lower_covers(x).size()) + " elements";
    const PlanarPoset q = build_planar_poset(s, k);
    for (PlanarPoint x : q.elements())
        if (q.rank(x) >= 1 && static_cast<int>(q.lower_covers(x).size()) != k + 1)
            return point_label(x) + " covers " + std::to_string(q.lower_covers(x).size()) + " elements";
    return std::nullopt;
}

std::optional<std::string> check_chi_transport(int s, int k, const Deadline& deadline) {
    const CorePoset p = build_core_poset(s, k);
    const PlanarPoset q = build_planar_poset(s, k);
    std::optional<std::string> failure;
    std::vector<PlanarPoint> image;
    for_each_ideal(
        p,
        [&](const std::vector<int>& members) {
            if (failure) return;
            image.clear();
            for (int x : members) image.push_back(chi(s, k, x));
            if (!is_down_closed(q, image)) failure = "chi image of an ideal is not an ideal";
            else if (is_nice(s, k, members) != is_admissible(k, image))
                failure = "niceness not transported for ideal " + nlohmann::json(members).dump();
        },
        EnumLimits{std::numeric_limits<std::size_t>::max(), deadline});
    return failure;
}

std::optional<std::string> check_xi_count(int m, int k) {
    std::vector<PathWord> image;
    for (const PathWord& w : enumerate_symmetric_dyck(2 * m, 2 * k)) image.push_back(xi(w));
    std::sort(image.begin(), image.end());
    const auto target = enumerate_symmetric_dyck(2 * m + 1, 2 * k);
    if (image != target)
        return "xi image has " + std::to_string(image.size()) + " words, SD(" + std::to_string(2 * m + 1) + "," +
               std::to_string(2 * k) + ") has " + std::to_string(target.size());
    return std::nullopt;
}

std::optional<std::string> check_hooks_are_nice_ideals(int s, int k, const Deadline& deadline) {
    OracleOptions opts;
    opts.deadline = deadline;
    const auto hooks = hook_sets(enumerate_sc_cores_stable(s, k, opts).cores);
    const auto nice = member_sets(enumerate_nice_ideals(s, k, EnumLimits{EnumLimits{}.cap, deadline}));
    if (auto d = first_difference(hooks, nice))
        return "hook set " + nlohmann::json(d->first).dump() +
               (d->second ? " comes from a core but is not a nice ideal" : " is a nice ideal but no core has it");
    return std::nullopt;
}

std::vector<CheckResult> verify_structure(int s, int k, const Deadline& deadline) {
    std::vector<CheckResult> out;
    out.push_back(from_failure("chi-isomorphism", check_chi_isomorphism(s, k)));
    out.push_back(from_failure("cover-counts", check_cover_counts(s, k)));
    out.push_back(from_failure("left-right-closure", check_left_right_closure(s, k)));
    out.push_back(from_failure("chi-niceness-transport", check_chi_transport(s, k, deadline)));
    if (k % 2 == 0) {
        out.push_back(from_failure("planar-identity", check_planar_identity(s / 2, k / 2)));
        out.push_back(from_failure("xi-count", check_xi_count(s / 2, k / 2)));
    } else if (s % 2 == 1) {
        out.push_back(from_failure("restricted-identity", check_restricted_identity((s - 1) / 2, (k - 1) / 2)));
    }
    return out;
}

// ---------------------------------------------------------------- round-trips

std::vector<CheckResult> verify_roundtrips(int s, int k, const Deadline& deadline) {
    const EnumLimits limits{EnumLimits{}.cap, deadline};
    const EnumLimits stream{std::numeric_limits<std::size_t>::max(), deadline};
    std::vector<CheckResult> out;

    out.push_back(each_word("alpha", FamilySpec::free(2 * s, k, 0), std::nullopt, stream, [](const PathWord& w) -> Failure {
        const PathWord a = alpha(w);
        if (profile(a).min_height < 0 || final_height(a) % 2 != 0) return "image is not an even-height ballot word";
        if (step_shapes(a) != step_shapes(w)) return "steps not preserved";
        if (alpha_inv(a) != w) return "inverse gives '" + to_string(alpha_inv(a)) + "'";
        return std::nullopt;
    }));
    out.push_back(each_word("alpha-inverse", FamilySpec::ballot_any(2 * s, k), false, stream,
                            [](const PathWord& w) -> Failure {
                           if (alpha(alpha_inv(w)) != w) return "forward of inverse differs";
                           return std::nullopt;
                       }));
    out.push_back(each_word("beta", FamilySpec::free(2 * s, k, -1), std::nullopt, stream, [](const PathWord& w) -> Failure {
        const PathWord b = beta(w);
        if (profile(b).min_height < 0 || final_height(b) % 2 == 0) return "image is not an odd-height ballot word";
        if (step_shapes(b) != step_shapes(w)) return "steps not preserved";
        if (beta_inv(b) != w) return "inverse gives '" + to_string(beta_inv(b)) + "'";
        return std::nullopt;
    }));
    out.push_back(each_word("beta-inverse", FamilySpec::ballot_any(2 * s, k), true, stream,
                            [](const PathWord& w) -> Failure {
                           if (beta(beta_inv(w)) != w) return "forward of inverse differs";
                           return std::nullopt;
                       }));

    const int kh = k / 2;
    const bool even_k = k % 2 == 0;
    // phi for even k; psi for odd k, one size up when s is odd.
    const int walk_m = even_k ? s / 2 : (s + 1) / 2;
    const std::string walk_name = even_k ? "phi" : "psi";
    const Walk walk = even_k ? Walk::Phi : Walk::Psi;
    auto forward = [&](const PlanarIdeal& i) { return even_k ? phi(walk_m, kh, i) : psi(walk_m, kh, i); };
    auto backward = [&](const PathWord& w) { return even_k ? phi_inv(walk_m, kh, w) : psi_inv(walk_m, kh, w); };
    auto in_family = [&](const PathWord& w) {
        return even_k ? in_q_family(walk_m, kh, w) : in_q_prime_family(walk_m, kh, w);
    };
    const auto walk_ideals = enumerate_admissible_ideals(2 * walk_m, k, limits);
    out.push_back(each(walk_name, walk_ideals, deadline, [&](const PlanarIdeal& i) -> Failure {
        const PathWord w = forward(i);
        if (!in_family(w)) return "image '" + to_string(w) + "' is outside its family";
        if (backward(w).members != i.members) return "inverse differs";
        if (auto bad = coloring_violation(walk, walk_m, kh, i)) return "coloring rule fails at " + point_label(*bad);
        return std::nullopt;
    }));
    const auto walk_words = even_k ? q_family(walk_m, kh, limits) : q_prime_family(walk_m, kh, limits);
    out.push_back(each(walk_name + "-inverse", walk_words, deadline, [&](const PathWord& w) -> Failure {
        if (forward(backward(w)) != w) return "forward of inverse differs";
        return std::nullopt;
    }));

    const int m = s / 2;
    const Fold map = even_k ? Fold::Delta : (s % 2 == 0 ? Fold::Gamma : Fold::Eta);
    const std::string fold_name = map == Fold::Delta ? "delta" : map == Fold::Gamma ? "gamma" : "eta";
    const int fold_width2 = map == Fold::Eta ? 2 * s : 4 * m;
    const auto domain = map == Fold::Delta ? q_family(m, kh, limits)
                        : map == Fold::Gamma ? q_prime_family(m, kh, limits)
                                             : q_star_family(m, kh, limits);
    out.push_back(each(fold_name, domain, deadline, [&](const PathWord& w) -> Failure {
        const PathWord y = fold(map, m, kh, w);
        if (!is_sym_dyck(y, fold_width2, k)) return "image '" + to_string(y) + "' is not a symmetric Dyck word";
        if (unfold(map, m, kh, y) != w) return "inverse differs";
        if (fold_case(map, m, kh, w) != unfold_case(map, m, kh, y)) return "forward and inverse disagree on the case";
        return std::nullopt;
    }));
    const auto codomain = enumerate_symmetric_dyck(fold_width2 / 2, k, limits);
    out.push_back(each(fold_name + "-inverse", codomain, deadline, [&](const PathWord& w) -> Failure {
        if (fold(map, m, kh, unfold(map, m, kh, w)) != w) return "forward of inverse differs";
        const auto cases = matching_cases(map, m, kh, w);
        if (cases != std::set<CaseTag>{unfold_case(map, m, kh, w)})
            return "dispatch picked " + to_string(unfold_case(map, m, kh, w)) + " but " + std::to_string(cases.size()) +
                   " case shapes fit";
        return std::nullopt;
    }));

    if (even_k && s % 2 == 1) {
        out.push_back(each("xi", codomain, deadline, [&](const PathWord& w) -> Failure {
            const PathWord y = xi(w);
            if (!is_sym_dyck(y, 2 * s, k)) return "image is not a symmetric Dyck word";
            if (xi_inv(y) != w) return "inverse differs";
            return std::nullopt;
        }));
        out.push_back(each("xi-inverse", enumerate_symmetric_dyck(s, k, limits), deadline, [&](const PathWord& w) -> Failure {
            if (xi(xi_inv(w)) != w) return "forward of inverse differs";
            return std::nullopt;
        }));
    }

    OracleOptions opts;
    opts.deadline = deadline;
    out.push_back(each("core-to-path", enumerate_sc_cores_stable(s, k, opts).cores, deadline,
                       [&](const Partition& p) -> Failure {
                           const PathWord w = core_to_path(s, k, p);
                           if (!is_sym_dyck(w, 2 * s, k)) return "image is not a symmetric Dyck word";
                           if (path_to_core(s, k, w) != p) return "inverse differs";
                           return std::nullopt;
                       }));
    out.push_back(each("path-to-core", enumerate_symmetric_dyck(s, k, limits), deadline, [&](const PathWord& w) -> Failure {
        if (core_to_path(s, k, path_to_core(s, k, w)) != w) return "forward of inverse differs";
        return std::nullopt;
    }));
    return out;
}

// ---------------------------------------------------------------- equinumerosity

CellReport verify_equinumerosity(int s, int k, const Deadline& deadline) {
    const auto started = std::chrono::steady_clock::now();
    CellReport cell;
    cell.s = s;
    cell.k = k;
    const EnumLimits limits{EnumLimits{}.cap, deadline};
    try {
        OracleOptions opts;
        opts.deadline = deadline;
        const OracleRun run = enumerate_sc_cores_stable(s, k, opts);
        cell.oracle_cap = run.cap;
        cell.checks.push_back({"oracle-cap-stable", true, ""});
        const auto nice = enumerate_nice_ideals(s, k, limits);
        const auto admissible = enumerate_admissible_ideals(s, k, limits);
        const auto sd = enumerate_symmetric_dyck(s, k, limits);
        cell.sc_cores = run.cores.size();
        cell.nice_ideals = nice.size();
        cell.admissible_ideals = admissible.size();
        cell.sym_dyck = sd.size();

        const bool equal = *cell.sc_cores == *cell.nice_ideals && *cell.nice_ideals == *cell.admissible_ideals &&
                           *cell.admissible_ideals == *cell.sym_dyck;
        cell.checks.push_back({"counts-equal", equal, equal ? "" : "counts differ"});

        const auto hooks = hook_sets(run.cores);
        const auto nice_sets = member_sets(nice);
        const auto hook_diff = first_difference(hooks, nice_sets);
        cell.checks.push_back({"hooks-equal-nice-ideals", !hook_diff, hook_diff ? "hook sets and nice ideals differ" : ""});
        if (hook_diff) {
            cell.counterexample = {{"stage", hook_diff->second ? "core-without-nice-ideal" : "nice-ideal-without-core"},
                                   {"hooks", hook_diff->first}};
        } else if (!equal) {
            std::vector<std::vector<PlanarPoint>> images;
            for (const CoreIdeal& i : nice) images.push_back(chi_image(i).members);
            std::sort(images.begin(), images.end());
            std::vector<std::vector<PlanarPoint>> adm;
            for (const PlanarIdeal& i : admissible) adm.push_back(i.members);
            std::sort(adm.begin(), adm.end());
            if (auto d = first_difference(images, adm)) {
                cell.counterexample = {{"stage", d->second ? "chi-image-not-admissible" : "admissible-without-preimage"},
                                       {"ideal", to_json(PlanarIdeal{s, k, d->first})}};
            } else {
                std::vector<PathWord> hit;
                for (const PlanarIdeal& i : admissible) {
                    try {
                        hit.push_back(ideal_to_path(s, k, i));
                    } catch (const std::exception& e) {
                        cell.counterexample = {{"stage", "ideal-to-path-failed"}, {"ideal", to_json(i)}, {"error", e.what()}};
                        break;
                    }
                }
                std::sort(hit.begin(), hit.end());
                if (cell.counterexample.is_null())
                    if (auto d = first_difference(hit, sd))
                        cell.counterexample = {{"stage", d->second ? "path-not-symmetric-dyck" : "path-without-ideal"},
                                               {"path", path_to_json(s, k, d->first)}};
            }
        }
        if (k == 1) {
            const bool ok = *cell.sc_cores == fms_pair_count(s, s + 1);
            cell.checks.push_back({"pair-formula", ok, ok ? "" : "count differs from C(s, floor(s/2))"});
        }
        if (k == 2) {
            const bool ok = *cell.sc_cores == chs_count(s);
            cell.checks.push_back({"motzkin-sum-formula", ok, ok ? "" : "count differs from the symmetric Motzkin sum"});
        }
    } catch (const BudgetExceeded&) {
        cell.skipped = true;
    } catch (const CapInstability& e) {
        cell.checks.push_back({"oracle-cap-stable", false, e.what()});
    } catch (const std::exception& e) {
        cell.checks.push_back({"equinumerosity", false, e.what()});
    }
    cell.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    cell.pass = !cell.skipped && !cell.checks.empty() &&
                std::all_of(cell.checks.begin(), cell.checks.end(), [](const CheckResult& c) { return c.pass; });
    return cell;
}

// ---------------------------------------------------------------- sweep

VerificationReport run_sweep(const SweepConfig& config) {
    config.validate();
    const auto has = [&](Suite s) { return std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end(); };
    VerificationReport report;
    for (int s = config.s_lo; s <= config.s_hi; ++s)
        for (int k = config.k_lo; k <= config.k_hi; ++k) {
            CellReport c;
            c.s = s;
            c.k = k;
            report.cells.push_back(c);
        }
    const bool per_cell = has(Suite::Equinumerosity) || has(Suite::Roundtrip) || has(Suite::Structure);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < report.cells.size(); idx = next++) {
            CellReport& cell = report.cells[idx];
            const auto started = std::chrono::steady_clock::now();
            const Deadline deadline = Deadline::after_seconds(config.budget_secs);
            if (has(Suite::Equinumerosity)) cell = verify_equinumerosity(cell.s, cell.k, deadline);
            try {
                if (!cell.skipped && has(Suite::Roundtrip))
                    for (auto& r : verify_roundtrips(cell.s, cell.k, deadline)) cell.checks.push_back(std::move(r));
                if (!cell.skipped && has(Suite::Structure))
                    for (auto& r : verify_structure(cell.s, cell.k, deadline)) cell.checks.push_back(std::move(r));
            } catch (const BudgetExceeded&) {
                cell.skipped = true;
            } catch (const std::exception& e) {
                cell.checks.push_back({"suite", false, e.what()});
            }
            cell.millis =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
            cell.pass = !cell.skipped && !cell.checks.empty() &&
                        std::all_of(cell.checks.begin(), cell.checks.end(), [](const CheckResult& c) { return c.pass; });
        }
    };
    if (per_cell) {
        unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
        n = std::min<unsigned>(n, static_cast<unsigned>(report.cells.size()));
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        report.cells.clear();
    }
    if (has(Suite::Golden)) report.global = golden_checks();
    return report;
}

// ---------------------------------------------------------------- output

std::string emit_table(const VerificationReport& report, const std::string& format, bool stable) {
    auto num = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    if (format == "csv") {
        std::ostringstream out;
        out << "s,k,sc_cores,nice_ideals,admissible_ideals,sym_dyck,pass,millis\n";
        for (const CellReport& c : report.cells)
            out << c.s << ',' << c.k << ',' << num(c.sc_cores) << ',' << num(c.nice_ideals) << ','
                << num(c.admissible_ideals) << ',' << num(c.sym_dyck) << ','
                << (c.skipped ? "skipped" : c.pass ? "true" : "false") << ',' << (stable ? 0 : c.millis) << '\n';
        return out.str();
    }
    if (format == "json") {
        auto opt = [](const std::optional<std::uint64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
        auto checks_json = [](const std::vector<CheckResult>& checks) {
            nlohmann::json arr = nlohmann::json::array();
            for (const CheckResult& r : checks) arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
            return arr;
        };
        nlohmann::json cells = nlohmann::json::array();
        for (const CellReport& c : report.cells)
            cells.push_back({{"s", c.s},
                             {"k", c.k},
                             {"sc_cores", opt(c.sc_cores)},
                             {"nice_ideals", opt(c.nice_ideals)},
                             {"admissible_ideals", opt(c.admissible_ideals)},
                             {"sym_dyck", opt(c.sym_dyck)},
                             {"pass", c.pass},
                             {"skipped", c.skipped},
                             {"millis", stable ? 0 : c.millis},
                             {"checks", checks_json(c.checks)},
                             {"counterexample", c.counterexample}});
        nlohmann::json doc = {{"cells", cells}, {"global", checks_json(report.global)}, {"pass", report.pass()}};
        return doc.dump(2) + "\n";
    }
    throw InvalidInput("table format must be csv or json, got '" + format + "'");
}

std::string emit_hasse(int s, int k, PosetKind kind) {
    std::ostringstream out;
    if (kind == PosetKind::Core) {
        const CorePoset p = build_core_poset(s, k);
        out << "digraph P_" << s << '_' << k << " {\n";
        for (int x : p.elements()) out << "  \"" << x << "\";\n";
        for (auto [lo, hi] : p.cover_pairs()) out << "  \"" << lo << "\" -> \"" << hi << "\";\n";
    } else {
        const PlanarPoset p = build_planar_poset(s, k);
        out << "digraph Pprime_" << s << '_' << k << " {\n";
        for (PlanarPoint x : p.elements()) out << "  \"" << point_label(x) << "\";\n";
        for (auto [lo, hi] : p.cover_pairs())
            out << "  \"" << point_label(lo) << "\" -> \"" << point_label(hi) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace corelab
