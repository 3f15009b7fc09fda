#include "corelab/bijection.hpp"
#include "corelab/harness.hpp"
#include "corelab/oracle.hpp"

#include <algorithm>
#include <functional>

namespace corelab {

namespace {

std::vector<int> odd_range(int lo, int hi) {
    std::vector<int> out;
    for (int x = lo; x <= hi; x += 2) out.push_back(x);
    return out;
}

std::vector<int> members_on(const CorePoset& p, Side side) {
    std::vector<int> out;
    for (int x : p.elements())
        if (p.side(x) == side) out.push_back(x);
    return out;
}

std::vector<int> rank_of(const CorePoset& p, Side side, int rank) {
    std::vector<int> out;
    for (int x : p.elements())
        if (p.side(x) == side && p.rank(x) == rank) out.push_back(x);
    return out;
}

std::vector<int> join(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlanarPoint> row_of(const PlanarPoset& p, int b) {
    std::vector<PlanarPoint> out;
    for (PlanarPoint x : p.elements())
        if (x.b == b) out.push_back(x);
    return out;
}

std::vector<PlanarPoint> row(int a2_lo, int a2_hi, int b) {
    std::vector<PlanarPoint> out;
    for (int a2 = a2_lo; a2 <= a2_hi; a2 += 2) out.push_back({a2, b});
    return out;
}

std::vector<PathWord> words(int kparam, std::initializer_list<const char*> texts) {
    std::vector<PathWord> out;
    for (const char* t : texts) out.push_back(parse_word(t, kparam));
    std::sort(out.begin(), out.end());
    return out;
}

CheckResult check(const std::string& name, const std::function<bool()>& body) {
    try {
        return {name, body(), ""};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

// Cores, their symmetric Dyck words, and the core -> word assignment at one (s, k).
bool micro_case(int s, int k, const std::vector<Partition>& cores, const std::vector<PathWord>& sd,
                const std::vector<std::pair<Partition, const char*>>& assignment) {
    if (enumerate_sc_cores_stable(s, k).cores != cores) return false;
    if (enumerate_symmetric_dyck(s, k) != sd) return false;
    if (count_nice_ideals(s, k) != cores.size() || count_admissible_ideals(s, k) != cores.size()) return false;
    for (const auto& [core, text] : assignment)
        if (core_to_path(s, k, core) != parse_word(text, k)) return false;
    return true;
}

// Ideal of P'(20,4) from the worked walk example, doubled abscissae.
PlanarIdeal walk_example_even() {
    return make_ideal(build_planar_poset(20, 4), {{2, 0}, {4, 0}, {6, 0}, {8, 0}, {10, 0}, {6, 1}, {16, -1}, {20, -1}});
}

PlanarIdeal walk_example_odd() {
    return make_ideal(build_planar_poset(20, 3), {{2, 0}, {12, -2}, {15, -1}, {13, -1}, {11, -1}, {9, -1}});
}

} // namespace

std::vector<CheckResult> golden_checks() {
    std::vector<CheckResult> out;

    out.push_back(check("micro-4-4", [] {
        return micro_case(4, 4, {Partition{}, Partition{1}, Partition{2, 1}, Partition{2, 2}},
                          words(4, {"H1 H1 H1 H1", "H1 H2 H1", "H2 H2", "U D"}),
                          {{Partition{}, "H1 H2 H1"}, {Partition{1}, "U D"}, {Partition{2, 1}, "H2 H2"},
                           {Partition{2, 2}, "H1 H1 H1 H1"}});
    }));
    out.push_back(check("micro-2-3", [] {
        return micro_case(2, 3, {Partition{}, Partition{1}}, words(3, {"H1 H1", "H2"}), {{Partition{1}, "H1 H1"}});
    }));
    out.push_back(check("micro-3-3", [] {
        return micro_case(3, 3, {Partition{}, Partition{1}}, words(3, {"H1 H1 H1", "U D"}), {});
    }));

    out.push_back(check("hook-grid-53311", [] {
        const HookGrid g = hook_grid(Partition{5, 3, 3, 1, 1});
        return g.rows == std::vector<std::vector<int>>{{9, 6, 5, 2, 1}, {6, 3, 2}, {5, 2, 1}, {2}, {1}} &&
               diagonal_hooks(Partition{5, 3, 3, 1, 1}) == OddHookSet{9, 3, 1} &&
               is_self_conjugate(Partition{5, 3, 3, 1, 1});
    }));
    out.push_back(check("symmetric-dyck-10-4", [] {
        const PathWord w = parse_word("U H2 H2 H2 D", 4);
        return matches(w, FamilySpec::dyck(10, 4)) && is_symmetric(w);
    }));
    out.push_back(check("walk-even-example", [] {
        const PlanarIdeal ideal = walk_example_even();
        const PathWord w = phi(10, 2, ideal);
        return is_admissible(4, ideal.members) && w == parse_word("H1 U D D H2 H2", 4) &&
               phi_inv(10, 2, w).members == ideal.members &&
               chi_preimage(ideal).members == std::vector<int>{1, 3, 5, 7, 9, 25, 29, 49};
    }));
    out.push_back(check("walk-odd-example", [] {
        const PlanarIdeal ideal = walk_example_odd();
        const PathWord w = psi(10, 1, ideal);
        return w == parse_word("H1 D H1 D H2 U H1 H1", 3) && psi_inv(10, 1, w).members == ideal.members &&
               chi_preimage(ideal).members == std::vector<int>{1, 29, 31, 33, 35, 75};
    }));
    out.push_back(check("alpha-example", [] {
        const PathWord in = parse_word("H3 U H1 U D D D H1 D H2 H1 U U", 4);
        const PathWord want = parse_word("H2 H1 U U U H1 U U U D H1 D H3", 4);
        return alpha(in) == want && alpha_inv(want) == in;
    }));
    out.push_back(check("beta-example", [] {
        const PathWord in = parse_word("D U H1 U D H2 D H1 D H3 U H1 H2", 4);
        const PathWord want = parse_word("U H1 U D H2 U U H1 U H3 D H1 H2", 4);
        return beta(in) == want && beta_inv(want) == in;
    }));
    out.push_back(check("poset-20-3", [] {
        const CorePoset p = build_core_poset(20, 3);
        return rank_of(p, Side::Left, 0) == odd_range(1, 19) && rank_of(p, Side::Left, 1) == odd_range(47, 59) &&
               rank_of(p, Side::Left, 2) == odd_range(93, 99) && rank_of(p, Side::Left, 3) == std::vector<int>{139} &&
               members_on(p, Side::Left) == join({odd_range(1, 19), odd_range(47, 59), odd_range(93, 99), {139}}) &&
               members_on(p, Side::Right) == join({odd_range(25, 39), odd_range(71, 79), odd_range(117, 119)});
    }));
    out.push_back(check("poset-20-4", [] {
        const CorePoset p = build_core_poset(20, 4);
        return rank_of(p, Side::Left, 0) == odd_range(1, 19) && rank_of(p, Side::Left, 1) == odd_range(49, 59) &&
               rank_of(p, Side::Left, 2) == odd_range(97, 99) &&
               members_on(p, Side::Left) == join({odd_range(1, 19), odd_range(49, 59), odd_range(97, 99)}) &&
               members_on(p, Side::Right) == join({odd_range(25, 39), odd_range(73, 79)});
    }));
    out.push_back(check("planar-20-4", [] {
        const PlanarPoset p = build_planar_poset(20, 4);
        return row_of(p, 0) == row(2, 20, 0) && row_of(p, 1) == row(6, 16, 1) && row_of(p, 2) == row(10, 12, 2) &&
               row_of(p, -1) == row(6, 20, -1) && row_of(p, -2) == row(10, 16, -2) && p.elements().size() == 30 &&
               chi(20, 4, 49) == PlanarPoint{6, 1} && chi(20, 4, 25) == PlanarPoint{20, -1};
    }));
    out.push_back(check("planar-20-3", [] {
        const PlanarPoset p = build_planar_poset(20, 3);
        std::vector<PlanarPoint> image;
        const CorePoset core = build_core_poset(20, 3);
        for (int x : core.elements()) image.push_back(chi(20, 3, x));
        std::sort(image.begin(), image.end());
        return row_of(p, -1) == row(5, 19, -1) && row_of(p, 0) == row(2, 20, 0) && image == p.elements();
    }));
    return out;
}

} // namespace corelab
