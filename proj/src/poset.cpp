#include "corelab/poset.hpp"

#include "corelab/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace corelab {

namespace {

void check_params(int s, int k) {
    if (s < 1 || k < 1)
        throw InvalidInput("poset parameters need s >= 1 and k >= 1, got s=" + std::to_string(s) +
                           " k=" + std::to_string(k));
}

// x = 2i-1 + 2sj with 1 <= i <= s.
bool decode(int s, int x, int& i, int& j) {
    if (x < 1 || x % 2 == 0) return false;
    j = (x - 1) / (2 * s);
    i = ((x - 1) % (2 * s)) / 2 + 1;
    return true;
}

int ceil_half(int n) { return (n + 1) / 2; }

int right_start(int s, int k, int j) { return j * k + ceil_half(s + k) + 1; }

// Index graph for the ideal walk: elements in linear-extension order.
struct IdealGraph {
    std::vector<std::vector<int>> lower;
    // conflicts[i] lists j <= i that may not be present together with i.
    std::vector<std::vector<int>> conflicts;
    int excluded = -1;
};

template <class Visit>
void walk_ideals(const IdealGraph& g, const EnumLimits& limits, Visit&& visit) {
    const int n = static_cast<int>(g.lower.size());
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    std::size_t produced = 0;
    std::size_t steps = 0;
    auto go = [&](auto&& self, int i) -> void {
        if ((++steps & 0xFFF) == 0) limits.deadline.check();
        if (i == n) {
            if (++produced > limits.cap)
                throw Overflow("ideal enumeration exceeded cap of " + std::to_string(limits.cap));
            visit(in);
            return;
        }
        self(self, i + 1);
        if (i == g.excluded) return;
        for (int c : g.lower[static_cast<std::size_t>(i)])
            if (!in[static_cast<std::size_t>(c)]) return;
        in[static_cast<std::size_t>(i)] = 1;
        bool clash = false;
        for (int c : g.conflicts[static_cast<std::size_t>(i)])
            if (in[static_cast<std::size_t>(c)]) {
                clash = true;
                break;
            }
        if (!clash) self(self, i + 1);
        in[static_cast<std::size_t>(i)] = 0;
    };
    go(go, 0);
}

std::vector<int> core_order(const CorePoset& p) {
    std::vector<int> order = p.elements();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.rank(a) < p.rank(b); });
    return order;
}

std::vector<PlanarPoint> planar_order(const PlanarPoset& p) {
    std::vector<PlanarPoint> order = p.elements();
    std::sort(order.begin(), order.end(), [&](PlanarPoint x, PlanarPoint y) {
        if (p.rank(x) != p.rank(y)) return p.rank(x) < p.rank(y);
        if (x.a2 != y.a2) return x.a2 < y.a2;
        return x.b > y.b;
    });
    return order;
}

IdealGraph core_graph(const CorePoset& p, const std::vector<int>& order, bool nice) {
    std::map<int, int> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    IdealGraph g;
    g.lower.resize(order.size());
    g.conflicts.resize(order.size());
    const int lo = 2 * p.s();
    const int hi = 2 * p.s() + 2 * p.k();
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int c : p.lower_covers(order[i])) g.lower[i].push_back(index.at(c));
        if (!nice) continue;
        for (std::size_t j = 0; j <= i; ++j) {
            const int sum = order[i] + order[j];
            if (sum >= lo && sum <= hi) g.conflicts[i].push_back(static_cast<int>(j));
        }
    }
    return g;
}

IdealGraph planar_graph(const PlanarPoset& p, const std::vector<PlanarPoint>& order, bool admissible) {
    std::map<PlanarPoint, int> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    IdealGraph g;
    g.lower.resize(order.size());
    g.conflicts.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (PlanarPoint c : p.lower_covers(order[i])) g.lower[i].push_back(index.at(c));
        if (!admissible) continue;
        for (std::size_t j = 0; j < i; ++j) {
            const PlanarPoint x = order[i];
            const PlanarPoint y = order[j];
            const bool pair = (x.b == 0 && y.b == -1) || (x.b == -1 && y.b == 0);
            if (pair && std::abs(x.a2 - y.a2) <= p.k()) g.conflicts[i].push_back(static_cast<int>(j));
        }
    }
    return g;
}

std::vector<CoreIdeal> collect(const CorePoset& p, bool nice, const EnumLimits& limits) {
    const std::vector<int> order = core_order(p);
    const IdealGraph g = core_graph(p, order, nice);
    std::vector<CoreIdeal> out;
    walk_ideals(g, limits, [&](const std::vector<char>& in) {
        CoreIdeal ideal{p.s(), p.k(), {}};
        for (std::size_t i = 0; i < in.size(); ++i)
            if (in[i]) ideal.members.push_back(order[i]);
        std::sort(ideal.members.begin(), ideal.members.end());
        out.push_back(std::move(ideal));
    });
    return out;
}

std::vector<PlanarIdeal> collect(const PlanarPoset& p, bool admissible, int excluded_a2,
                                 const EnumLimits& limits) {
    const std::vector<PlanarPoint> order = planar_order(p);
    IdealGraph g = planar_graph(p, order, admissible);
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == PlanarPoint{excluded_a2, 0}) g.excluded = static_cast<int>(i);
    std::vector<PlanarIdeal> out;
    walk_ideals(g, limits, [&](const std::vector<char>& in) {
        PlanarIdeal ideal{p.s(), p.k(), {}};
        for (std::size_t i = 0; i < in.size(); ++i)
            if (in[i]) ideal.members.push_back(order[i]);
        std::sort(ideal.members.begin(), ideal.members.end());
        out.push_back(std::move(ideal));
    });
    return out;
}

} // namespace

bool in_left_family(int s, int k, int x) {
    int i = 0;
    int j = 0;
    if (!decode(s, x, i, j)) return false;
    return j * k + 1 <= i && i <= s / 2;
}

bool in_right_family(int s, int k, int x) {
    int i = 0;
    int j = 0;
    if (!decode(s, x, i, j)) return false;
    return right_start(s, k, j) <= i && i <= s;
}

bool CorePoset::contains(int x) const { return info_.count(x) != 0; }

const CorePoset::Info& CorePoset::info(int x) const {
    auto it = info_.find(x);
    if (it == info_.end())
        throw InvalidInput(std::to_string(x) + " is not an element of P(" + std::to_string(s_) + "," +
                           std::to_string(k_) + ")");
    return it->second;
}

Side CorePoset::side(int x) const { return info(x).side; }
int CorePoset::rank(int x) const { return info(x).rank; }
const std::vector<int>& CorePoset::lower_covers(int x) const { return info(x).lower; }

std::vector<std::pair<int, int>> CorePoset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [x, inf] : info_)
        for (int y : inf.lower) out.emplace_back(y, x);
    std::sort(out.begin(), out.end());
    return out;
}

int CorePoset::max_element() const {
    if (elements_.empty()) throw InvalidInput("empty poset has no maximum");
    return elements_.back();
}

CorePoset build_core_poset(int s, int k) {
    check_params(s, k);
    CorePoset p;
    p.s_ = s;
    p.k_ = k;
    for (int j = 0; j * k + 1 <= s / 2; ++j)
        for (int i = j * k + 1; i <= s / 2; ++i)
            p.info_[2 * i - 1 + 2 * s * j] = {Side::Left, j, {}};
    for (int j = 0; right_start(s, k, j) <= s; ++j)
        for (int i = right_start(s, k, j); i <= s; ++i)
            p.info_[2 * i - 1 + 2 * s * j] = {Side::Right, j, {}};
    for (auto& [y, inf] : p.info_) {
        p.elements_.push_back(y);
        for (int t = k; t >= 0; --t) {
            const int x = y - 2 * s - 2 * t;
            auto it = p.info_.find(x);
            if (it != p.info_.end() && it->second.side == inf.side) inf.lower.push_back(x);
        }
    }
    return p;
}

bool PlanarPoset::contains(PlanarPoint p) const { return info_.count(p) != 0; }

const PlanarPoset::Info& PlanarPoset::info(PlanarPoint p) const {
    auto it = info_.find(p);
    if (it == info_.end())
        throw InvalidInput("point (" + std::to_string(p.a2) + "/2," + std::to_string(p.b) +
                           ") is not an element of P'(" + std::to_string(s_) + "," + std::to_string(k_) + ")");
    return it->second;
}

Side PlanarPoset::side(PlanarPoint p) const { return info(p).side; }
int PlanarPoset::rank(PlanarPoint p) const { return p.b >= 0 ? p.b : -p.b - 1; }
const std::vector<PlanarPoint>& PlanarPoset::lower_covers(PlanarPoint p) const { return info(p).lower; }

std::vector<std::pair<PlanarPoint, PlanarPoint>> PlanarPoset::cover_pairs() const {
    std::vector<std::pair<PlanarPoint, PlanarPoint>> out;
    for (const auto& [x, inf] : info_)
        for (PlanarPoint y : inf.lower) out.emplace_back(y, x);
    std::sort(out.begin(), out.end());
    return out;
}

PlanarPoset build_planar_poset(int s, int k) {
    check_params(s, k);
    PlanarPoset p;
    p.s_ = s;
    p.k_ = k;
    for (int j = 0; j * k + 1 <= s / 2; ++j)
        for (int i = j * k + 1; i <= s / 2; ++i)
            p.info_[{2 * i - k * j, j}] = {Side::Left, {}};
    for (int j = 0; right_start(s, k, j) <= s; ++j)
        for (int i = right_start(s, k, j); i <= s; ++i)
            p.info_[{2 * (s + 1 - i) + k * (j + 1), -j - 1}] = {Side::Right, {}};
    for (auto& [y, inf] : p.info_) {
        p.elements_.push_back(y);
        const int below = inf.side == Side::Left ? y.b - 1 : y.b + 1;
        for (auto it = p.info_.lower_bound({y.a2 - k, below}); it != p.info_.end() && it->first.a2 <= y.a2 + k;
             ++it) {
            if (it->first.b == below && it->second.side == inf.side) inf.lower.push_back(it->first);
        }
    }
    return p;
}

bool posets_equal(const PlanarPoset& a, const PlanarPoset& b) {
    return a.elements() == b.elements() && a.cover_pairs() == b.cover_pairs();
}

PlanarPoint chi(int s, int k, int x) {
    check_params(s, k);
    int i = 0;
    int j = 0;
    if (!decode(s, x, i, j) || !(in_left_family(s, k, x) || in_right_family(s, k, x)))
        throw InvalidInput(std::to_string(x) + " is not an element of P(" + std::to_string(s) + "," +
                           std::to_string(k) + ")");
    if (in_left_family(s, k, x)) return {2 * i - k * j, j};
    return {2 * (s + 1 - i) + k * (j + 1), -j - 1};
}

int chi_inv(int s, int k, PlanarPoint p) {
    check_params(s, k);
    int x = -1;
    if (p.b >= 0) {
        const int twice_i = p.a2 + k * p.b;
        if (twice_i % 2 == 0) x = twice_i - 1 + 2 * s * p.b;
        if (x < 1 || !in_left_family(s, k, x)) x = -1;
    } else {
        const int j = -p.b - 1;
        const int twice = p.a2 - k * (j + 1);
        if (twice % 2 == 0) x = 2 * (s + 1 - twice / 2) - 1 + 2 * s * j;
        if (x < 1 || !in_right_family(s, k, x)) x = -1;
    }
    if (x < 0)
        throw InvalidInput("point (" + std::to_string(p.a2) + "/2," + std::to_string(p.b) +
                           ") is not an element of P'(" + std::to_string(s) + "," + std::to_string(k) + ")");
    return x;
}

bool PlanarIdeal::contains(PlanarPoint p) const {
    return std::binary_search(members.begin(), members.end(), p);
}

bool is_down_closed(const CorePoset& poset, const std::vector<int>& members) {
    for (int x : members) {
        if (!poset.contains(x)) return false;
        for (int y : poset.lower_covers(x))
            if (std::find(members.begin(), members.end(), y) == members.end()) return false;
    }
    return true;
}

bool is_down_closed(const PlanarPoset& poset, const std::vector<PlanarPoint>& members) {
    for (PlanarPoint x : members) {
        if (!poset.contains(x)) return false;
        for (PlanarPoint y : poset.lower_covers(x))
            if (std::find(members.begin(), members.end(), y) == members.end()) return false;
    }
    return true;
}

CoreIdeal make_ideal(const CorePoset& poset, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw InvalidInput("ideal members must be distinct");
    if (!is_down_closed(poset, members)) throw InvalidInput("members do not form an order ideal");
    return {poset.s(), poset.k(), std::move(members)};
}

PlanarIdeal make_ideal(const PlanarPoset& poset, std::vector<PlanarPoint> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw InvalidInput("ideal members must be distinct");
    if (!is_down_closed(poset, members)) throw InvalidInput("members do not form an order ideal");
    return {poset.s(), poset.k(), std::move(members)};
}

bool is_nice(int s, int k, const std::vector<int>& members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i; j < members.size(); ++j) {
            const int sum = members[i] + members[j];
            if (sum >= 2 * s && sum <= 2 * s + 2 * k) return false;
        }
    return true;
}

bool is_admissible(int k, const std::vector<PlanarPoint>& members) {
    for (PlanarPoint x : members) {
        if (x.b != 0) continue;
        for (PlanarPoint y : members)
            if (y.b == -1 && std::abs(x.a2 - y.a2) <= k) return false;
    }
    return true;
}

PlanarIdeal chi_image(const CoreIdeal& ideal) {
    PlanarIdeal out{ideal.s, ideal.k, {}};
    for (int x : ideal.members) out.members.push_back(chi(ideal.s, ideal.k, x));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

CoreIdeal chi_preimage(const PlanarIdeal& ideal) {
    CoreIdeal out{ideal.s, ideal.k, {}};
    for (PlanarPoint p : ideal.members) out.members.push_back(chi_inv(ideal.s, ideal.k, p));
    std::sort(out.members.begin(), out.members.end());
    return out;
}

std::vector<CoreIdeal> enumerate_ideals(const CorePoset& poset, const EnumLimits& limits) {
    return collect(poset, false, limits);
}

std::vector<PlanarIdeal> enumerate_ideals(const PlanarPoset& poset, const EnumLimits& limits) {
    return collect(poset, false, -1, limits);
}

std::vector<CoreIdeal> enumerate_nice_ideals(int s, int k, const EnumLimits& limits) {
    return collect(build_core_poset(s, k), true, limits);
}

std::vector<PlanarIdeal> enumerate_admissible_ideals(int s, int k, const EnumLimits& limits) {
    return collect(build_planar_poset(s, k), true, -1, limits);
}

std::vector<PlanarIdeal> enumerate_restricted_ideals(int m, int k, const EnumLimits& limits) {
    if (m < 0 || k < 0) throw InvalidInput("restricted ideals need m >= 0 and k >= 0");
    return collect(build_planar_poset(2 * m + 2, 2 * k + 1), true, 2 * m + 2, limits);
}

void for_each_ideal(const CorePoset& poset, const std::function<void(const std::vector<int>&)>& visit,
                    const EnumLimits& limits) {
    const std::vector<int> order = core_order(poset);
    std::vector<int> members;
    walk_ideals(core_graph(poset, order, false), limits, [&](const std::vector<char>& in) {
        members.clear();
        for (std::size_t i = 0; i < in.size(); ++i)
            if (in[i]) members.push_back(order[i]);
        std::sort(members.begin(), members.end());
        visit(members);
    });
}

std::uint64_t count_nice_ideals(int s, int k, const EnumLimits& limits) {
    const CorePoset p = build_core_poset(s, k);
    const std::vector<int> order = core_order(p);
    std::uint64_t n = 0;
    walk_ideals(core_graph(p, order, true), limits, [&](const std::vector<char>&) { ++n; });
    return n;
}

std::uint64_t count_admissible_ideals(int s, int k, const EnumLimits& limits) {
    const PlanarPoset p = build_planar_poset(s, k);
    const std::vector<PlanarPoint> order = planar_order(p);
    std::uint64_t n = 0;
    walk_ideals(planar_graph(p, order, true), limits, [&](const std::vector<char>&) { ++n; });
    return n;
}

} // namespace corelab
