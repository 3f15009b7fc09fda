#include "corelab/error.hpp"
#include "corelab/poset.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace corelab;

namespace {

struct Raw {
    std::map<int, std::pair<Side, int>> tag;
    std::set<std::pair<int, int>> covers;
};

Raw raw_core(int s, int k) {
    Raw r;
    for (int j = 0; j * k + 1 <= s / 2; ++j)
        for (int i = j * k + 1; i <= s / 2; ++i) r.tag[2 * i - 1 + 2 * s * j] = {Side::Left, j};
    const int c = (s + k + 1) / 2;
    for (int j = 0; j * k + c + 1 <= s; ++j)
        for (int i = j * k + c + 1; i <= s; ++i) r.tag[2 * i - 1 + 2 * s * j] = {Side::Right, j};
    for (const auto& [x, tx] : r.tag)
        for (int t = 0; t <= k; ++t) {
            const auto it = r.tag.find(x + 2 * s + 2 * t);
            if (it != r.tag.end() && it->second.first == tx.first) r.covers.insert({x, it->first});
        }
    return r;
}

std::set<std::vector<int>> brute_ideals(const CorePoset& p) {
    const auto& el = p.elements();
    const auto pairs = p.cover_pairs();
    std::set<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << el.size()); ++mask) {
        std::set<int> in;
        for (std::size_t i = 0; i < el.size(); ++i)
            if (mask & (1u << i)) in.insert(el[i]);
        bool ok = true;
        for (const auto& [lo, hi] : pairs)
            if (in.count(hi) && !in.count(lo)) ok = false;
        if (ok) out.insert(std::vector<int>(in.begin(), in.end()));
    }
    return out;
}

std::vector<int> odd_range(int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; x += 2) v.push_back(x);
    return v;
}

std::vector<int> with_rank(const CorePoset& p, Side side, int rank) {
    std::vector<int> v;
    for (int x : p.elements())
        if (p.side(x) == side && p.rank(x) == rank) v.push_back(x);
    return v;
}

} // namespace

TEST_SUITE("posets") {

TEST_CASE("core poset at (20, 3)") {
    const CorePoset p = build_core_poset(20, 3);
    CHECK(with_rank(p, Side::Left, 0) == odd_range(1, 19));
    CHECK(with_rank(p, Side::Left, 1) == odd_range(47, 59));
    CHECK(with_rank(p, Side::Left, 2) == odd_range(93, 99));
    CHECK(with_rank(p, Side::Left, 3) == std::vector<int>{139});
    CHECK(with_rank(p, Side::Right, 0) == odd_range(25, 39));
    CHECK(with_rank(p, Side::Right, 1) == odd_range(71, 79));
    CHECK(with_rank(p, Side::Right, 2) == odd_range(117, 119));
    CHECK(p.max_element() == 139);
}

TEST_CASE("core poset at (20, 4)") {
    const CorePoset p = build_core_poset(20, 4);
    CHECK(with_rank(p, Side::Left, 0) == odd_range(1, 19));
    CHECK(with_rank(p, Side::Left, 1) == odd_range(49, 59));
    CHECK(with_rank(p, Side::Left, 2) == odd_range(97, 99));
    CHECK(with_rank(p, Side::Right, 0) == odd_range(25, 39));
    CHECK(with_rank(p, Side::Right, 1) == odd_range(73, 79));
    CHECK(p.elements().size() == 10 + 6 + 2 + 8 + 4);
}

TEST_CASE("small posets") {
    const CorePoset p = build_core_poset(4, 4);
    CHECK(p.elements() == std::vector<int>{1, 3});
    CHECK(p.cover_pairs().empty());
    CHECK(build_core_poset(2, 3).elements() == std::vector<int>{1});
    const PlanarPoset q = build_planar_poset(4, 4);
    CHECK(q.elements() == std::vector<PlanarPoint>{{2, 0}, {4, 0}});
    CHECK(q.cover_pairs().empty());
    CHECK_THROWS_AS(build_core_poset(0, 1), InvalidInput);
    CHECK_THROWS_AS(build_planar_poset(3, 0), InvalidInput);
}

TEST_CASE("core poset matches a direct reading of the element and cover definitions") {
    for (int s = 1; s <= 30; ++s)
        for (int k = 1; k <= 8; ++k) {
            const Raw r = raw_core(s, k);
            const CorePoset p = build_core_poset(s, k);
            std::vector<int> expect;
            for (const auto& [x, t] : r.tag) expect.push_back(x);
            REQUIRE(p.elements() == expect);
            for (const auto& [x, t] : r.tag) {
                REQUIRE(p.side(x) == t.first);
                REQUIRE(p.rank(x) == t.second);
                REQUIRE(in_left_family(s, k, x) == (t.first == Side::Left));
                REQUIRE(in_right_family(s, k, x) == (t.first == Side::Right));
            }
            const auto pairs = p.cover_pairs();
            REQUIRE(std::set<std::pair<int, int>>(pairs.begin(), pairs.end()) == r.covers);
        }
}

TEST_CASE("posets are finite with bounded rank") {
    for (int s = 2; s <= 40; ++s)
        for (int k = 1; k <= 8; ++k) {
            const CorePoset p = build_core_poset(s, k);
            for (int x : p.elements()) {
                const int j = p.rank(x);
                if (p.side(x) == Side::Left) REQUIRE(j * k + 1 <= s / 2);
                else REQUIRE(j * k + (s + k + 1) / 2 + 1 <= s);
            }
            REQUIRE(build_planar_poset(s, k).elements().size() == p.elements().size());
        }
}

TEST_CASE("chi examples") {
    CHECK(chi(20, 4, 49) == PlanarPoint{6, 1});
    CHECK(chi(20, 4, 25) == PlanarPoint{20, -1});
    for (int s = 2; s <= 12; ++s) CHECK(chi(s, 1, 1) == PlanarPoint{2, 0});
    CHECK(chi_inv(20, 4, {6, 1}) == 49);
    CHECK_THROWS_AS(chi(20, 4, 21), InvalidInput);
    CHECK_THROWS_AS(chi_inv(20, 4, {1, 0}), InvalidInput);
}

TEST_CASE("planar posets at (20, 4) and (20, 3)") {
    const PlanarPoset p = build_planar_poset(20, 4);
    std::set<PlanarPoint> expect;
    for (int a = 1; a <= 10; ++a) expect.insert({2 * a, 0});
    for (int a = 3; a <= 8; ++a) expect.insert({2 * a, 1});
    for (int a = 5; a <= 6; ++a) expect.insert({2 * a, 2});
    for (int a = 3; a <= 10; ++a) expect.insert({2 * a, -1});
    for (int a = 5; a <= 8; ++a) expect.insert({2 * a, -2});
    CHECK(std::set<PlanarPoint>(p.elements().begin(), p.elements().end()) == expect);
    std::vector<PlanarPoint> row;
    for (const PlanarPoint& q : build_planar_poset(20, 3).elements())
        if (q.b == -1) row.push_back(q);
    std::vector<PlanarPoint> expect_row;
    for (int a2 = 5; a2 <= 19; a2 += 2) expect_row.push_back({a2, -1});
    CHECK(row == expect_row);
}

TEST_CASE("chi is a poset isomorphism") {
    for (int s = 1; s <= 24; ++s)
        for (int k = 1; k <= 6; ++k) {
            const CorePoset p = build_core_poset(s, k);
            const PlanarPoset q = build_planar_poset(s, k);
            std::set<PlanarPoint> image;
            for (int x : p.elements()) {
                const PlanarPoint y = chi(s, k, x);
                REQUIRE(q.contains(y));
                REQUIRE(chi_inv(s, k, y) == x);
                REQUIRE(q.side(y) == p.side(x));
                REQUIRE((y.b >= 0) == (p.side(x) == Side::Left));
                image.insert(y);
            }
            REQUIRE(image.size() == q.elements().size());
            std::set<std::pair<PlanarPoint, PlanarPoint>> mapped;
            for (const auto& [lo, hi] : p.cover_pairs()) mapped.insert({chi(s, k, lo), chi(s, k, hi)});
            const auto qc = q.cover_pairs();
            REQUIRE(mapped == std::set<std::pair<PlanarPoint, PlanarPoint>>(qc.begin(), qc.end()));
        }
}

TEST_CASE("planar covers follow the distance rule") {
    for (int s = 2; s <= 16; ++s)
        for (int k = 1; k <= 5; ++k) {
            const PlanarPoset q = build_planar_poset(s, k);
            std::set<std::pair<PlanarPoint, PlanarPoint>> expect;
            for (const PlanarPoint& hi : q.elements())
                for (const PlanarPoint& lo : q.elements()) {
                    if (std::abs(hi.a2 - lo.a2) > k) continue;
                    if (hi.b >= 0 && lo.b >= 0 && hi.b == lo.b + 1) expect.insert({lo, hi});
                    if (hi.b < 0 && lo.b < 0 && hi.b == lo.b - 1) expect.insert({lo, hi});
                }
            const auto qc = q.cover_pairs();
            REQUIRE(std::set<std::pair<PlanarPoint, PlanarPoint>>(qc.begin(), qc.end()) == expect);
        }
}

TEST_CASE("nice and admissible predicates") {
    CHECK(is_nice(20, 3, {1, 29, 31, 33, 35, 75}));
    CHECK_FALSE(is_nice(20, 3, {1, 39}));
    CHECK_FALSE(is_nice(20, 3, {21}));
    CHECK(is_nice(20, 3, {}));
    const std::vector<PlanarPoint> fig{{2, 0}, {4, 0}, {6, 0}, {8, 0}, {10, 0}, {6, 1}, {16, -1}, {20, -1}};
    CHECK(is_admissible(4, fig));
    CHECK(is_admissible(4, {}));
    const PlanarPoset q = build_planar_poset(20, 4);
    std::vector<PlanarPoint> bad{{10, 0}, {12, -1}, {14, -1}, {16, -1}, {18, -1}, {20, -1}};
    for (int a = 1; a <= 4; ++a) bad.push_back({2 * a, 0});
    std::sort(bad.begin(), bad.end());
    CHECK(is_down_closed(q, bad));
    CHECK_FALSE(is_admissible(4, bad));
}

TEST_CASE("ideal construction validates") {
    const CorePoset p = build_core_poset(20, 4);
    CHECK_THROWS_AS(make_ideal(p, {49}), InvalidInput);
    CHECK_THROWS_AS(make_ideal(p, {2}), InvalidInput);
    CHECK(make_ideal(p, {3, 1}).members == std::vector<int>{1, 3});
    const PlanarPoset q = build_planar_poset(20, 4);
    CHECK_THROWS_AS(make_ideal(q, {{6, 1}}), InvalidInput);
}

TEST_CASE("ideal enumeration matches a subset search") {
    for (int s = 1; s <= 14; ++s)
        for (int k = 1; k <= 6; ++k) {
            const CorePoset p = build_core_poset(s, k);
            if (p.elements().size() > 16) continue;
            const auto expect = brute_ideals(p);
            std::set<std::vector<int>> got;
            for (const CoreIdeal& i : enumerate_ideals(p)) got.insert(i.members);
            REQUIRE(got == expect);
            REQUIRE(enumerate_ideals(p).size() == expect.size());
            std::set<std::vector<int>> nice;
            for (const auto& m : expect)
                if (is_nice(s, k, m)) nice.insert(m);
            std::set<std::vector<int>> got_nice;
            for (const CoreIdeal& i : enumerate_nice_ideals(s, k)) got_nice.insert(i.members);
            REQUIRE(got_nice == nice);
            REQUIRE(count_nice_ideals(s, k) == nice.size());
        }
}

TEST_CASE("small ideal families") {
    CHECK(enumerate_ideals(build_planar_poset(4, 4)).size() == 4);
    CHECK(count_admissible_ideals(4, 4) == 4);
    CHECK(count_nice_ideals(4, 4) == 4);
    CHECK(enumerate_nice_ideals(2, 3).size() == 2);
}

TEST_CASE("admissible ideals correspond to nice ideals under chi") {
    for (int s = 1; s <= 12; ++s)
        for (int k = 1; k <= 4; ++k) {
            std::set<std::vector<PlanarPoint>> image;
            for (const CoreIdeal& i : enumerate_nice_ideals(s, k)) {
                const PlanarIdeal j = chi_image(i);
                REQUIRE(chi_preimage(j) == i);
                image.insert(j.members);
            }
            std::set<std::vector<PlanarPoint>> adm;
            for (const PlanarIdeal& j : enumerate_admissible_ideals(s, k)) adm.insert(j.members);
            REQUIRE(image == adm);
        }
}

TEST_CASE("enumeration cap raises Overflow") {
    EnumLimits tiny;
    tiny.cap = 5;
    CHECK_THROWS_AS(enumerate_ideals(build_core_poset(12, 1), tiny), Overflow);
    CHECK_THROWS_AS(count_nice_ideals(12, 1, tiny), Overflow);
}

TEST_CASE("identical planar posets") {
    CHECK(posets_equal(build_planar_poset(8, 4), build_planar_poset(9, 4)));
    CHECK_FALSE(posets_equal(build_planar_poset(8, 4), build_planar_poset(8, 2)));
    CHECK(posets_equal(build_planar_poset(4, 4), build_planar_poset(4, 4)));
    for (int m = 1; m <= 8; ++m)
        for (int k = 1; k <= 4; ++k)
            REQUIRE(posets_equal(build_planar_poset(2 * m, 2 * k), build_planar_poset(2 * m + 1, 2 * k)));
}

TEST_CASE("restricted ideals are the admissible ideals one size down") {
    for (int m = 0; m <= 5; ++m)
        for (int k = 0; k <= 3; ++k) {
            std::set<std::vector<PlanarPoint>> restricted;
            for (const PlanarIdeal& i : enumerate_restricted_ideals(m, k)) {
                REQUIRE_FALSE(i.contains({2 * m + 2, 0}));
                restricted.insert(i.members);
            }
            std::set<std::vector<PlanarPoint>> filtered;
            for (const PlanarIdeal& i : enumerate_admissible_ideals(2 * m + 2, 2 * k + 1))
                if (!i.contains({2 * m + 2, 0})) filtered.insert(i.members);
            REQUIRE(restricted == filtered);
            std::set<std::vector<PlanarPoint>> full;
            for (const PlanarIdeal& i : enumerate_admissible_ideals(2 * m + 1, 2 * k + 1)) full.insert(i.members);
            REQUIRE(restricted == full);
        }
}

}
