#include "corelab/error.hpp"
#include "corelab/oracle.hpp"
#include "corelab/path.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace corelab;

namespace {

// Every word over {U, D, H1..H(k-1)} of the given half-unit width, built without any pruning.
void all_words(int width2, int kparam, PathWord& cur, std::vector<PathWord>& out) {
    if (width2 == 0) {
        out.push_back(cur);
        return;
    }
    std::vector<Step> alphabet{Step::up(), Step::down()};
    for (int l = 1; l <= kparam - 1; ++l) alphabet.push_back(Step::horiz(l));
    for (const Step& st : alphabet) {
        const int w = st.is_horiz() ? 2 * st.len : kparam;
        if (w > width2) continue;
        cur.steps.push_back(st);
        all_words(width2 - w, kparam, cur, out);
        cur.steps.pop_back();
    }
}

std::vector<PathWord> naive(const FamilySpec& f) {
    std::vector<PathWord> all;
    PathWord cur{{}, f.kparam};
    all_words(f.width2, f.kparam, cur, all);
    std::vector<PathWord> out;
    for (const PathWord& w : all) {
        const auto hs = heights(w);
        const int lo = *std::min_element(hs.begin(), hs.end());
        if (f.height && hs.back() != *f.height) continue;
        if (f.ballot && lo < 0) continue;
        if (f.restricted_start && !w.empty() && w.steps.front().is_up()) continue;
        if (f.restricted_start && w.empty() && !(f.width2 == 0 && f.height.value_or(0) == 0)) continue;
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

} // namespace

TEST_SUITE("paths") {

TEST_CASE("steps") {
    CHECK_THROWS_AS(Step::horiz(0), InvalidInput);
    CHECK(Step::up().rise() == 1);
    CHECK(Step::down().rise() == -1);
    CHECK(Step::horiz(3).rise() == 0);
    CHECK(Step::up() < Step::down());
    CHECK(Step::down() < Step::horiz(1));
    CHECK(Step::horiz(1) < Step::horiz(2));
    CHECK(step_width(Step::up(), 3) == 3);
    CHECK(step_width(Step::horiz(2), 3) == 4);
}

TEST_CASE("parse and print") {
    const PathWord w = parse_word("H1 U D D H2 H2", 4);
    CHECK(w.size() == 6);
    CHECK(to_string(w) == "H1 U D D H2 H2");
    CHECK(parse_word("", 2).empty());
    CHECK_THROWS_AS(parse_word("X", 2), InvalidInput);
    CHECK_THROWS_AS(parse_word("H0", 2), InvalidInput);
    CHECK_THROWS_AS(parse_word("H", 2), InvalidInput);
}

TEST_CASE("profile and heights") {
    const PathWord w = parse_word("H1 U D D H2 H2", 4);
    CHECK(heights(w) == std::vector<int>{0, 0, 1, 0, -1, -1, -1});
    CHECK(profile(w) == Profile{22, -1, -1});
    CHECK(final_height(w) == -1);
}

TEST_CASE("complement and symmetry") {
    const PathWord w = parse_word("U H1 D D", 2);
    CHECK(to_string(complement(w)) == "D H1 U U");
    CHECK(to_string(reverse_complement(w)) == "U U H1 D");
    CHECK(is_symmetric(parse_word("U H1 D", 2)));
    CHECK_FALSE(is_symmetric(parse_word("U U D D H1", 2)));
    CHECK(to_string(concat(parse_word("U", 2), parse_word("D", 2))) == "U D");
    CHECK(to_string(slice(w, 1, 3)) == "H1 D");
}

TEST_CASE("membership") {
    CHECK(matches(parse_word("H1 H1 H1 H1", 4), FamilySpec::dyck(4, 4)));
    CHECK(matches(parse_word("U D", 4), FamilySpec::dyck(4, 4)));
    CHECK_FALSE(matches(parse_word("D U", 4), FamilySpec::dyck(4, 4)));
    CHECK_FALSE(matches(parse_word("H4", 4), FamilySpec::dyck(4, 4)));
    CHECK_FALSE(matches(parse_word("U D", 3), FamilySpec::dyck(4, 4)));
    CHECK(matches(parse_word("D U", 2), FamilySpec::free(4, 2, 0)));
    CHECK_FALSE(matches(parse_word("U D", 2), FamilySpec::fb_prime(4, 2, 0)));
    CHECK(matches(PathWord{{}, 2}, FamilySpec::fb_prime(0, 2, 0)));
}

TEST_CASE("enumeration agrees with an unpruned search") {
    for (int k = 1; k <= 5; ++k)
        for (int w2 = 0; w2 <= 16; ++w2) {
            std::vector<FamilySpec> specs{FamilySpec::ballot_any(w2, k)};
            for (int h = -3; h <= 3; ++h) {
                specs.push_back(FamilySpec::free(w2, k, h));
                specs.push_back(FamilySpec::fb_prime(w2, k, h));
            }
            if (w2 % 2 == 0) specs.push_back(FamilySpec::dyck(w2 / 2, k));
            for (const FamilySpec& f : specs) {
                const auto expect = naive(f);
                auto got = enumerate(f);
                std::sort(got.begin(), got.end());
                REQUIRE(got == expect);
                REQUIRE(count(f) == expect.size());
            }
        }
}

TEST_CASE("enumeration respects the cap") {
    EnumLimits tiny;
    tiny.cap = 3;
    CHECK_THROWS_AS(enumerate(FamilySpec::dyck(10, 2), tiny), Overflow);
}

TEST_CASE("symmetric Dyck words are exactly the symmetric Dyck members") {
    for (int s = 1; s <= 9; ++s)
        for (int k = 1; k <= 5; ++k) {
            std::vector<PathWord> expect;
            for (const PathWord& w : naive(FamilySpec::dyck(s, k)))
                if (is_symmetric(w)) expect.push_back(w);
            const auto got = enumerate_symmetric_dyck(s, k);
            REQUIRE(std::is_sorted(got.begin(), got.end()));
            REQUIRE(got == expect);
            REQUIRE(count_symmetric_dyck(s, k) == expect.size());
        }
}

TEST_CASE("Dyck counts at k = 1 are Catalan numbers") {
    for (int n = 0; n <= 12; ++n) CHECK(count(FamilySpec::dyck(n, 1)) == catalan(n));
}

TEST_CASE("Dyck counts at k = 2 are Motzkin numbers") {
    CHECK(motzkin(4) == 9);
    const std::vector<std::uint64_t> known{1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634};
    for (int n = 0; n <= 14; ++n) {
        CHECK(motzkin(n) == known[static_cast<std::size_t>(n)]);
        CHECK(count(FamilySpec::dyck(n, 2)) == motzkin(n));
    }
    CHECK_THROWS_AS(motzkin(-1), InvalidInput);
}

TEST_CASE("symmetric Dyck counts at k = 2 match the symmetric Motzkin sum") {
    CHECK(count_symmetric_dyck(4, 2) == 5);
    CHECK(count_symmetric_dyck(6, 2) == 13);
    for (int s = 1; s <= 14; ++s) CHECK(count_symmetric_dyck(s, 2) == chs_count(s));
}

TEST_CASE("symmetric words are invariant under reverse-complement") {
    for (int s = 1; s <= 10; ++s)
        for (int k = 1; k <= 4; ++k)
            for (const PathWord& w : enumerate_symmetric_dyck(s, k)) {
                REQUIRE(reverse_complement(w) == w);
                const auto hs = heights(w);
                for (std::size_t i = 0; i < hs.size(); ++i) REQUIRE(hs[i] == hs[hs.size() - 1 - i]);
            }
}

TEST_CASE("streaming visits the same words as enumeration") {
    const FamilySpec f = FamilySpec::free(12, 3, 0);
    std::vector<PathWord> seen;
    for_each_word(f, [&](const PathWord& w) { seen.push_back(w); });
    auto listed = enumerate(f);
    std::sort(seen.begin(), seen.end());
    std::sort(listed.begin(), listed.end());
    CHECK(seen == listed);
}

}
