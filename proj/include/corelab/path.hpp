#pragma once

#include "corelab/deadline.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corelab {

/// One step: Up, Down or a horizontal step of length len (in real units).
struct Step {
    enum class Kind { Up, Down, Horiz };

    Kind kind = Kind::Up;
    int len = 0;

    static Step up() { return {Kind::Up, 0}; }
    static Step down() { return {Kind::Down, 0}; }
    /// Throws InvalidInput for len < 1.
    static Step horiz(int len);

    bool is_up() const noexcept { return kind == Kind::Up; }
    bool is_down() const noexcept { return kind == Kind::Down; }
    bool is_horiz() const noexcept { return kind == Kind::Horiz; }
    /// +1, -1 or 0.
    int rise() const noexcept;
    /// Sort key: U < D < H1 < H2 < ...
    int code() const noexcept { return kind == Kind::Up ? 0 : kind == Kind::Down ? 1 : 1 + len; }

    bool operator==(const Step& o) const noexcept { return code() == o.code(); }
    auto operator<=>(const Step& o) const noexcept { return code() <=> o.code(); }
};

/// A word of steps; U and D are kparam half-units wide, H(l) is 2l half-units wide.
struct PathWord {
    std::vector<Step> steps;
    int kparam = 1;

    std::size_t size() const noexcept { return steps.size(); }
    bool empty() const noexcept { return steps.empty(); }

    bool operator==(const PathWord&) const = default;
    /// Lexicographic on steps; kparam breaks ties.
    bool operator<(const PathWord& o) const;
};

struct Profile {
    int width2 = 0;
    int final_height = 0;
    int min_height = 0;

    bool operator==(const Profile&) const = default;
};

/// Width in half-units of one step under kparam.
int step_width(const Step& st, int kparam);
Profile profile(const PathWord& w);
/// Heights after 0, 1, ..., n steps.
std::vector<int> heights(const PathWord& w);
int final_height(const PathWord& w);

/// Shape constraints shared by ballot, free, Dyck and FB' families.
struct FamilySpec {
    int width2 = 0;
    int kparam = 1;
    /// Required final height; nullopt accepts any.
    std::optional<int> height;
    bool ballot = false;
    /// First step must be horizontal or down.
    bool restricted_start = false;

    static FamilySpec dyck(int s, int k);
    static FamilySpec ballot_any(int width2, int kparam);
    static FamilySpec free(int width2, int kparam, int height);
    static FamilySpec fb_prime(int width2, int kparam, int height);
};

bool matches(const PathWord& w, const FamilySpec& f);

PathWord complement(const PathWord& w);
PathWord reverse_complement(const PathWord& w);
bool is_symmetric(const PathWord& w);

/// Concatenation; both words must share kparam.
PathWord concat(const PathWord& a, const PathWord& b);
PathWord slice(const PathWord& w, std::size_t from, std::size_t to);

/// Every word of the family exactly once, sorted with U < D < H1 < H2 < ...
std::vector<PathWord> enumerate(const FamilySpec& f, const EnumLimits& limits = {});
/// Streams the same words as enumerate without collecting them.
void for_each_word(const FamilySpec& f, const std::function<void(const PathWord&)>& visit,
                   const EnumLimits& limits = {});
/// Counted by dynamic programming; throws Overflow if the count leaves 64 bits.
std::uint64_t count(const FamilySpec& f);

/// Symmetric Dyck words of width s (real units) with step parameter k, sorted.
std::vector<PathWord> enumerate_symmetric_dyck(int s, int k, const EnumLimits& limits = {});
std::uint64_t count_symmetric_dyck(int s, int k);

std::uint64_t motzkin(int n);

/// Whitespace-separated tokens U, D, H<l>.
PathWord parse_word(std::string_view text, int kparam);
std::string to_string(const PathWord& w);
std::string to_string(const Step& st);

} // namespace corelab
