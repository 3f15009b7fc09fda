#pragma once

#include "corelab/deadline.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace corelab {

enum class Side { Left, Right };

/// Membership in the left family {2i-1+2sj : jk+1 <= i <= floor(s/2)}, for any integer x.
bool in_left_family(int s, int k, int x);
/// Membership in the right family {2i-1+2sj : jk+ceil((s+k)/2)+1 <= i <= s}.
bool in_right_family(int s, int k, int x);

/// Odd-integer poset: x < y generated by y = x + 2s + 2t, 0 <= t <= k, same side.
class CorePoset {
public:
    int s() const noexcept { return s_; }
    int k() const noexcept { return k_; }
    /// Ascending.
    const std::vector<int>& elements() const noexcept { return elements_; }
    bool contains(int x) const;
    Side side(int x) const;
    int rank(int x) const;
    /// Elements covered by x, ascending.
    const std::vector<int>& lower_covers(int x) const;
    /// All (lower, upper) cover pairs, sorted.
    std::vector<std::pair<int, int>> cover_pairs() const;
    int max_element() const;

    friend CorePoset build_core_poset(int s, int k);

private:
    struct Info {
        Side side;
        int rank;
        std::vector<int> lower;
    };
    const Info& info(int x) const;

    int s_ = 0;
    int k_ = 0;
    std::vector<int> elements_;
    std::map<int, Info> info_;
};

/// Grid point with doubled abscissa: the real point is (a2 / 2, b).
struct PlanarPoint {
    int a2 = 0;
    int b = 0;

    auto operator<=>(const PlanarPoint&) const = default;
};

/// Planar poset on grid points; left points have b >= 0, right points b <= -1.
class PlanarPoset {
public:
    int s() const noexcept { return s_; }
    int k() const noexcept { return k_; }
    /// Sorted by (a2, b).
    const std::vector<PlanarPoint>& elements() const noexcept { return elements_; }
    bool contains(PlanarPoint p) const;
    Side side(PlanarPoint p) const;
    /// b on the left, -b-1 on the right.
    int rank(PlanarPoint p) const;
    const std::vector<PlanarPoint>& lower_covers(PlanarPoint p) const;
    std::vector<std::pair<PlanarPoint, PlanarPoint>> cover_pairs() const;

    friend PlanarPoset build_planar_poset(int s, int k);

private:
    struct Info {
        Side side;
        std::vector<PlanarPoint> lower;
    };
    const Info& info(PlanarPoint p) const;

    int s_ = 0;
    int k_ = 0;
    std::vector<PlanarPoint> elements_;
    std::map<PlanarPoint, Info> info_;
};

/// Throws InvalidInput unless s >= 1 and k >= 1.
CorePoset build_core_poset(int s, int k);
PlanarPoset build_planar_poset(int s, int k);

/// Same element sets and same cover relations; the (s, k) labels are ignored.
bool posets_equal(const PlanarPoset& a, const PlanarPoset& b);

PlanarPoint chi(int s, int k, int x);
int chi_inv(int s, int k, PlanarPoint p);

struct CoreIdeal {
    int s = 0;
    int k = 0;
    /// Ascending.
    std::vector<int> members;

    bool operator==(const CoreIdeal&) const = default;
};

struct PlanarIdeal {
    int s = 0;
    int k = 0;
    /// Sorted by (a2, b).
    std::vector<PlanarPoint> members;

    bool contains(PlanarPoint p) const;
    bool operator==(const PlanarIdeal&) const = default;
};

/// Sorts members and checks they belong to the poset and are down-closed.
CoreIdeal make_ideal(const CorePoset& poset, std::vector<int> members);
PlanarIdeal make_ideal(const PlanarPoset& poset, std::vector<PlanarPoint> members);

bool is_down_closed(const CorePoset& poset, const std::vector<int>& members);
bool is_down_closed(const PlanarPoset& poset, const std::vector<PlanarPoint>& members);

/// No two members (repetition allowed) sum into {2s, 2s+2, ..., 2s+2k}.
bool is_nice(int s, int k, const std::vector<int>& members);
/// No (a,0) and (a',-1) members with |a2 - a2'| <= k.
bool is_admissible(int k, const std::vector<PlanarPoint>& members);

PlanarIdeal chi_image(const CoreIdeal& ideal);
CoreIdeal chi_preimage(const PlanarIdeal& ideal);

/// Every order ideal, in the order of an exclude-first walk along a rank-major linear extension.
std::vector<CoreIdeal> enumerate_ideals(const CorePoset& poset, const EnumLimits& limits = {});
std::vector<PlanarIdeal> enumerate_ideals(const PlanarPoset& poset, const EnumLimits& limits = {});
std::vector<CoreIdeal> enumerate_nice_ideals(int s, int k, const EnumLimits& limits = {});
std::vector<PlanarIdeal> enumerate_admissible_ideals(int s, int k, const EnumLimits& limits = {});
/// Admissible ideals of P'(2m+2, 2k+1) that avoid the point (m+1, 0).
std::vector<PlanarIdeal> enumerate_restricted_ideals(int m, int k, const EnumLimits& limits = {});

/// Streams every order ideal (ascending members) without collecting them.
void for_each_ideal(const CorePoset& poset, const std::function<void(const std::vector<int>&)>& visit,
                    const EnumLimits& limits = {});

std::uint64_t count_nice_ideals(int s, int k, const EnumLimits& limits = {});
std::uint64_t count_admissible_ideals(int s, int k, const EnumLimits& limits = {});

} // namespace corelab
