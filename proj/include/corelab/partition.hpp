#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

namespace corelab {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// |λ|
    long long size() const noexcept;
    /// λ_i with 1-based row index; 0 past the last part.
    int row(int i) const noexcept;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Distinct positive odd integers, kept sorted in descending order.
class OddHookSet {
public:
    OddHookSet() = default;
    /// Throws InvalidInput on an even, non-positive or repeated value.
    explicit OddHookSet(std::vector<int> values);
    OddHookSet(std::initializer_list<int> values) : OddHookSet(std::vector<int>(values)) {}

    const std::vector<int>& values() const noexcept { return values_; }
    bool empty() const noexcept { return values_.empty(); }
    int count() const noexcept { return static_cast<int>(values_.size()); }
    bool contains(int h) const noexcept;
    long long sum() const noexcept;
    /// Values in ascending order.
    std::vector<int> ascending() const;

    auto operator<=>(const OddHookSet&) const = default;

private:
    std::vector<int> values_;
};

/// rows[i][j] is the hook length of cell (i+1, j+1).
struct HookGrid {
    std::vector<std::vector<int>> rows;

    bool operator==(const HookGrid&) const = default;
};

Partition conjugate(const Partition& p);
HookGrid hook_grid(const Partition& p);
bool is_self_conjugate(const Partition& p);

/// No hook length divisible by t. Throws InvalidInput for t < 1.
bool is_t_core(const Partition& p, int t);
/// Conjunction of is_t_core over every modulus.
bool is_simultaneous_core(const Partition& p, std::span<const int> moduli);
/// t-core for every t in [s, s+k].
bool is_consecutive_core(const Partition& p, int s, int k);

/// Main-diagonal hook lengths; rejects non-self-conjugate input.
OddHookSet diagonal_hooks(const Partition& p);
/// The self-conjugate partition whose diagonal hooks are exactly `hooks`.
Partition from_diagonal_hooks(const OddHookSet& hooks);

/// Every partition of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// Every self-conjugate partition with |λ| ≤ max_size.
std::vector<Partition> self_conjugate_up_to(int max_size);

} // namespace corelab
