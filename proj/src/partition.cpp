#include "corelab/partition.hpp"

#include "corelab/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace corelab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw InvalidInput("partition parts must be positive, got " + std::to_string(parts_[i]));
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
    }
}

long long Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::row(int i) const noexcept {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

OddHookSet::OddHookSet(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_) {
        if (v < 1 || v % 2 == 0)
            throw InvalidInput("hook set values must be positive and odd, got " + std::to_string(v));
    }
    std::sort(values_.begin(), values_.end(), std::greater<>());
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
        throw InvalidInput("hook set values must be distinct");
}

bool OddHookSet::contains(int h) const noexcept {
    return std::binary_search(values_.begin(), values_.end(), h, std::greater<>());
}

long long OddHookSet::sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

std::vector<int> OddHookSet::ascending() const {
    return {values_.rbegin(), values_.rend()};
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

HookGrid hook_grid(const Partition& p) {
    const Partition c = conjugate(p);
    HookGrid g;
    g.rows.reserve(p.parts().size());
    for (int i = 1; i <= p.length(); ++i) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(p.row(i)));
        for (int j = 1; j <= p.row(i); ++j)
            row.push_back(p.row(i) - j + c.row(j) - i + 1);
        g.rows.push_back(std::move(row));
    }
    return g;
}

bool is_self_conjugate(const Partition& p) {
    return conjugate(p) == p;
}

bool is_t_core(const Partition& p, int t) {
    if (t < 1) throw InvalidInput("core modulus must be positive, got " + std::to_string(t));
    for (const auto& row : hook_grid(p).rows)
        for (int h : row)
            if (h % t == 0) return false;
    return true;
}

bool is_simultaneous_core(const Partition& p, std::span<const int> moduli) {
    for (int t : moduli)
        if (t < 1) throw InvalidInput("core modulus must be positive, got " + std::to_string(t));
    const HookGrid g = hook_grid(p);
    for (const auto& row : g.rows)
        for (int h : row)
            for (int t : moduli)
                if (h % t == 0) return false;
    return true;
}

bool is_consecutive_core(const Partition& p, int s, int k) {
    if (s < 1 || k < 0) throw InvalidInput("need s >= 1 and k >= 0");
    std::vector<int> moduli(static_cast<std::size_t>(k + 1));
    std::iota(moduli.begin(), moduli.end(), s);
    return is_simultaneous_core(p, moduli);
}

OddHookSet diagonal_hooks(const Partition& p) {
    if (!is_self_conjugate(p)) throw InvalidInput("diagonal hooks need a self-conjugate partition");
    std::vector<int> out;
    for (int i = 1; i <= p.length() && p.row(i) >= i; ++i)
        out.push_back(2 * (p.row(i) - i) + 1);
    return OddHookSet(std::move(out));
}

Partition from_diagonal_hooks(const OddHookSet& hooks) {
    // Frobenius coordinates with arm = leg.
    std::vector<int> arms;
    for (int h : hooks.values()) arms.push_back((h - 1) / 2);
    const int r = static_cast<int>(arms.size());
    if (r == 0) return {};
    std::vector<int> parts;
    for (int i = 1; i <= r; ++i) parts.push_back(arms[static_cast<std::size_t>(i - 1)] + i);
    const int depth = arms.front() + 1;
    for (int i = r + 1; i <= depth; ++i) {
        int len = 0;
        for (int j = 1; j <= r; ++j)
            if (arms[static_cast<std::size_t>(j - 1)] + j >= i) ++len;
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidInput("partitions_of needs n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            go(rest - p, p);
            cur.pop_back();
        }
    };
    go(n, n);
    return out;
}

std::vector<Partition> self_conjugate_up_to(int max_size) {
    if (max_size < 0) throw InvalidInput("self_conjugate_up_to needs a nonnegative bound");
    // Distinct odd parts <-> self-conjugate partitions of the same size.
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int next, int budget) {
        out.push_back(from_diagonal_hooks(OddHookSet(cur)));
        for (int h = next; h <= budget; h += 2) {
            cur.push_back(h);
            go(h + 2, budget - h);
            cur.pop_back();
        }
    };
    go(1, max_size);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() > b.parts();
    });
    return out;
}

} // namespace corelab
