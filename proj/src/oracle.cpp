#include "corelab/oracle.hpp"

#include "corelab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace corelab {

namespace {

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

} // namespace

int ChainSpec::longest() const noexcept {
    int best = 0;
    for (const Chain& c : chains) best = std::max(best, c.length);
    return best;
}

OddHookSet ChainSpec::expand() const {
    std::vector<int> values;
    for (const Chain& c : chains)
        for (int j = 0; j < c.length; ++j) values.push_back(c.residue + 2 * s * j);
    return OddHookSet(std::move(values));
}

ChainSpec decode_chains(int s, const OddHookSet& hooks) {
    if (s < 1) throw InvalidInput("decode_chains needs s >= 1");
    std::map<int, int> per_residue;
    for (int h : hooks.values()) ++per_residue[h % (2 * s)];
    ChainSpec spec{s, {}};
    for (const auto& [r, len] : per_residue) {
        if (2 * r == 2 * s) throw InvalidInput("hook set contains a multiple of s");
        if (per_residue.count(2 * s - r)) throw InvalidInput("hook set uses both residues of a pair mod 2s");
        for (int j = 0; j < len; ++j)
            if (!hooks.contains(r + 2 * s * j)) throw InvalidInput("hooks in a residue class do not form a chain");
        spec.chains.push_back({r, len});
    }
    return spec;
}

int default_cap(int s, int k) {
    if (s < 1 || k < 1) throw InvalidInput("default_cap needs s >= 1 and k >= 1");
    return std::max(4, (s + k - 1) / k + 2);
}

std::vector<Partition> enumerate_sc_cores(int s, int k, int cap, const Deadline& deadline) {
    if (s < 2 || k < 1 || cap < 1)
        throw InvalidInput("oracle needs s >= 2, k >= 1, cap >= 1; got s=" + std::to_string(s) +
                           " k=" + std::to_string(k) + " cap=" + std::to_string(cap));
    // Candidate hooks: odd h < 2s*cap, so every residue chain has length <= cap.
    const int top = 2 * s * cap - 1;
    std::vector<char> in(static_cast<std::size_t>(top + 1), 0);
    std::vector<int> chosen;
    std::vector<Partition> out;
    std::size_t nodes = 0;

    auto allowed = [&](int h) {
        for (int t = s; t <= s + k; ++t) {
            if (h > 2 * t && !in[static_cast<std::size_t>(h - 2 * t)]) return false;
            if ((2 * h) % (2 * t) == 0) return false;
            for (int g : chosen)
                if ((g + h) % (2 * t) == 0) return false;
        }
        return true;
    };

    auto go = [&](auto&& self, int h) -> void {
        if ((++nodes & 0x3FF) == 0) deadline.check();
        if (h > top) {
            const OddHookSet hooks(chosen);
            Partition p = from_diagonal_hooks(hooks);
            if (!is_self_conjugate(p) || !is_consecutive_core(p, s, k))
                throw InternalError("hook conditions accepted a non-core: diagonal hooks sum " +
                                    std::to_string(hooks.sum()));
            if (decode_chains(s, hooks).longest() > cap) throw InternalError("oracle exceeded its chain cap");
            out.push_back(std::move(p));
            return;
        }
        self(self, h + 2);
        if (allowed(h)) {
            in[static_cast<std::size_t>(h)] = 1;
            chosen.push_back(h);
            self(self, h + 2);
            chosen.pop_back();
            in[static_cast<std::size_t>(h)] = 0;
        }
    };
    go(go, 1);

    std::sort(out.begin(), out.end(), canonical_less);
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw InternalError("oracle produced a duplicate partition");
    return out;
}

OracleRun enumerate_sc_cores_stable(int s, int k, const OracleOptions& options) {
    const int first = options.initial_cap > 0 ? options.initial_cap : default_cap(s, k);
    const int ceiling = options.ceiling > 0 ? options.ceiling : std::max(s, first);
    OracleRun run;
    run.cap = first;
    run.cores = enumerate_sc_cores(s, k, run.cap, options.deadline);
    for (;;) {
        auto next = enumerate_sc_cores(s, k, run.cap + 1, options.deadline);
        if (next == run.cores) return run;
        if (run.cap + 1 > ceiling)
            throw CapInstability("oracle output changed between caps " + std::to_string(run.cap) + " and " +
                                 std::to_string(run.cap + 1) + " at s=" + std::to_string(s) + " k=" +
                                 std::to_string(k) + "; escalation would pass the ceiling " +
                                 std::to_string(ceiling));
        ++run.cap;
        ++run.escalations;
        run.cores = std::move(next);
    }
}

std::uint64_t binomial(int n, int r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (int i = 1; i <= r; ++i) {
        const std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
        const std::uint64_t g = std::gcd(acc, static_cast<std::uint64_t>(i));
        const std::uint64_t den = static_cast<std::uint64_t>(i) / g;
        if (__builtin_mul_overflow(acc / g, num / den, &acc)) throw Overflow("binomial exceeds 64 bits");
    }
    return acc;
}

std::uint64_t fms_pair_count(int s, int t) {
    if (s < 1 || t < 1 || std::gcd(s, t) != 1)
        throw InvalidInput("pair count needs coprime positive s and t, got " + std::to_string(s) + "," +
                           std::to_string(t));
    return binomial(s / 2 + t / 2, s / 2);
}

std::uint64_t chs_count(int s) {
    if (s < 0) throw InvalidInput("chs_count needs s >= 0");
    std::uint64_t total = 0;
    for (int i = 0; i <= s / 2; ++i) total += binomial(s / 2, i) * binomial(i, i / 2);
    return total;
}

} // namespace corelab
