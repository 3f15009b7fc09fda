#pragma once

#include "corelab/deadline.hpp"
#include "corelab/partition.hpp"

#include <cstdint>
#include <vector>

namespace corelab {

/// Diagonal-hook set seen through residues mod 2s: one chain r, r+2s, ..., r+2s(c-1) per used residue pair.
struct ChainSpec {
    struct Chain {
        int residue = 0;
        int length = 0;

        bool operator==(const Chain&) const = default;
    };

    int s = 0;
    /// Sorted by residue.
    std::vector<Chain> chains;

    int longest() const noexcept;
    OddHookSet expand() const;

    bool operator==(const ChainSpec&) const = default;
};

/// Throws InvalidInput if the hooks do not have the chain shape forced by being an s-core.
ChainSpec decode_chains(int s, const OddHookSet& hooks);

/// max(4, ceil(s/k) + 2)
int default_cap(int s, int k);

/// Self-conjugate (s, s+1, ..., s+k)-cores whose diagonal hooks have every chain no longer than cap.
/// Sorted by size, then parts descending.
std::vector<Partition> enumerate_sc_cores(int s, int k, int cap, const Deadline& deadline = {});

struct OracleOptions {
    /// 0 picks default_cap.
    int initial_cap = 0;
    /// 0 picks max(s, initial cap).
    int ceiling = 0;
    Deadline deadline{};
};

struct OracleRun {
    std::vector<Partition> cores;
    /// Smallest cap whose output matched the next cap's.
    int cap = 0;
    int escalations = 0;
};

/// Raises the cap until two consecutive caps agree; throws CapInstability past the ceiling.
OracleRun enumerate_sc_cores_stable(int s, int k, const OracleOptions& options = {});

/// Binomial C(n, r), exact; throws Overflow past 64 bits.
std::uint64_t binomial(int n, int r);
/// Number of self-conjugate (s, t)-cores for coprime s, t.
std::uint64_t fms_pair_count(int s, int t);
/// Sum over i of C(floor(s/2), i) * C(i, floor(i/2)).
std::uint64_t chs_count(int s);

} // namespace corelab
