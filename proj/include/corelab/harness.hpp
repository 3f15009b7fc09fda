#pragma once

#include "corelab/deadline.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace corelab {

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Failure message or counterexample; empty on success.
    std::string detail;
};

enum class Suite { Equinumerosity, Roundtrip, Structure, Golden };

/// Parses equinumerosity|roundtrip|structure|golden|all.
std::vector<Suite> parse_suites(const std::string& name);

struct CellReport {
    int s = 0;
    int k = 0;
    std::optional<std::uint64_t> sc_cores;
    std::optional<std::uint64_t> nice_ideals;
    std::optional<std::uint64_t> admissible_ideals;
    std::optional<std::uint64_t> sym_dyck;
    /// Cap the oracle settled on.
    int oracle_cap = 0;
    bool pass = false;
    /// The time budget ran out; a skipped cell never passes.
    bool skipped = false;
    long long millis = 0;
    std::vector<CheckResult> checks;
    /// First unmatched object in the shared JSON forms, or null.
    nlohmann::json counterexample;
};

struct SweepConfig {
    int s_lo = 2;
    int s_hi = 2;
    int k_lo = 1;
    int k_hi = 1;
    double budget_secs = 60.0;
    std::vector<Suite> suites{Suite::Equinumerosity};
    unsigned threads = 0;

    /// Throws InvalidInput on empty ranges or a non-positive budget.
    void validate() const;
};

struct VerificationReport {
    /// Ordered by (s, k).
    std::vector<CellReport> cells;
    /// Results that do not belong to one cell (golden fixtures).
    std::vector<CheckResult> global;

    bool pass() const;
};

/// Four counts plus the set-level match of diagonal-hook sets and nice ideals.
CellReport verify_equinumerosity(int s, int k, const Deadline& deadline = {});
/// Exhaustive forward and backward round-trips of every map enumerable at (s, k).
std::vector<CheckResult> verify_roundtrips(int s, int k, const Deadline& deadline = {});
/// Poset-level identities for (s, k).
std::vector<CheckResult> verify_structure(int s, int k, const Deadline& deadline = {});
/// Fixed small cases and worked examples.
std::vector<CheckResult> golden_checks();

/// Runs the configured suites over every cell on a worker pool.
VerificationReport run_sweep(const SweepConfig& config);

/// CSV (s,k,sc_cores,nice_ideals,admissible_ideals,sym_dyck,pass,millis) or JSON.
/// With stable set, millis is written as 0 so output is byte-identical across runs.
std::string emit_table(const VerificationReport& report, const std::string& format, bool stable);

enum class PosetKind { Core, Planar };
/// Graphviz digraph with edges from covered to covering element.
std::string emit_hasse(int s, int k, PosetKind kind);

// Individual structural checks; each returns a failure description or nullopt.
std::optional<std::string> check_planar_identity(int m, int k);
std::optional<std::string> check_restricted_identity(int m, int k);
std::optional<std::string> check_left_right_closure(int s, int k);
std::optional<std::string> check_chi_isomorphism(int s, int k);
std::optional<std::string> check_cover_counts(int s, int k);
std::optional<std::string> check_chi_transport(int s, int k, const Deadline& deadline = {});
std::optional<std::string> check_xi_count(int m, int k);
/// Diagonal-hook sets of the oracle's cores equal the nice ideals of P(s, k) as sets.
std::optional<std::string> check_hooks_are_nice_ideals(int s, int k, const Deadline& deadline = {});

} // namespace corelab
