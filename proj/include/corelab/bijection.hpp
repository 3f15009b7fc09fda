#pragma once

#include "corelab/partition.hpp"
#include "corelab/path.hpp"
#include "corelab/poset.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace corelab {

/// Splits a height-0 free word at its leftmost lowest point and swaps the halves.
PathWord alpha(const PathWord& w);
PathWord alpha_inv(const PathWord& w);
/// Splits a height -1 free word at its rightmost point on the axis.
PathWord beta(const PathWord& w);
PathWord beta_inv(const PathWord& w);

/// Greedy lattice walks from ideals to words and their recoloring inverses.
/// phi: ideals of P'(2m, 2k) -> Q(m, k), U/D width 2k half-units.
PathWord phi(int m, int k, const PlanarIdeal& ideal);
PlanarIdeal phi_inv(int m, int k, const PathWord& w);
/// psi: ideals of P'(2m, 2k+1) -> Q'(m, k), visible points only, U/D width 2k+1 half-units.
PathWord psi(int m, int k, const PlanarIdeal& ideal);
PlanarIdeal psi_inv(int m, int k, const PathWord& w);

enum class Walk { Phi, Psi };

/// Checks the recoloring rules against the forward coloring. Returns the first offending point.
std::optional<PlanarPoint> coloring_violation(Walk walk, int m, int k, const PlanarIdeal& ideal);

/// The word families the walks land in.
std::vector<PathWord> q_family(int m, int k, const EnumLimits& limits = {});
std::vector<PathWord> q_prime_family(int m, int k, const EnumLimits& limits = {});
/// Domain of eta at (m, k): the family Q*(m+1, k).
std::vector<PathWord> q_star_family(int m, int k, const EnumLimits& limits = {});
bool in_q_family(int m, int k, const PathWord& w);
bool in_q_prime_family(int m, int k, const PathWord& w);
bool in_q_star_family(int m, int k, const PathWord& w);

enum class CaseTag { I, II, III, IV, V, Origin };
std::string to_string(CaseTag tag);

enum class Fold { Delta, Gamma, Eta };

/// delta: Q(m,k) -> SD(2m, 2k); gamma: Q'(m,k) -> SD(2m, 2k+1); eta: Q*(m+1,k) -> SD(2m+1, 2k+1).
PathWord fold(Fold map, int m, int k, const PathWord& w);
PathWord unfold(Fold map, int m, int k, const PathWord& w);
/// Case chosen by the forward map for a domain word.
CaseTag fold_case(Fold map, int m, int k, const PathWord& w);
/// Case chosen by the inverse's central dispatch for a symmetric word.
CaseTag unfold_case(Fold map, int m, int k, const PathWord& w);
/// Every case whose shape the symmetric word fits, found by trying each parse independently.
std::set<CaseTag> matching_cases(Fold map, int m, int k, const PathWord& w);

inline PathWord delta(int m, int k, const PathWord& w) { return fold(Fold::Delta, m, k, w); }
inline PathWord delta_inv(int m, int k, const PathWord& w) { return unfold(Fold::Delta, m, k, w); }
inline PathWord gamma(int m, int k, const PathWord& w) { return fold(Fold::Gamma, m, k, w); }
inline PathWord gamma_inv(int m, int k, const PathWord& w) { return unfold(Fold::Gamma, m, k, w); }
inline PathWord eta(int m, int k, const PathWord& w) { return fold(Fold::Eta, m, k, w); }
inline PathWord eta_inv(int m, int k, const PathWord& w) { return unfold(Fold::Eta, m, k, w); }

/// Widens the middle horizontal of an even-width symmetric word by one unit.
PathWord xi(const PathWord& w);
PathWord xi_inv(const PathWord& w);

/// Admissible ideal of P'(s, k) to symmetric (s, k)-Dyck word, and back. Needs s >= 2.
PathWord ideal_to_path(int s, int k, const PlanarIdeal& ideal);
PlanarIdeal path_to_ideal(int s, int k, const PathWord& w);

/// The nice ideal of P(s, k) formed by the diagonal hooks of a self-conjugate core.
CoreIdeal core_to_ideal(int s, int k, const Partition& core);
Partition ideal_to_core(const CoreIdeal& ideal);

PathWord core_to_path(int s, int k, const Partition& core);
Partition path_to_core(int s, int k, const PathWord& w);

} // namespace corelab
