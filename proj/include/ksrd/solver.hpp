#pragma once

#include <optional>

#include "ksrd/graph.hpp"
#include "ksrd/labeling.hpp"
#include "ksrd/verifier.hpp"

namespace ksrd {

struct SearchStats {
  long long nodes = 0;
  long long prunes = 0;
  double ms = 0.0;
};

/// Result of an exact search: the optimum value, one optimal labeling
/// (proper, with weight equal to gamma) and search statistics.
struct SolveResult {
  int gamma;
  Labeling optimal;
  SearchStats stats;
};

struct SolveOptions {
  long long node_budget = 50'000'000;
  long long verify_budget = kDefaultEnumerationBudget;
  /// Optional known-good labeling used to seed the incumbent (e.g. a
  /// closed-form construction). Must be proper; verified before use.
  std::optional<Labeling> warm_start;
};

/// Exact minimum defense weight by depth-first branch and bound.
///
/// Vertices are assigned in descending-degree order (ties by id) over the
/// alphabet {0..min(max_degree,k)+1}. Branches are cut when the partial
/// weight cannot beat the incumbent, when an already-surrounded zero
/// vertex has no defender, or when the pending zeros force more residual
/// weight than the incumbent allows. Complete leaves are validated with
/// is_proper. Search stops early once the incumbent meets the applicable
/// global lower bound (k+1 for k < n; ceil(2n/3) for cubic graphs at
/// k = 2). Throws budget_error carrying the best weight found when the
/// node budget runs out. Requires 1 <= k <= |V|.
SolveResult gamma_ksrd_exact(const Graph& g, int k,
                             const SolveOptions& options = {});

inline constexpr long long kDefaultBruteforceBudget = 100'000'000;

/// Reference oracle: enumerates every labeling in total-weight order
/// (weight 0, 1, 2, ...) and returns the weight of the first proper one,
/// which is optimal by construction. Independent of the branch-and-bound
/// path; intended for tests and small instances. `budget` caps the number
/// of labelings inspected. When `witness` is non-null it receives one
/// optimal labeling.
int gamma_ksrd_bruteforce(const Graph& g, int k,
                          long long budget = kDefaultBruteforceBudget,
                          std::optional<Labeling>* witness = nullptr);

/// Convention for the k-domination brute force. `standard` requires only
/// vertices outside D to have k neighbors in D; `verbatim` requires it of
/// every vertex (then instances with a vertex of degree < k are
/// infeasible and related_numbers throws std::domain_error).
enum class KDominationRule { standard, verbatim };

/// Exact optima of the companion domination problems, by exhaustive
/// search: the domination number, the k-domination number, and the Roman
/// k-domination number (labels {0,1,2}, every 0-vertex needs k neighbors
/// labeled 2).
struct RelatedNumbers {
  int gamma_dom;
  int gamma_k_dom;
  int gamma_kR;
};

RelatedNumbers related_numbers(const Graph& g, int k,
                               KDominationRule rule = KDominationRule::standard,
                               long long budget = kDefaultBruteforceBudget);

}  // namespace ksrd
