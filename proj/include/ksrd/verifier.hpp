#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ksrd/graph.hpp"
#include "ksrd/labeling.hpp"

namespace ksrd {

/// A set of 1..k distinct vertices under simultaneous attack.
struct AttackPattern {
  std::vector<int> vertices;  // sorted, unique
};

/// Validates ids, uniqueness and 1 <= size <= k.
AttackPattern make_pattern(const Graph& g, std::vector<int> vertices, int k);

/// One defender per attacked zero-labeled vertex. Every defender u has
/// label >= 2, is adjacent to its charge, and appears at most
/// label(u) - 1 times.
struct DefenseAssignment {
  std::vector<std::pair<int, int>> pairs;  // (attacked vertex, defender)
};

/// Outcome of checking one attack pattern. When infeasible,
/// deficient_set is a subset S of the attacked zeros whose adjacent
/// defenders have total spare capacity below |S| (a Hall-style
/// certificate); no assignment can cover it.
struct DefenseCheck {
  bool feasible = false;
  DefenseAssignment assignment;    // meaningful iff feasible
  std::vector<int> deficient_set;  // meaningful iff !feasible
};

/// Decides whether the attacked zero-labeled vertices can be covered by
/// adjacent defenders within their capacities. Attacked vertices with a
/// positive label protect themselves and place no demand. Runs a
/// deterministic augmenting-path search, so identical inputs yield
/// identical assignments and certificates.
DefenseCheck defendable(const Graph& g, const Labeling& f,
                        const AttackPattern& pattern);

/// Verdict of the full properness check.
struct Verdict {
  bool proper = false;
  std::optional<AttackPattern> witness;          // present iff improper
  std::optional<std::vector<int>> deficiency_set;  // present iff improper
  long long patterns_checked = 0;
};

inline constexpr long long kDefaultEnumerationBudget = 5'000'000;

/// Sentinel returned by min_capacity_slack when no zero vertex exists.
inline constexpr int kInfiniteSlack = 2147483647;

/// Decides whether f defends every attack pattern of size k.
///
/// Only maximal subsets of the zero set need checking (covering a set
/// covers all of its subsets), so exactly the size-min(k, |V_0|) subsets
/// are enumerated in lexicographic order, stopping at the first failure.
/// The witness pattern is the deficient set padded to size k with the
/// lowest ids outside it. Throws budget_error once `budget` subsets have
/// been inspected without a verdict; never returns a wrong one.
/// Requires |V| >= k.
Verdict is_proper(const Graph& g, const Labeling& f,
                  long long budget = kDefaultEnumerationBudget);

/// Diagnostic: minimum over all nonempty S subseteq V_0 with |S| <= k of
///   sum_{u in N(S), f(u) >= 2} (f(u) - 1)  -  |S|.
/// Nonnegative iff f is proper. Returns kInfiniteSlack when V_0 is empty.
int min_capacity_slack(const Graph& g, const Labeling& f,
                       long long budget = kDefaultEnumerationBudget);

}  // namespace ksrd
