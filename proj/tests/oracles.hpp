#pragma once

// Test-only reference implementations, kept deliberately naive and
// independent of the library's matching-based verifier.

#include <vector>

#include "ksrd/graph.hpp"
#include "ksrd/labeling.hpp"
#include "ksrd/random_graph.hpp"

namespace ksrd::testing {

// Tries to give every vertex of B a distinct capacity unit of an adjacent
// defender by plain backtracking.
inline bool backtrack_assign(const Graph& g, const Labeling& f,
                             const std::vector<int>& B, size_t idx,
                             std::vector<int>& used) {
  if (idx == B.size()) return true;
  for (int u : g.neighbors(B[idx])) {
    if (f.label(u) < 2) continue;
    if (used[u] >= f.label(u) - 1) continue;
    ++used[u];
    if (backtrack_assign(g, f, B, idx + 1, used)) {
      --used[u];
      return true;
    }
    --used[u];
  }
  return false;
}

// Checks every subset of the zero set of every size 1..k.
inline bool naive_is_proper(const Graph& g, const Labeling& f) {
  std::vector<int> zeros = f.level_set(0);
  const int m = static_cast<int>(zeros.size());
  const int kmax = std::min(f.k(), m);
  std::vector<int> chosen;
  std::vector<int> used(g.vertex_count(), 0);

  auto subsets = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) return backtrack_assign(g, f, chosen, 0, used);
    for (int i = start; i <= m - remaining; ++i) {
      chosen.push_back(zeros[i]);
      if (!self(self, i + 1, remaining - 1)) return false;
      chosen.pop_back();
    }
    return true;
  };

  for (int s = 1; s <= kmax; ++s) {
    chosen.clear();
    if (!subsets(subsets, 0, s)) return false;
  }
  return true;
}

// Random labeling biased toward zeros; stays inside the alphabet for
// the given k.
inline std::vector<int> random_labels(const Graph& g, int k, SplitMix64& rng,
                                      int zero_pct = 55) {
  const int max_label = std::min(g.max_degree(), k) + 1;
  std::vector<int> labels(g.vertex_count());
  for (auto& x : labels) {
    if (static_cast<int>(rng.below(100)) < zero_pct)
      x = 0;
    else
      x = 1 + static_cast<int>(rng.below(max_label));
  }
  return labels;
}

}  // namespace ksrd::testing
