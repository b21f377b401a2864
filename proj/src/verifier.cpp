#include "ksrd/verifier.hpp"

#include <algorithm>
#include <set>

#include "ksrd/errors.hpp"

namespace ksrd {

namespace {

void require_compatible(const Graph& g, const Labeling& f) {
  if (f.size() != g.vertex_count())
    throw std::invalid_argument("labeling has " + std::to_string(f.size()) +
                                " entries but graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
}

// Capacitated bipartite matcher between attacked zeros and adjacent
// defenders. Each defender u with f(u) >= 2 is expanded into f(u) - 1
// unit slots; a classic augmenting-path search then decides
// saturability. On failure the visited slots yield a Hall-style
// deficient set. Scratch buffers persist across calls so that sweeps do
// not reallocate.
class DefenseMatcher {
 public:
  DefenseMatcher(const Graph& g, const Labeling& f) : g_(g), f_(f) {}

  // B must be the sorted zero-labeled members of the pattern.
  // Returns true and fills `assignment` when saturable, else fills
  // `deficient` with the certificate subset of B.
  bool solve(const std::vector<int>& B,
             std::vector<std::pair<int, int>>* assignment,
             std::vector<int>* deficient) {
    defenders_.clear();
    slot_owner_.clear();
    slot_defender_.clear();
    defender_index_.assign(g_.vertex_count(), -1);
    adj_slots_.assign(B.size(), {});

    for (size_t bi = 0; bi < B.size(); ++bi) {
      for (int u : g_.neighbors(B[bi])) {
        if (f_.label(u) < 2) continue;
        int di = defender_index_[u];
        if (di < 0) {
          di = static_cast<int>(defenders_.size());
          defender_index_[u] = di;
          defenders_.push_back(u);
          for (int s = 0; s < f_.label(u) - 1; ++s) {
            slot_defender_.push_back(di);
            slot_owner_.push_back(-1);
          }
        }
      }
    }
    // Slot ranges per defender, in first-seen order; rebuild as prefix map.
    slot_base_.assign(defenders_.size() + 1, 0);
    for (int d : slot_defender_) ++slot_base_[d + 1];
    for (size_t i = 1; i < slot_base_.size(); ++i)
      slot_base_[i] += slot_base_[i - 1];

    for (size_t bi = 0; bi < B.size(); ++bi) {
      auto& slots = adj_slots_[bi];
      for (int u : g_.neighbors(B[bi])) {
        int di = defender_index_[u];
        if (di < 0) continue;
        for (int s = slot_base_[di]; s < slot_base_[di + 1]; ++s)
          slots.push_back(s);
      }
      std::sort(slots.begin(), slots.end());
    }

    matched_slot_.assign(B.size(), -1);
    visited_.assign(slot_owner_.size(), 0);
    stamp_ = 0;

    for (size_t bi = 0; bi < B.size(); ++bi) {
      ++stamp_;
      if (!augment(static_cast<int>(bi))) {
        if (deficient) {
          std::set<int> bad;
          bad.insert(B[bi]);
          for (size_t s = 0; s < visited_.size(); ++s)
            if (visited_[s] == stamp_) bad.insert(B[slot_owner_[s]]);
          deficient->assign(bad.begin(), bad.end());
        }
        return false;
      }
    }
    if (assignment) {
      assignment->clear();
      for (size_t bi = 0; bi < B.size(); ++bi)
        assignment->emplace_back(B[bi],
                                 defenders_[slot_defender_[matched_slot_[bi]]]);
    }
    return true;
  }

 private:
  bool augment(int bi) {
    for (int s : adj_slots_[bi]) {
      if (visited_[s] == stamp_) continue;
      visited_[s] = stamp_;
      if (slot_owner_[s] < 0 || augment(slot_owner_[s])) {
        slot_owner_[s] = bi;
        matched_slot_[bi] = s;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const Labeling& f_;
  std::vector<int> defenders_;       // defender vertex ids, first-seen order
  std::vector<int> defender_index_;  // vertex id -> defender index or -1
  std::vector<int> slot_defender_;   // slot -> defender index
  std::vector<int> slot_base_;       // defender index -> first slot
  std::vector<int> slot_owner_;      // slot -> matched zero (index into B)
  std::vector<int> matched_slot_;    // zero index -> slot
  std::vector<std::vector<int>> adj_slots_;
  std::vector<int> visited_;
  int stamp_ = 0;
};

// Lexicographic enumeration of all size-s index subsets of {0..m-1}.
// Returns false when exhausted.
bool next_combination(std::vector<int>& idx, int m) {
  int s = static_cast<int>(idx.size());
  for (int i = s - 1; i >= 0; --i) {
    if (idx[i] < m - (s - i)) {
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

AttackPattern make_pattern(const Graph& g, std::vector<int> vertices, int k) {
  if (vertices.empty())
    throw std::invalid_argument("attack pattern must not be empty");
  if (static_cast<int>(vertices.size()) > k)
    throw std::invalid_argument("attack pattern has " +
                                std::to_string(vertices.size()) +
                                " vertices, more than k = " + std::to_string(k));
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("pattern vertex " + std::to_string(v) +
                                  " is out of range");
    if (i > 0 && vertices[i - 1] == v)
      throw std::invalid_argument("pattern vertex " + std::to_string(v) +
                                  " repeated");
  }
  return AttackPattern{std::move(vertices)};
}

DefenseCheck defendable(const Graph& g, const Labeling& f,
                        const AttackPattern& pattern) {
  require_compatible(g, f);
  if (pattern.vertices.empty() ||
      static_cast<int>(pattern.vertices.size()) > f.k())
    throw std::invalid_argument("pattern size must be between 1 and k");
  for (int v : pattern.vertices)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("pattern vertex " + std::to_string(v) +
                                  " is out of range");

  std::vector<int> zeros;
  for (int v : pattern.vertices)
    if (f.label(v) == 0) zeros.push_back(v);

  DefenseCheck result;
  if (zeros.empty()) {
    result.feasible = true;  // everyone attacked protects itself
    return result;
  }
  DefenseMatcher matcher(g, f);
  result.feasible =
      matcher.solve(zeros, &result.assignment.pairs, &result.deficient_set);
  return result;
}

Verdict is_proper(const Graph& g, const Labeling& f, long long budget) {
  require_compatible(g, f);
  const int n = g.vertex_count();
  if (f.k() > n)
    throw std::invalid_argument("requires |V| >= k");

  Verdict verdict;
  std::vector<int> zeros = f.level_set(0);
  const int m = static_cast<int>(zeros.size());
  if (m == 0) {
    verdict.proper = true;
    return verdict;
  }

  const int s = std::min(f.k(), m);
  DefenseMatcher matcher(g, f);
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  std::vector<int> subset(s), deficient;

  do {
    if (verdict.patterns_checked >= budget)
      throw budget_error("properness check exceeded the budget of " +
                         std::to_string(budget) + " patterns");
    ++verdict.patterns_checked;
    for (int i = 0; i < s; ++i) subset[i] = zeros[idx[i]];
    if (!matcher.solve(subset, nullptr, &deficient)) {
      verdict.proper = false;
      verdict.deficiency_set = deficient;
      // Pad the deficient set to a full-size pattern with the lowest ids
      // outside it. Supersets of a deficient set stay undefendable.
      std::vector<int> witness = deficient;
      std::set<int> in(witness.begin(), witness.end());
      for (int v = 0; v < n && static_cast<int>(witness.size()) < f.k(); ++v)
        if (!in.count(v)) witness.push_back(v);
      std::sort(witness.begin(), witness.end());
      verdict.witness = AttackPattern{std::move(witness)};
      return verdict;
    }
  } while (next_combination(idx, m));

  verdict.proper = true;
  return verdict;
}

int min_capacity_slack(const Graph& g, const Labeling& f, long long budget) {
  require_compatible(g, f);
  if (f.k() > g.vertex_count())
    throw std::invalid_argument("requires |V| >= k");

  std::vector<int> zeros = f.level_set(0);
  const int m = static_cast<int>(zeros.size());
  if (m == 0) return kInfiniteSlack;

  // Spare capacity adjacent to S, minus |S|, minimized over subset sizes
  // 1..min(k, m). Defender capacities are counted once per subset via a
  // mark array.
  std::vector<int> mark(g.vertex_count(), 0);
  int stamp = 0;
  long long checked = 0;
  int best = kInfiniteSlack;
  for (int s = 1; s <= std::min(f.k(), m); ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    do {
      if (checked++ >= budget)
        throw budget_error("slack scan exceeded the budget of " +
                           std::to_string(budget) + " subsets");
      ++stamp;
      int capacity = 0;
      for (int i = 0; i < s; ++i)
        for (int u : g.neighbors(zeros[idx[i]])) {
          if (f.label(u) < 2 || mark[u] == stamp) continue;
          mark[u] = stamp;
          capacity += f.label(u) - 1;
        }
      best = std::min(best, capacity - s);
    } while (next_combination(idx, m));
  }
  return best;
}

}  // namespace ksrd
