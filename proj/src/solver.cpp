#include "ksrd/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "ksrd/errors.hpp"

namespace ksrd {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int general_lower_bound(const Graph& g, int k) {
  const int n = g.vertex_count();
  int lb = (k == n) ? n : k + 1;
  if (k == 2 && is_cubic(g)) lb = std::max(lb, (2 * n + 2) / 3);
  return lb;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, int k, const SolveOptions& options)
      : g_(g), k_(k), options_(options) {}

  SolveResult run() {
    const int n = g_.vertex_count();
    const auto start = Clock::now();

    // Incumbent: all-ones is always proper (every vertex defends itself),
    // improved by the warm start when one is supplied.
    best_labels_.assign(n, 1);
    best_weight_ = n;
    if (options_.warm_start) {
      const Labeling& seed = *options_.warm_start;
      if (seed.size() != n || seed.k() != k_)
        throw std::invalid_argument("warm start does not match graph and k");
      if (!is_proper(g_, seed, options_.verify_budget).proper)
        throw std::invalid_argument("warm start labeling is not proper");
      if (seed.weight() < best_weight_) {
        best_weight_ = seed.weight();
        best_labels_ = seed.labels();
      }
    }

    lower_bound_ = general_lower_bound(g_, k_);
    max_label_ = std::min(g_.max_degree(), k_) + 1;

    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [this](int a, int b) {
      return g_.degree(a) > g_.degree(b);
    });

    labels_.assign(n, -1);
    if (best_weight_ > lower_bound_) descend(0, 0);

    stats_.ms = ms_since(start);
    Labeling optimal(g_, best_labels_, k_);
    return SolveResult{best_weight_, std::move(optimal), stats_};
  }

 private:
  void descend(int depth, int partial_weight) {
    if (best_weight_ <= lower_bound_) return;  // incumbent is optimal
    if (++stats_.nodes > options_.node_budget)
      throw budget_error("search exceeded the node budget of " +
                             std::to_string(options_.node_budget) +
                             "; best weight found so far is " +
                             std::to_string(best_weight_),
                         best_weight_);

    if (!viable(partial_weight)) {
      ++stats_.prunes;
      return;
    }

    const int n = g_.vertex_count();
    if (depth == n) {
      Labeling candidate(g_, labels_, k_);
      if (is_proper(g_, candidate, options_.verify_budget).proper) {
        best_weight_ = partial_weight;
        best_labels_ = labels_;
      }
      return;
    }

    const int v = order_[depth];
    for (int c = 0; c <= max_label_; ++c) {
      if (partial_weight + c >= best_weight_) {
        ++stats_.prunes;
        break;  // labels ascend, so heavier choices cannot help either
      }
      labels_[v] = c;
      descend(depth + 1, partial_weight + c);
      labels_[v] = -1;
      if (best_weight_ <= lower_bound_) return;
    }
  }

  // Necessary conditions on the partial assignment:
  //  - a zero vertex whose whole neighborhood is assigned needs an
  //    assigned defender;
  //  - every zero vertex still lacking a defender needs one among its
  //    unassigned neighbors, and those cost at least 2 each; a single
  //    future defender can serve all pending zeros around it, which gives
  //    a residual-weight bound.
  bool viable(int partial_weight) {
    const int n = g_.vertex_count();
    pending_flag_.assign(n, 0);
    int pending_count = 0;
    for (int v = 0; v < n; ++v) {
      if (labels_[v] != 0) continue;
      bool defended = false, open = false;
      for (int u : g_.neighbors(v)) {
        if (labels_[u] < 0)
          open = true;
        else if (labels_[u] >= 2)
          defended = true;
      }
      if (defended) continue;
      if (!open) return false;
      pending_flag_[v] = 1;
      ++pending_count;
    }
    if (pending_count == 0) return true;

    int max_cover = 0;
    for (int w = 0; w < n; ++w) {
      if (labels_[w] >= 0) continue;
      int cover = 0;
      for (int u : g_.neighbors(w))
        if (pending_flag_[u]) ++cover;
      max_cover = std::max(max_cover, cover);
    }
    if (max_cover == 0) return false;
    const int residual = 2 * ((pending_count + max_cover - 1) / max_cover);
    return partial_weight + residual < best_weight_;
  }

  const Graph& g_;
  const int k_;
  const SolveOptions& options_;
  int max_label_ = 0;
  int lower_bound_ = 0;
  int best_weight_ = 0;
  std::vector<int> best_labels_;
  std::vector<int> labels_;
  std::vector<int> order_;
  std::vector<char> pending_flag_;
  SearchStats stats_;
};

// Enumerates every label vector of total weight `target` (entries in
// 0..max_label) and stops at the first proper one.
class WeightClassScan {
 public:
  WeightClassScan(const Graph& g, int k, int max_label, long long budget)
      : g_(g), k_(k), max_label_(max_label), budget_(budget) {}

  bool find(int target, std::optional<Labeling>* out) {
    labels_.assign(g_.vertex_count(), 0);
    return fill(0, target, out);
  }

  long long inspected() const { return inspected_; }

 private:
  bool fill(int pos, int remaining, std::optional<Labeling>* out) {
    const int n = g_.vertex_count();
    if (pos == n) {
      if (inspected_++ >= budget_)
        throw budget_error("brute force exceeded the budget of " +
                           std::to_string(budget_) + " labelings");
      Labeling candidate(g_, labels_, k_);
      if (!is_proper(g_, candidate).proper) return false;
      if (out) *out = std::move(candidate);
      return true;
    }
    const int slots_after = n - pos - 1;
    const int low = std::max(0, remaining - max_label_ * slots_after);
    const int high = std::min(max_label_, remaining);
    for (int c = low; c <= high; ++c) {
      labels_[pos] = c;
      if (fill(pos + 1, remaining - c, out)) return true;
    }
    labels_[pos] = 0;
    return false;
  }

  const Graph& g_;
  const int k_;
  const int max_label_;
  const long long budget_;
  long long inspected_ = 0;
  std::vector<int> labels_;
};

}  // namespace

SolveResult gamma_ksrd_exact(const Graph& g, int k, const SolveOptions& options) {
  const int n = g.vertex_count();
  if (k < 1 || k > n)
    throw std::invalid_argument("requires 1 <= k <= |V|");
  BranchAndBound search(g, k, options);
  return search.run();
}

int gamma_ksrd_bruteforce(const Graph& g, int k, long long budget,
                          std::optional<Labeling>* witness) {
  const int n = g.vertex_count();
  if (k < 1 || k > n)
    throw std::invalid_argument("requires 1 <= k <= |V|");
  const int max_label = std::min(g.max_degree(), k) + 1;
  WeightClassScan scan(g, k, max_label, budget);
  for (int w = 0; w <= n; ++w) {
    if (scan.find(w, witness)) return w;
  }
  // All-ones has weight n and is proper, so the loop cannot fall through.
  throw internal_error("weight-ordered scan found no proper labeling");
}

namespace {

long long saturating_pow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1ll << 62) / base) return 1ll << 62;
    out *= base;
  }
  return out;
}

}  // namespace

RelatedNumbers related_numbers(const Graph& g, int k, KDominationRule rule,
                               long long budget) {
  const int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("requires k >= 1");
  if (n > 62 || saturating_pow(3, n) > budget)
    throw budget_error("related-numbers brute force needs 3^n <= budget");

  std::vector<std::uint64_t> nbr_mask(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr_mask[u] |= 1ull << v;
    nbr_mask[v] |= 1ull << u;
  }

  RelatedNumbers out{n, n, n};

  // Domination number: D covers everything in its closed neighborhood.
  {
    int best = n;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      std::uint64_t covered = mask;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) covered |= nbr_mask[v];
      if (covered == (1ull << n) - 1)
        best = std::min(best, __builtin_popcountll(mask));
    }
    out.gamma_dom = best;
  }

  // k-domination number under the chosen convention.
  {
    int best = -1;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        if (rule == KDominationRule::standard && (mask >> v & 1)) continue;
        ok = __builtin_popcountll(nbr_mask[v] & mask) >= k;
      }
      if (ok) {
        int size = __builtin_popcountll(mask);
        if (best < 0 || size < best) best = size;
      }
    }
    if (best < 0)
      throw std::domain_error(
          "no k-dominating set exists under the verbatim convention "
          "(some vertex has degree below k)");
    out.gamma_k_dom = best;
  }

  // Roman k-domination: labels {0,1,2}, every 0-vertex needs k
  // 2-labeled neighbors. Plain ternary enumeration.
  {
    std::vector<int> labels(n, 0);
    int best = n;  // all-ones is feasible
    auto scan = [&](auto&& self, int pos, int weight) -> void {
      if (weight >= best) return;
      if (pos == n) {
        std::uint64_t twos = 0;
        for (int v = 0; v < n; ++v)
          if (labels[v] == 2) twos |= 1ull << v;
        for (int v = 0; v < n; ++v)
          if (labels[v] == 0 &&
              __builtin_popcountll(nbr_mask[v] & twos) < k)
            return;
        best = weight;
        return;
      }
      for (int c = 0; c <= 2; ++c) {
        labels[pos] = c;
        self(self, pos + 1, weight + c);
      }
      labels[pos] = 0;
    };
    scan(scan, 0, 0);
    out.gamma_kR = best;
  }

  return out;
}

}  // namespace ksrd
