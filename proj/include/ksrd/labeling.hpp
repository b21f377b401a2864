#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ksrd/graph.hpp"

namespace ksrd {

/// A candidate defense labeling bound to a specific graph and attack size k.
///
/// Labels live in {0, 1, ..., min(max_degree, k) + 1}; the upper end is
/// frozen at construction so range validation is self-contained. Weights
/// use plain int arithmetic; the library assumes n*(k+2) < 2^31, which
/// desk-scale instances satisfy by orders of magnitude.
class Labeling {
 public:
  /// Validates length, the label alphabet and 1 <= k <= |V|.
  Labeling(const Graph& g, std::vector<int> labels, int k);

  int k() const { return k_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int max_label() const { return max_label_; }
  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }

  /// Sum of all labels.
  int weight() const;

  /// Vertices labeled exactly j / at least j (ascending ids).
  std::vector<int> level_set(int j) const;
  std::vector<int> level_set_at_least(int j) const;

  bool operator==(const Labeling&) const = default;

 private:
  std::vector<int> labels_;
  int k_;
  int max_label_;
};

/// Parses whitespace-separated labels in vertex-id order.
Labeling parse_labeling(std::string_view text, const Graph& g, int k);

/// Space-separated labels, one line.
std::string write_labeling(const Labeling& f);

}  // namespace ksrd
