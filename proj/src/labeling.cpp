#include "ksrd/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ksrd/errors.hpp"

namespace ksrd {

Labeling::Labeling(const Graph& g, std::vector<int> labels, int k)
    : labels_(std::move(labels)), k_(k) {
  const int n = g.vertex_count();
  if (k_ < 1 || k_ > n)
    throw range_error("k must satisfy 1 <= k <= |V| = " + std::to_string(n) +
                      ", got k = " + std::to_string(k_));
  if (static_cast<int>(labels_.size()) != n)
    throw format_error("expected " + std::to_string(n) + " labels, got " +
                       std::to_string(labels_.size()));
  max_label_ = std::min(g.max_degree(), k_) + 1;
  for (int v = 0; v < n; ++v) {
    if (labels_[v] < 0 || labels_[v] > max_label_)
      throw range_error("label " + std::to_string(labels_[v]) + " at vertex " +
                        std::to_string(v) + " is outside 0.." +
                        std::to_string(max_label_));
  }
}

int Labeling::weight() const {
  return std::accumulate(labels_.begin(), labels_.end(), 0);
}

std::vector<int> Labeling::level_set(int j) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (labels_[v] == j) out.push_back(v);
  return out;
}

std::vector<int> Labeling::level_set_at_least(int j) const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (labels_[v] >= j) out.push_back(v);
  return out;
}

Labeling parse_labeling(std::string_view text, const Graph& g, int k) {
  std::istringstream in{std::string(text)};
  std::vector<int> labels;
  int value = 0;
  while (in >> value) labels.push_back(value);
  if (!in.eof()) {
    std::string rest;
    in.clear();
    in >> rest;
    throw format_error("unexpected token \"" + rest + "\" in labeling");
  }
  return Labeling(g, std::move(labels), k);
}

std::string write_labeling(const Labeling& f) {
  std::ostringstream out;
  for (int v = 0; v < f.size(); ++v) {
    if (v) out << ' ';
    out << f.label(v);
  }
  out << '\n';
  return out.str();
}

}  // namespace ksrd
