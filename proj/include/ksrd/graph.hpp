#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ksrd {

/// Immutable simple undirected graph.
///
/// Vertices are 0-based ids. Edges are stored normalized (u < v) in
/// insertion order; adjacency lists are kept sorted. No self-loops, no
/// duplicate edges.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> names = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const { return max_degree_; }
  bool has_edge(int u, int v) const;

  /// Display names ("b_3", ...). Empty when the graph is anonymous.
  const std::vector<std::string>& names() const { return names_; }

  /// Structural equality: same vertex count and same edge set.
  /// Names and edge order are presentation details and do not participate.
  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  int max_degree_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> names_;
};

/// Parses the edge-list text format: a header line "n m" followed by m
/// lines "u v" with 0 <= u,v < n and u != v. Rejects self-loops,
/// duplicate edges, out-of-range ids and malformed lines.
Graph parse_graph(std::string_view text);

/// Serializes to the same format; one edge per line, endpoints in
/// ascending order, edges in stored order. parse_graph(write_graph(g))
/// reproduces g exactly.
std::string write_graph(const Graph& g);

/// True iff every vertex has degree exactly 3.
bool is_cubic(const Graph& g);

}  // namespace ksrd
