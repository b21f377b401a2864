#include "ksrd/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ksrd/errors.hpp"

namespace ksrd {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> names)
    : n_(vertex_count), names_(std::move(names)) {
  if (n_ < 0) throw range_error("vertex count must be non-negative");
  if (!names_.empty() && static_cast<int>(names_.size()) != n_)
    throw range_error("name list length does not match vertex count");

  adj_.assign(n_, {});
  edges_.reserve(edges.size());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw format_error("edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ") references a vertex outside 0.." +
                         std::to_string(n_ - 1));
    }
    if (u == v)
      throw format_error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw format_error("duplicate edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ")");
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  auto a = edges_, b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_line(header)) throw format_error("empty graph text");
  std::istringstream hs(header);
  int n = 0, m = 0;
  std::string extra;
  if (!(hs >> n >> m) || (hs >> extra))
    throw format_error("header must be \"n m\", got: " + header);
  if (n < 0 || m < 0) throw format_error("negative counts in header");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string row;
    if (!next_line(row))
      throw format_error("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(i));
    std::istringstream es(row);
    int u = 0, v = 0;
    if (!(es >> u >> v) || (es >> extra))
      throw format_error("malformed edge on line " + std::to_string(lineno) +
                         ": " + row);
    edges.emplace_back(u, v);
  }
  std::string rest;
  if (next_line(rest))
    throw format_error("trailing content after " + std::to_string(m) +
                       " edges: " + rest);
  return Graph(n, std::move(edges));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

bool is_cubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

}  // namespace ksrd
