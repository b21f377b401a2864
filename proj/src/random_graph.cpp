#include "ksrd/random_graph.hpp"

#include "ksrd/errors.hpp"

namespace ksrd {

Graph random_connected_graph(int n, std::uint64_t seed, int extra_edge_pct) {
  if (n < 1) throw range_error("random graph needs n >= 1");
  if (extra_edge_pct < 0 || extra_edge_pct > 100)
    throw range_error("extra_edge_pct must be in 0..100");

  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  // Random attachment tree keeps the graph connected.
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.below(v)), v);

  std::vector<char> used(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : edges) used[u * n + v] = used[v * n + u] = 1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (used[u * n + v]) continue;
      if (static_cast<int>(rng.below(100)) < extra_edge_pct)
        edges.emplace_back(u, v);
    }
  return Graph(n, std::move(edges));
}

}  // namespace ksrd
