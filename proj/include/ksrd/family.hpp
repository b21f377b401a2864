#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ksrd/graph.hpp"

namespace ksrd {

/// The named graph families the library can generate.
enum class Family {
  path,                // P_n
  cycle,               // C_n
  complete,            // K_n
  star,                // S_n (hub + n-1 leaves)
  wheel,               // W_n (hub + rim cycle on n-1 vertices)
  complete_bipartite,  // K_{n,p}, n >= p
  grid2,               // P_2 x P_n ladder
  grid,                // generic P_m x P_n (no closed-form attached)
  polytope_D,          // convex polytope D_n, 4n vertices, cubic
  polytope_Rpp,        // convex polytope R''_n, 6n vertices, cubic
  polytope_A,          // convex polytope A_n (antiprism-like), 3n vertices
};

/// A family identifier plus its integer parameters: (n), (n,p) or (m,n).
struct FamilySpec {
  Family family;
  std::vector<int> params;

  bool operator==(const FamilySpec&) const = default;
};

/// Parses compact spec tokens such as "path:5", "dn:7", "knp:5,4",
/// "grid2:9". Long names ("polytope_D") and short aliases ("dn") are both
/// accepted.
FamilySpec parse_family_spec(std::string_view token);

/// Canonical short token ("dn:7", "knp:5,4").
std::string to_string(const FamilySpec& spec);

/// Human-readable family name ("polytope_D").
std::string family_name(Family f);

/// Throws range_error when the parameters violate the family's admissible
/// range (e.g. cycle needs n >= 3, polytopes need n >= 5).
void validate_family_spec(const FamilySpec& spec);

/// Number of vertices the family produces, without building the graph.
int family_vertex_count(const FamilySpec& spec);

/// Builds the family graph with deterministic vertex ids: naming blocks
/// are concatenated in order (a-block, b-block, c-block, ...), each block
/// indexed 0..n-1. Families whose classical description is 1-based are
/// shifted to 0-based ids. Circulant indices wrap modulo n.
Graph make_family(const FamilySpec& spec);

}  // namespace ksrd
