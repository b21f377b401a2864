#pragma once

#include <array>
#include <string>
#include <vector>

#include "ksrd/family.hpp"
#include "ksrd/labeling.hpp"
#include "ksrd/solver.hpp"

namespace ksrd {

enum class BoundKind { exact, lower_bound, upper_bound };

std::string to_string(BoundKind kind);

/// A closed-form value for the minimum defense weight of a family member,
/// tagged with how tight it is and which result it comes from.
struct FormulaResult {
  int value;
  BoundKind kind;
  std::string source;

  bool operator==(const FormulaResult&) const = default;
};

/// Closed-form table. In-hypothesis queries return the family's proven
/// value (exact, or upper bound for polytope_A). Out-of-hypothesis
/// queries fall back to the general bounds: exact n when k = |V|,
/// otherwise the lower bound k+1. Throws when k < 1 or k > |V|.
FormulaResult formula(const FamilySpec& spec, int k);

/// Emits the explicit optimal (or best known) labeling behind
/// formula(spec, k) and self-checks it: the returned labeling is verified
/// proper and its weight equals the formula value, otherwise
/// internal_error. Throws std::domain_error when no construction is known
/// for (spec, k).
Labeling construct(const FamilySpec& spec, int k);

/// All applicable general bounds for an arbitrary graph: exact n when
/// k = |V|; lower bound k+1 otherwise; the cubic lower bound ceil(2n/3)
/// when k = 2 and the graph is cubic; and, when companion numbers are
/// supplied, the upper bounds gamma_kR and (k+1)*gamma.
std::vector<FormulaResult> general_bounds(const Graph& g, int k,
                                          const RelatedNumbers* related = nullptr);

/// 2-row label matrix used to assemble the ladder constructions from
/// fixed blocks combined with row-swap and column-reverse reflections.
/// Entries stay in {0, 1, 2}.
struct GridPattern {
  std::array<std::vector<int>, 2> rows;

  int cols() const { return static_cast<int>(rows[0].size()); }
  int weight() const;
  GridPattern flipped_rows() const;    // swap top and bottom row
  GridPattern reversed_cols() const;   // mirror left-to-right
  void append(const GridPattern& other);
  GridPattern slice(int begin, int end) const;  // columns [begin, end)

  /// Checkerboard core of width k: top row starts with 0, bottom with 2.
  static GridPattern central_block(int k);
  /// Width-m flank: top row 1,0,2,0,2,...;  bottom row 0,2,0,2,...
  /// Weight 2m-1. m = 0 yields an empty pattern.
  static GridPattern side_block(int m);
  /// Width-(k+1) repeating unit with a zero column in the middle.
  /// Weight 2k.
  static GridPattern period_block(int k);

  bool operator==(const GridPattern&) const = default;
};

/// Row-major labeling for a 2 x n ladder (row 1 ids 0..n-1, row 2 ids
/// n..2n-1) from a pattern of matching width.
std::vector<int> grid_labels(const GridPattern& m);

}  // namespace ksrd
