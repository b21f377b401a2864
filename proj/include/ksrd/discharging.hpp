#pragma once

#include <vector>

#include "ksrd/graph.hpp"
#include "ksrd/labeling.hpp"

namespace ksrd {

/// One charge movement, in exact thirds (1 third = 1/3 of a weight unit).
struct ChargeTransfer {
  int from;
  int to;
  int thirds;  // 1 or 2

  bool operator==(const ChargeTransfer&) const = default;
};

/// Charges after redistribution, kept as integer multiples of 1/3 so
/// conservation is checked exactly. total_thirds is frozen at creation as
/// 3 * weight(f).
struct DischargeState {
  std::vector<int> charges_thirds;
  std::vector<ChargeTransfer> transfers;
  int total_thirds = 0;
};

/// Runs the charge redistribution for a proper defense labeling of a cubic
/// graph at k = 2. Each zero vertex receives exactly 2 thirds, by the
/// first applicable rule:
///   - from its lowest-id neighbor labeled 3 (2 thirds), else
///   - from its unique neighbor labeled 2 (2 thirds), else
///   - 1 third from each of its two lowest-id neighbors labeled 2.
/// Throws range_error for a non-cubic graph or k != 2, std::invalid_argument
/// for an improper labeling, and internal_error if a zero vertex matches no
/// rule (impossible for proper labelings).
DischargeState discharge_cubic_2srd(const Graph& g, const Labeling& f);

struct DischargeViolation {
  int vertex;
  int charge_thirds;
  std::vector<ChargeTransfer> incident;
};

struct DischargeReport {
  bool ok = false;               // conserved && min_charge_thirds >= 2
  bool conserved = false;        // sum of charges equals total_thirds
  int min_charge_thirds = 0;
  std::vector<DischargeViolation> violations;  // vertices below 2 thirds
};

/// Certifies the redistribution: every vertex must retain at least
/// 2 thirds and the total must be conserved exactly. Violating vertices
/// are reported together with their incident transfers.
DischargeReport check_discharge(const DischargeState& state);

}  // namespace ksrd
