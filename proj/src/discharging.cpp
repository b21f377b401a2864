#include "ksrd/discharging.hpp"

#include <algorithm>
#include <numeric>

#include "ksrd/errors.hpp"
#include "ksrd/verifier.hpp"

namespace ksrd {

DischargeState discharge_cubic_2srd(const Graph& g, const Labeling& f) {
  if (!is_cubic(g)) throw range_error("charge redistribution needs a cubic graph");
  if (f.k() != 2)
    throw range_error("charge redistribution is defined for k = 2, got k = " +
                      std::to_string(f.k()));
  if (!is_proper(g, f).proper)
    throw std::invalid_argument("labeling is not a proper defense; refusing to discharge");

  DischargeState state;
  state.total_thirds = 3 * f.weight();
  state.charges_thirds.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    state.charges_thirds[v] = 3 * f.label(v);

  auto transfer = [&state](int from, int to, int thirds) {
    state.charges_thirds[from] -= thirds;
    state.charges_thirds[to] += thirds;
    state.transfers.push_back({from, to, thirds});
  };

  for (int u = 0; u < g.vertex_count(); ++u) {
    if (f.label(u) != 0) continue;
    int strong = -1;  // lowest-id neighbor labeled 3
    std::vector<int> twos;
    for (int v : g.neighbors(u)) {
      if (f.label(v) == 3 && strong < 0) strong = v;
      if (f.label(v) == 2) twos.push_back(v);
    }
    if (strong >= 0) {
      transfer(strong, u, 2);
    } else if (twos.size() == 1) {
      transfer(twos[0], u, 2);
    } else if (twos.size() >= 2) {
      // Two donors suffice; take the two lowest ids for determinism.
      transfer(twos[0], u, 1);
      transfer(twos[1], u, 1);
    } else {
      throw internal_error("zero vertex " + std::to_string(u) +
                           " has no donor; proper labelings cannot reach here");
    }
  }
  return state;
}

DischargeReport check_discharge(const DischargeState& state) {
  DischargeReport report;
  const int total = std::accumulate(state.charges_thirds.begin(),
                                    state.charges_thirds.end(), 0);
  report.conserved = total == state.total_thirds;
  report.min_charge_thirds =
      state.charges_thirds.empty()
          ? 0
          : *std::min_element(state.charges_thirds.begin(),
                              state.charges_thirds.end());
  for (int v = 0; v < static_cast<int>(state.charges_thirds.size()); ++v) {
    if (state.charges_thirds[v] >= 2) continue;
    DischargeViolation violation{v, state.charges_thirds[v], {}};
    for (const auto& t : state.transfers)
      if (t.from == v || t.to == v) violation.incident.push_back(t);
    report.violations.push_back(std::move(violation));
  }
  report.ok = report.conserved && report.violations.empty();
  return report;
}

}  // namespace ksrd
