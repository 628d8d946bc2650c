#pragma once

#include <Eigen/Dense>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ranlb/snapshot.hpp"

namespace ranlb {

constexpr int kUeFeatureDim = 5;    // F_u: MFBR, GFBR, wideband SINR, r-bar, tau
constexpr int kCellFeatureDim = 2;  // F_c: utilization, active-UE count

// Feature normalization keeps every input roughly in [0,1]. Rates scale by the
// largest MFBR in the traffic mix, SINR maps linearly from [-10, 40] dB, delay
// budgets by the largest 5QI budget.
struct FeatureScale {
  double rate_norm_bps = 16e6;
  double sinr_offset_db = 10.0;
  double sinr_span_db = 50.0;
  double delay_norm_ttis = 300.0;
  double ue_count_norm = 1.0;  // set to U by build_graph
};

// Heterogeneous RAN graph snapshot: UE and cell nodes, single-association
// UE-cell edges, symmetric cell-cell opportunity edges, and per-node feature
// rows aligned with the id-sorted node ordering (UEs first, then cells).
struct RanGraph {
  std::vector<int> ue_ids;
  std::vector<int> cell_ids;
  std::vector<int> serving_cell;                 // per UE, a cell id
  std::vector<std::pair<int, int>> edges_cc;     // cell-id pairs, first < second
  Eigen::MatrixXd x_ue;                          // U x 5
  Eigen::MatrixXd x_cell;                        // K x 2

  int num_ues() const { return static_cast<int>(ue_ids.size()); }
  int num_cells() const { return static_cast<int>(cell_ids.size()); }
  int num_nodes() const { return num_ues() + num_cells(); }

  int ue_index(int ue_id) const;    // throws on unknown id
  int cell_index(int cell_id) const;
  bool has_cell(int cell_id) const;
};

struct Action {
  bool is_stay = true;
  int ue_id = -1;
  int source_cell = -1;
  int target_cell = -1;

  static Action stay() { return Action{}; }
  static Action handover(int ue, int source, int target) {
    return Action{false, ue, source, target};
  }
  bool operator==(const Action&) const = default;
};

std::string action_label(const Action& a);

// The sets constraining one LB round: cell-edge UEs, the UEs/cells that can
// participate under (4b)-(4d), and each UE's individual target set.
struct FeasibilitySets {
  std::vector<int> cell_edge_ues;
  std::vector<int> target_ues;
  std::vector<int> target_cells;
  std::map<int, std::vector<int>> ue_targets;
};

// A UE sits at the cell edge when its serving-cell RSRP is within the margin
// (5 dB, boundary inclusive) of the strongest other cell.
bool detect_cell_edge(const NetworkSnapshot& snap, int ue_index);

// Builds the state graph from a measurement snapshot. Cell-cell edges connect
// {k, k'} whenever some cell-edge UE hears both at or above RSRP_min.
RanGraph build_graph(const NetworkSnapshot& snap);
RanGraph build_graph(const NetworkSnapshot& snap, const FeatureScale& scale);

// Enumerates Stay plus every handover satisfying (4b)-(4d):
//   target load strictly below source, target MCS >= MCS_min,
//   target RSRP >= RSRP_min, and the UE at the cell edge.
std::pair<std::vector<Action>, FeasibilitySets> feasible_actions(
    const RanGraph& graph, const NetworkSnapshot& snap);

// Rewires one UE-cell edge (or nothing for Stay). Features, node sets and
// cell-cell edges are copied untouched.
RanGraph apply_action(const RanGraph& graph, const Action& action);

// Induced subgraph over the given cells plus every UE they serve.
RanGraph induce_cells(const RanGraph& graph, std::span<const int> cell_ids);

// Subgraph extraction heuristic: for each target cell, union the target sets
// of every UE that could move to it; keep the largest union (first cell id on
// ties). Returns ({}, empty graph) when there are no target cells.
std::pair<std::vector<int>, RanGraph> extract_subgraph(
    const RanGraph& graph, const std::vector<int>& target_cells,
    const std::vector<int>& target_ues,
    const std::map<int, std::vector<int>>& ue_targets);

void to_json(nlohmann::json& j, const RanGraph& g);
void from_json(const nlohmann::json& j, RanGraph& g);

}  // namespace ranlb
