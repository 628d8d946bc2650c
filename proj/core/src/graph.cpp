#include "ranlb/graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

namespace ranlb {

namespace {

int index_of(const std::vector<int>& ids, int id) {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) return -1;
  return static_cast<int>(it - ids.begin());
}

}  // namespace

int RanGraph::ue_index(int ue_id) const {
  int i = index_of(ue_ids, ue_id);
  if (i < 0) throw std::out_of_range("RanGraph: unknown ue " + std::to_string(ue_id));
  return i;
}

int RanGraph::cell_index(int cell_id) const {
  int i = index_of(cell_ids, cell_id);
  if (i < 0)
    throw std::out_of_range("RanGraph: unknown cell " + std::to_string(cell_id));
  return i;
}

bool RanGraph::has_cell(int cell_id) const {
  return index_of(cell_ids, cell_id) >= 0;
}

std::string action_label(const Action& a) {
  if (a.is_stay) return "stay";
  return "ho:u" + std::to_string(a.ue_id) + ":c" + std::to_string(a.source_cell) +
         ">c" + std::to_string(a.target_cell);
}

bool detect_cell_edge(const NetworkSnapshot& snap, int ue_index) {
  const auto& ue = snap.ues.at(ue_index);
  if (ue.serving_cell < 0)
    throw std::invalid_argument("detect_cell_edge: UE has no serving cell");
  double serving = snap.rsrp_dbm(ue_index, ue.serving_cell);
  double best_other = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < snap.num_cells(); ++k) {
    if (k == ue.serving_cell) continue;
    best_other = std::max(best_other, snap.rsrp_dbm(ue_index, k));
  }
  if (!std::isfinite(best_other)) return false;  // single-cell network
  return serving - best_other <= snap.cell_edge_margin_db;
}

RanGraph build_graph(const NetworkSnapshot& snap) {
  FeatureScale scale;
  scale.ue_count_norm = std::max(1, snap.num_ues());
  return build_graph(snap, scale);
}

RanGraph build_graph(const NetworkSnapshot& snap, const FeatureScale& scale) {
  RanGraph g;
  const int num_ues = snap.num_ues();
  const int num_cells = snap.num_cells();
  g.ue_ids.resize(num_ues);
  g.cell_ids.resize(num_cells);
  g.serving_cell.resize(num_ues);
  g.x_ue.resize(num_ues, kUeFeatureDim);
  g.x_cell.resize(num_cells, kCellFeatureDim);

  for (int u = 0; u < num_ues; ++u) {
    const auto& ue = snap.ues[u];
    if (ue.serving_cell < 0 || ue.serving_cell >= num_cells)
      throw std::invalid_argument("build_graph: UE " + std::to_string(ue.ue_id) +
                                  " has no valid serving cell");
    g.ue_ids[u] = ue.ue_id;
    g.serving_cell[u] = snap.cells[ue.serving_cell].cell_id;
    double sinr = snap.wideband_sinr_db(u, ue.serving_cell);
    double sinr_norm = std::clamp(
        (sinr + scale.sinr_offset_db) / scale.sinr_span_db, 0.0, 1.0);
    g.x_ue(u, 0) = ue.flow.mfbr_bps / scale.rate_norm_bps;
    g.x_ue(u, 1) = ue.flow.gfbr_bps / scale.rate_norm_bps;
    g.x_ue(u, 2) = sinr_norm;
    g.x_ue(u, 3) = ue.avg_rate_bps / scale.rate_norm_bps;
    g.x_ue(u, 4) = ue.flow.delay_budget_ttis / scale.delay_norm_ttis;
  }
  for (int k = 0; k < num_cells; ++k) {
    const auto& cell = snap.cells[k];
    g.cell_ids[k] = cell.cell_id;
    g.x_cell(k, 0) = cell.utilization;
    g.x_cell(k, 1) = cell.avg_active_ues / scale.ue_count_norm;
  }

  // Cell-cell opportunity edges, driven by cell-edge UEs hearing both ends.
  std::set<std::pair<int, int>> cc;
  for (int u = 0; u < num_ues; ++u) {
    if (!detect_cell_edge(snap, u)) continue;
    for (int k = 0; k < num_cells; ++k) {
      if (snap.rsrp_dbm(u, k) < snap.rsrp_min_dbm) continue;
      for (int k2 = k + 1; k2 < num_cells; ++k2) {
        if (snap.rsrp_dbm(u, k2) < snap.rsrp_min_dbm) continue;
        cc.emplace(snap.cells[k].cell_id, snap.cells[k2].cell_id);
      }
    }
  }
  g.edges_cc.assign(cc.begin(), cc.end());
  return g;
}

std::pair<std::vector<Action>, FeasibilitySets> feasible_actions(
    const RanGraph& graph, const NetworkSnapshot& snap) {
  std::vector<Action> actions;
  FeasibilitySets feas;
  actions.push_back(Action::stay());

  for (int u = 0; u < snap.num_ues(); ++u) {
    if (!detect_cell_edge(snap, u)) continue;
    feas.cell_edge_ues.push_back(snap.ues[u].ue_id);
  }

  for (int u = 0; u < snap.num_ues(); ++u) {
    const auto& ue = snap.ues[u];
    if (!detect_cell_edge(snap, u)) continue;
    const int serving = ue.serving_cell;
    const double w_source = snap.cells[serving].utilization;
    std::vector<int> targets;
    for (int k = 0; k < snap.num_cells(); ++k) {
      if (k == serving) continue;
      if (!(snap.cells[k].utilization < w_source)) continue;       // (4b)
      auto mcs = snap.mcs.index_for(snap.wideband_sinr_db(u, k));
      if (!mcs.has_value() || *mcs < snap.mcs_min) continue;       // (4c)
      if (snap.rsrp_dbm(u, k) < snap.rsrp_min_dbm) continue;       // (4d)
      targets.push_back(snap.cells[k].cell_id);
    }
    if (targets.empty()) continue;
    const int ue_id = ue.ue_id;
    const int source_id = snap.cells[serving].cell_id;
    for (int t : targets) actions.push_back(Action::handover(ue_id, source_id, t));
    feas.target_ues.push_back(ue_id);
    feas.ue_targets[ue_id] = std::move(targets);
  }

  std::set<int> target_cells;
  for (const auto& [ue, targets] : feas.ue_targets)
    target_cells.insert(targets.begin(), targets.end());
  feas.target_cells.assign(target_cells.begin(), target_cells.end());
  (void)graph;
  return {std::move(actions), std::move(feas)};
}

RanGraph apply_action(const RanGraph& graph, const Action& action) {
  RanGraph out = graph;
  if (action.is_stay) return out;
  int u = out.ue_index(action.ue_id);
  if (out.serving_cell[u] != action.source_cell)
    throw std::invalid_argument("apply_action: stale source cell for ue " +
                                std::to_string(action.ue_id));
  out.cell_index(action.target_cell);  // validates membership
  if (action.target_cell == action.source_cell)
    throw std::invalid_argument("apply_action: target equals source");
  out.serving_cell[u] = action.target_cell;
  return out;
}

RanGraph induce_cells(const RanGraph& graph, std::span<const int> cell_ids) {
  std::set<int> keep(cell_ids.begin(), cell_ids.end());
  RanGraph out;
  for (int k = 0; k < graph.num_cells(); ++k)
    if (keep.count(graph.cell_ids[k])) out.cell_ids.push_back(graph.cell_ids[k]);
  std::vector<int> ue_rows;
  for (int u = 0; u < graph.num_ues(); ++u) {
    if (!keep.count(graph.serving_cell[u])) continue;
    out.ue_ids.push_back(graph.ue_ids[u]);
    out.serving_cell.push_back(graph.serving_cell[u]);
    ue_rows.push_back(u);
  }
  out.x_ue.resize(out.num_ues(), kUeFeatureDim);
  for (int i = 0; i < out.num_ues(); ++i)
    out.x_ue.row(i) = graph.x_ue.row(ue_rows[i]);
  out.x_cell.resize(out.num_cells(), kCellFeatureDim);
  for (int i = 0; i < out.num_cells(); ++i)
    out.x_cell.row(i) = graph.x_cell.row(graph.cell_index(out.cell_ids[i]));
  for (const auto& [a, b] : graph.edges_cc)
    if (keep.count(a) && keep.count(b)) out.edges_cc.emplace_back(a, b);
  return out;
}

std::pair<std::vector<int>, RanGraph> extract_subgraph(
    const RanGraph& graph, const std::vector<int>& target_cells,
    const std::vector<int>& target_ues,
    const std::map<int, std::vector<int>>& ue_targets) {
  std::vector<int> best;
  for (int k : target_cells) {
    std::set<int> tentative;
    for (int u : target_ues) {
      auto it = ue_targets.find(u);
      if (it == ue_targets.end()) continue;
      const auto& ku = it->second;
      if (std::find(ku.begin(), ku.end(), k) == ku.end()) continue;
      tentative.insert(ku.begin(), ku.end());
    }
    if (tentative.size() > best.size())
      best.assign(tentative.begin(), tentative.end());
  }
  if (best.empty()) return {{}, RanGraph{}};
  return {best, induce_cells(graph, best)};
}

void to_json(nlohmann::json& j, const RanGraph& g) {
  auto matrix_rows = [](const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j = nlohmann::json{{"format", "ranlb-graph-v1"},
                     {"ue_ids", g.ue_ids},
                     {"cell_ids", g.cell_ids},
                     {"serving_cell", g.serving_cell},
                     {"edges_cc", g.edges_cc},
                     {"x_ue", matrix_rows(g.x_ue)},
                     {"x_cell", matrix_rows(g.x_cell)}};
}

void from_json(const nlohmann::json& j, RanGraph& g) {
  if (j.value("format", "") != "ranlb-graph-v1")
    throw std::invalid_argument("RanGraph: unknown serialization format");
  j.at("ue_ids").get_to(g.ue_ids);
  j.at("cell_ids").get_to(g.cell_ids);
  j.at("serving_cell").get_to(g.serving_cell);
  g.edges_cc.clear();
  for (const auto& e : j.at("edges_cc"))
    g.edges_cc.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  auto read_matrix = [](const nlohmann::json& rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows.size(), cols);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < cols; ++c)
        m(r, c) = rows.at(r).at(c).get<double>();
    return m;
  };
  g.x_ue = read_matrix(j.at("x_ue"), kUeFeatureDim);
  g.x_cell = read_matrix(j.at("x_cell"), kCellFeatureDim);
  if (g.x_ue.rows() != static_cast<Eigen::Index>(g.ue_ids.size()) ||
      g.x_cell.rows() != static_cast<Eigen::Index>(g.cell_ids.size()))
    throw std::invalid_argument("RanGraph: feature rows misaligned with nodes");
}

}  // namespace ranlb
