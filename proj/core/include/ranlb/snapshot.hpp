#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ranlb/band.hpp"
#include "ranlb/mcs.hpp"
#include "ranlb/traffic.hpp"

namespace ranlb {

// Windowed measurement snapshot taken at a load-balancing decision instant.
// Everything a policy may look at lives here; policies never touch the
// simulation directly.
struct SnapshotCell {
  int cell_id = -1;
  int site_id = -1;
  int band_index = 0;
  Band band = Band::n29;
  double utilization = 0.0;     // w(k), mean over the observation window
  double avg_active_ues = 0.0;
};

struct SnapshotUe {
  int ue_id = -1;
  int serving_cell = -1;
  FlowSpec flow;
  double avg_rate_bps = 0.0;  // r-bar over the observation window
};

struct NetworkSnapshot {
  std::vector<SnapshotCell> cells;
  std::vector<SnapshotUe> ues;
  Eigen::MatrixXd rsrp_dbm;          // U x K
  Eigen::MatrixXd wideband_sinr_db;  // U x K, load-coupled interference
  double rsrp_min_dbm = -120.0;
  int mcs_min = 0;
  double cell_edge_margin_db = 5.0;
  McsTable mcs;

  int num_ues() const { return static_cast<int>(ues.size()); }
  int num_cells() const { return static_cast<int>(cells.size()); }
};

}  // namespace ranlb
