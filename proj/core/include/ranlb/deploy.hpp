#pragma once

#include <vector>

#include "ranlb/radio.hpp"
#include "ranlb/rng.hpp"
#include "ranlb/traffic.hpp"

namespace ranlb {

struct UePlacement {
  int ue_id = -1;
  Vec2 position;
  FlowSpec flow;
};

struct Deployment {
  std::vector<BandConfig> bands;
  std::vector<CellNode> cells;  // cell_id == index; site-major, band-minor
  std::vector<UePlacement> ues;
  double area_x_m = 1500.0;
  double area_y_m = 1500.0;
};

struct DeploymentSpec {
  int num_sites = 7;
  double isd_m = 500.0;
  double area_x_m = 1500.0;
  double area_y_m = 1500.0;
  double tx_power_dbm = 44.0;
  std::vector<BandConfig> bands;              // defaults to default_bands()
  std::vector<int> ue_count_choices = {35, 42, 49, 56, 63, 70};
  double gbr_fraction = 0.75;                 // 3:1 GBR:BE split
  std::vector<double> gbr_rate_choices_bps;   // default 0.8..16 Mbps step 0.2
  std::vector<double> be_rate_choices_bps;    // default 2..8 Mbps step 0.4
  std::vector<int> gbr_5qi_choices = {2, 3, 67};
};

std::vector<double> default_gbr_rate_choices();
std::vector<double> default_be_rate_choices();

// Hexagonal-lattice site positions centered in the area: ring 0 is the
// center, then spiral outwards at the inter-site distance.
std::vector<Vec2> hex_site_positions(int num_sites, double isd_m,
                                     double center_x, double center_y);

// One drop: sites on the lattice, one cell per band per site, UEs uniform
// over the area with flows drawn from the configured mixes.
Deployment generate_deployment(const DeploymentSpec& spec, rng::Stream& rng);

}  // namespace ranlb
