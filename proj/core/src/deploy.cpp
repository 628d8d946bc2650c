#include "ranlb/deploy.hpp"

#include <cmath>
#include <stdexcept>

namespace ranlb {

std::vector<double> default_gbr_rate_choices() {
  std::vector<double> v;
  for (int i = 0;; ++i) {
    double mbps = 0.8 + 0.2 * i;
    if (mbps > 16.0 + 1e-9) break;
    v.push_back(mbps * 1e6);
  }
  return v;
}

std::vector<double> default_be_rate_choices() {
  std::vector<double> v;
  for (int i = 0;; ++i) {
    double mbps = 2.0 + 0.4 * i;
    if (mbps > 8.0 + 1e-9) break;
    v.push_back(mbps * 1e6);
  }
  return v;
}

std::vector<Vec2> hex_site_positions(int num_sites, double isd_m,
                                     double center_x, double center_y) {
  if (num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
  // Axial coordinates; walk rings outward in a fixed spiral order.
  std::vector<std::pair<int, int>> axial = {{0, 0}};
  const std::pair<int, int> dirs[6] = {{1, 0},  {0, 1},  {-1, 1},
                                       {-1, 0}, {0, -1}, {1, -1}};
  for (int ring = 1; static_cast<int>(axial.size()) < num_sites; ++ring) {
    int q = ring, r = 0;  // start east of center
    for (const auto& [dq, dr] : dirs) {
      for (int step = 0; step < ring; ++step) {
        axial.emplace_back(q, r);
        q += dq;
        r += dr;
      }
    }
  }
  axial.resize(num_sites);
  std::vector<Vec2> out;
  out.reserve(num_sites);
  const double sq3_2 = std::sqrt(3.0) / 2.0;
  for (const auto& [q, r] : axial) {
    out.push_back(Vec2{center_x + isd_m * (q + 0.5 * r),
                       center_y + isd_m * sq3_2 * r});
  }
  return out;
}

Deployment generate_deployment(const DeploymentSpec& spec, rng::Stream& rng) {
  Deployment dep;
  dep.bands = spec.bands.empty()
                  ? std::vector<BandConfig>(default_bands().begin(),
                                            default_bands().end())
                  : spec.bands;
  dep.area_x_m = spec.area_x_m;
  dep.area_y_m = spec.area_y_m;

  auto sites = hex_site_positions(spec.num_sites, spec.isd_m,
                                  spec.area_x_m / 2.0, spec.area_y_m / 2.0);
  for (int s = 0; s < spec.num_sites; ++s) {
    for (int b = 0; b < static_cast<int>(dep.bands.size()); ++b) {
      CellNode cell;
      cell.cell_id = static_cast<int>(dep.cells.size());
      cell.site_id = s;
      cell.band_index = b;
      cell.position = sites[s];
      cell.tx_power_dbm = spec.tx_power_dbm;
      dep.cells.push_back(cell);
    }
  }

  const auto gbr_rates = spec.gbr_rate_choices_bps.empty()
                             ? default_gbr_rate_choices()
                             : spec.gbr_rate_choices_bps;
  const auto be_rates = spec.be_rate_choices_bps.empty()
                            ? default_be_rate_choices()
                            : spec.be_rate_choices_bps;

  const int num_ues = spec.ue_count_choices.at(
      rng.below(spec.ue_count_choices.size()));
  const int num_gbr = static_cast<int>(std::llround(spec.gbr_fraction * num_ues));
  for (int u = 0; u < num_ues; ++u) {
    UePlacement ue;
    ue.ue_id = u;
    ue.position = Vec2{rng.uniform(0.0, spec.area_x_m),
                       rng.uniform(0.0, spec.area_y_m)};
    if (u < num_gbr) {
      int qi = spec.gbr_5qi_choices.at(rng.below(spec.gbr_5qi_choices.size()));
      double rate = gbr_rates.at(rng.below(gbr_rates.size()));
      ue.flow = FlowSpec::gbr(u, qi, rate);
    } else {
      double rate = be_rates.at(rng.below(be_rates.size()));
      ue.flow = FlowSpec::best_effort(u, rate);
    }
    dep.ues.push_back(std::move(ue));
  }
  return dep;
}

}  // namespace ranlb
