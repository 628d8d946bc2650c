#include "ranlb/radio.hpp"

#include <algorithm>

namespace ranlb {

double path_loss_db(const BandConfig& band, double dist_m) {
  double d = std::max(dist_m, kMinPathLossDistanceM);
  double d_km = d / 1000.0;
  double f_ghz = band.carrier_freq_hz / 1e9;
  return 128.1 + 37.6 * std::log10(d_km) + 20.0 * std::log10(f_ghz / 2.0);
}

double rsrp_dbm(const CellNode& cell, const BandConfig& band, Vec2 ue_position,
                double shadowing_db) {
  double pl = path_loss_db(band, distance_m(cell.position, ue_position));
  double per_subcarrier_split = 10.0 * std::log10(band.num_subcarriers());
  return cell.tx_power_dbm - pl - shadowing_db - per_subcarrier_split;
}

double noise_per_prb_mw(const BandConfig& band, double noise_figure_db) {
  double density_dbm = kThermalNoiseDbmPerHz + noise_figure_db;
  return dbm_to_mw(density_dbm) * band.subcarrier_spacing_hz * kSubcarriersPerPrb;
}

double sinr_prb(double serving_prb_power_mw, double serving_fading_gain,
                std::span<const Interferer> interferers, double noise_mw) {
  double interference = 0.0;
  for (const auto& i : interferers) {
    if (i.occupied) interference += i.prb_power_mw * i.fading_gain;
  }
  return serving_prb_power_mw * serving_fading_gain / (interference + noise_mw);
}

double spectral_efficiency(double sinr_linear) {
  static const double min_sinr = db_to_linear(McsTable::builtin().threshold_db(0));
  if (sinr_linear < min_sinr) return 0.0;
  return std::min(kSeScale * std::log2(1.0 + sinr_linear), kSeMaxBpsHz);
}

double wideband_sinr_db(double serving_prb_power_mw,
                        std::span<const std::pair<double, double>>
                            interferer_power_and_utilization,
                        double noise_mw) {
  double interference = 0.0;
  for (const auto& [power, util] : interferer_power_and_utilization)
    interference += power * util;
  return linear_to_db(serving_prb_power_mw / (interference + noise_mw));
}

double instantaneous_rate_bps(std::span<const double> allocated_prb_se,
                              double subcarrier_spacing_hz) {
  double rate = 0.0;
  for (double se : allocated_prb_se)
    rate += kSubcarriersPerPrb * subcarrier_spacing_hz * se;
  return rate;
}

}  // namespace ranlb
