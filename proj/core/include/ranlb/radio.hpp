#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ranlb/band.hpp"
#include "ranlb/mcs.hpp"

namespace ranlb {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance_m(Vec2 a, Vec2 b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct CellNode {
  int cell_id = -1;
  int site_id = -1;
  int band_index = 0;  // into the deployment's band list
  Vec2 position;
  double tx_power_dbm = 44.0;
  // Windowed measurements, maintained by the simulation.
  double utilization = 0.0;
  double avg_active_ues = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
// dBm values convert to mW; all linear powers in this codebase are mW.
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

constexpr double kThermalNoiseDbmPerHz = -174.0;
constexpr double kMinPathLossDistanceM = 10.0;

// Macro-cell path loss with a frequency correction term, anchored at 2 GHz:
//   PL = 128.1 + 37.6 log10(d_km) + 20 log10(f_GHz / 2)
// Distances below 10 m are clamped.
double path_loss_db(const BandConfig& band, double distance_m);

// RSRP under the per-subcarrier reference-power convention: total cell power
// spread evenly over all usable subcarriers.
double rsrp_dbm(const CellNode& cell, const BandConfig& band, Vec2 ue_position,
                double shadowing_db);

struct Interferer {
  double prb_power_mw = 0.0;  // received per-PRB power before fading
  double fading_gain = 1.0;
  bool occupied = false;  // whether the interferer allocated this PRB this TTI
};

// Per-PRB noise power for a band (thermal density + receiver noise figure
// over 12 subcarriers).
double noise_per_prb_mw(const BandConfig& band, double noise_figure_db);

// Eq.-(1)-style per-PRB SINR: serving per-PRB power with its fading gain over
// occupied co-band interference plus noise. Returns a linear ratio.
double sinr_prb(double serving_prb_power_mw, double serving_fading_gain,
                std::span<const Interferer> interferers, double noise_mw);

constexpr double kSeScale = 0.8;   // attenuated-Shannon slope
constexpr double kSeMaxBpsHz = 7.4;  // highest supported modulation/coding

// 0 below the MCS-0 SINR, else min(0.8 log2(1+g), 7.4). Monotone.
double spectral_efficiency(double sinr_linear);

// Long-term SINR with fading averaged out and co-band interference weighted by
// each interferer's utilization (load-coupled expectation).
double wideband_sinr_db(double serving_prb_power_mw,
                        std::span<const std::pair<double, double>>
                            interferer_power_and_utilization,
                        double noise_mw);

// Sum rate of one TTI's allocation: each PRB contributes 12 * scs * SE.
double instantaneous_rate_bps(std::span<const double> allocated_prb_se,
                              double subcarrier_spacing_hz);

}  // namespace ranlb
