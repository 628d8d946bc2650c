#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ranlb {

enum class Band { n29, n66, n1 };

inline const char* band_name(Band b) {
  switch (b) {
    case Band::n29: return "n29";
    case Band::n66: return "n66";
    case Band::n1: return "n1";
  }
  return "?";
}

Band band_from_name(const std::string& name);

constexpr int kSubcarriersPerPrb = 12;

// 90% of the channel bandwidth is usable spectrum; the rest is guard band.
// 10 MHz @ 15 kHz SCS -> 50 PRBs, 5 MHz -> 25 PRBs.
constexpr double kUsableBandwidthFraction = 0.9;

struct BandConfig {
  Band band_id = Band::n29;
  double carrier_freq_hz = 0.0;
  double channel_bw_hz = 0.0;
  double subcarrier_spacing_hz = 15e3;
  int num_prbs = 0;

  int num_subcarriers() const { return num_prbs * kSubcarriersPerPrb; }

  static BandConfig make(Band id, double carrier_freq_hz, double channel_bw_hz,
                         double scs_hz = 15e3) {
    if (carrier_freq_hz <= 0 || channel_bw_hz <= 0 || scs_hz <= 0)
      throw std::invalid_argument("BandConfig: frequencies must be positive");
    BandConfig b;
    b.band_id = id;
    b.carrier_freq_hz = carrier_freq_hz;
    b.channel_bw_hz = channel_bw_hz;
    b.subcarrier_spacing_hz = scs_hz;
    b.num_prbs = static_cast<int>(std::floor(
        kUsableBandwidthFraction * channel_bw_hz / (kSubcarriersPerPrb * scs_hz)));
    return b;
  }
};

// Deployment defaults: n29 (725 MHz, 10 MHz), n66 (2190 MHz, 5 MHz),
// n1 (2140 MHz, 5 MHz), all at 15 kHz subcarrier spacing.
std::array<BandConfig, 3> default_bands();

}  // namespace ranlb
