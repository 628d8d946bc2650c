#pragma once

#include <cstdint>

#include "ranlb/rng.hpp"

namespace ranlb {

// Stochastic channel for one drop. Shadowing is a log-normal draw fixed per
// (site, UE) for the drop's lifetime; fast fading is a unit-mean exponential
// power gain per (cell, UE, PRB, TTI), independent across PRBs and redrawn
// every TTI. Both are counter-based, so any draw can be revisited (stale CSI)
// without storing state.
class ChannelModel {
 public:
  ChannelModel(std::uint64_t channel_seed, double shadowing_sigma_db)
      : seed_(channel_seed), sigma_db_(shadowing_sigma_db) {}

  double shadowing_db(int site_id, int ue_id) const {
    std::uint64_t key = rng::mix_key(seed_, 0x5eed, site_id, ue_id);
    double u1 = rng::hash_unit(key);
    double u2 = rng::hash_unit(splitmix_follow(key));
    double z = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    return sigma_db_ * z;
  }

  double fading_gain(int cell_id, int ue_id, int prb, std::int64_t tti) const {
    std::uint64_t key =
        rng::mix_key(seed_, static_cast<std::uint64_t>(tti) + 1,
                     (static_cast<std::uint64_t>(cell_id) << 24) ^
                         static_cast<std::uint64_t>(ue_id),
                     prb);
    return -std::log(rng::hash_unit(key));
  }

  std::uint64_t seed() const { return seed_; }
  double sigma_db() const { return sigma_db_; }

 private:
  static std::uint64_t splitmix_follow(std::uint64_t k) {
    return rng::splitmix64(k ^ 0xa0761d6478bd642fULL);
  }

  std::uint64_t seed_;
  double sigma_db_;
};

}  // namespace ranlb
