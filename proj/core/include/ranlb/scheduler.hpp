#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "ranlb/traffic.hpp"

namespace ranlb {

// One cell's scheduler input for one TTI. se_per_prb is the rate-adaptation
// spectral efficiency the cell would schedule on each PRB (from the UE's last
// CSI report, link-adaptation margin already applied).
struct SchedCandidate {
  int ue_id = -1;
  std::uint64_t queued_bits = 0;
  double weight = 1.0;
  double avg_rate_bps = 0.0;
  std::span<const double> se_per_prb;
};

struct UeGrant {
  int ue_id = -1;
  std::vector<int> prbs;
  std::uint64_t granted_bits = 0;  // transport block size at scheduled SE
  double sched_se_mean = 0.0;
};

// Per-cell, per-TTI allocation. PRB -> ue_id, -1 when idle; a PRB is never
// assigned twice (OFDMA orthogonality holds by construction).
struct AllocationSlice {
  std::vector<int> prb_to_ue;
  std::vector<UeGrant> grants;
  int allocated_prbs = 0;

  const UeGrant* grant_for(int ue_id) const {
    for (const auto& g : grants)
      if (g.ue_id == ue_id) return &g;
    return nullptr;
  }
};

// Weighted-PF assignment: every PRB goes to the backlogged UE maximizing
//   weight * SE(prb) / max(avg_rate, eps)
// (ties to the lowest ue_id, zero-SE candidates never scheduled). A UE leaves
// the race once its queue is covered at the scheduled SE.
AllocationSlice schedule_prbs(std::span<const SchedCandidate> candidates,
                              int num_prbs, double subcarrier_spacing_hz,
                              double tti_s, double eps_bps);

inline std::uint64_t prb_bits(double se, double subcarrier_spacing_hz,
                              double tti_s) {
  return static_cast<std::uint64_t>(12.0 * subcarrier_spacing_hz * se * tti_s);
}

struct ArqOutcome {
  bool success = false;
  std::uint64_t delivered_bits = 0;
  std::uint64_t dropped_bits = 0;  // packets exceeding the retransmission cap
};

// RLC-style ARQ for one UE-TTI: the transport block decodes iff the realized
// mean SE over the allocated PRBs is at least the scheduled mean. On failure
// the covered packets stay at the queue head with their retransmission count
// bumped; a packet failing for the (max_retx+1)-th time is dropped.
ArqOutcome arq_step(std::deque<Packet>& queue, std::uint64_t tb_bits,
                    double sched_se_mean, double realized_se_mean,
                    int max_retx);

}  // namespace ranlb
