#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "ranlb/rng.hpp"

namespace ranlb {

enum class FlowKind { GBR, BE };

// 5QI -> packet delay budget in 1 ms TTIs (3GPP PDB values).
int delay_budget_ttis(int five_qi);
// 5QI -> GFBR/MFBR ratio rho: 0.6 / 0.9 / 0.8 for 5QIs 2 / 3 / 67.
double gfbr_ratio(int five_qi);

struct FlowSpec {
  int ue_id = -1;
  FlowKind kind = FlowKind::BE;
  int five_qi = 9;
  double mfbr_bps = 0.0;         // = the flow's Poisson arrival rate
  double gfbr_bps = 0.0;         // rho * MFBR for GBR, 0 for BE
  int delay_budget_ttis = 300;   // tau_u
  double arrival_rate_bps = 0.0;

  static FlowSpec gbr(int ue_id, int five_qi, double rate_bps);
  static FlowSpec best_effort(int ue_id, double rate_bps);
};

struct Packet {
  std::uint64_t bits_remaining = 0;
  std::int64_t arrival_tti = 0;
  int retx_count = 0;
};

// Poisson packet count for one TTI; every packet carries packet_bits.
int generate_arrival_count(const FlowSpec& flow, double tti_s,
                           std::uint64_t packet_bits, rng::Stream& rng);

// Drops every packet strictly older than the delay budget (age > tau keeps
// the boundary packet). Returns total dropped bits. Queue is arrival-ordered.
std::uint64_t expire_packets(std::deque<Packet>& queue, std::int64_t now_tti,
                             int delay_budget_ttis);

// Weighted-PF QoS weight: starved GBR flows get (GFBR / max(rbar, eps))^2,
// everything else 1.
double pf_weight(const FlowSpec& flow, double avg_rate_bps, double eps_bps);

// Eq.-(2) QoS metric for GBR flows; undefined (throws) for BE.
double qos_metric(double avg_rate_bps, double gfbr_bps, double mfbr_bps);

inline double qos_metric_for(const FlowSpec& flow, double avg_rate_bps) {
  if (flow.kind != FlowKind::GBR)
    throw std::invalid_argument("qos_metric: BE flow has no QoS metric");
  return qos_metric(avg_rate_bps, flow.gfbr_bps, flow.mfbr_bps);
}

// Sliding mean over the last `capacity` per-TTI samples. Partially filled
// windows average over the samples seen so far.
class SlidingWindow {
 public:
  explicit SlidingWindow(int capacity) : capacity_(capacity) {
    if (capacity <= 0) throw std::invalid_argument("SlidingWindow: capacity");
  }

  void push(double v) {
    if (static_cast<int>(buf_.size()) == capacity_) {
      sum_ -= buf_[head_];
      buf_[head_] = v;
      head_ = (head_ + 1) % capacity_;
    } else {
      buf_.push_back(v);
    }
    sum_ += v;
  }

  double mean() const {
    if (buf_.empty()) return 0.0;
    // Recompute instead of trusting the running sum: the window is tiny and
    // exactness matters for the windowed-rate contracts.
    double s = 0.0;
    for (double v : buf_) s += v;
    return s / static_cast<double>(buf_.size());
  }

  int count() const { return static_cast<int>(buf_.size()); }
  bool full() const { return count() == capacity_; }
  void reset() { buf_.clear(); head_ = 0; sum_ = 0.0; }

 private:
  int capacity_;
  std::vector<double> buf_;
  int head_ = 0;
  double sum_ = 0.0;
};

}  // namespace ranlb
