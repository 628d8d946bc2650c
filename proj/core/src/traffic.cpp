#include "ranlb/traffic.hpp"

#include <algorithm>

namespace ranlb {

int delay_budget_ttis(int five_qi) {
  switch (five_qi) {
    case 2: return 150;
    case 3: return 50;
    case 67: return 30;
    case 9: return 300;
  }
  throw std::invalid_argument("unsupported 5QI: " + std::to_string(five_qi));
}

double gfbr_ratio(int five_qi) {
  switch (five_qi) {
    case 2: return 0.6;
    case 3: return 0.9;
    case 67: return 0.8;
  }
  throw std::invalid_argument("5QI has no GFBR ratio: " + std::to_string(five_qi));
}

FlowSpec FlowSpec::gbr(int ue_id, int five_qi, double rate_bps) {
  FlowSpec f;
  f.ue_id = ue_id;
  f.kind = FlowKind::GBR;
  f.five_qi = five_qi;
  f.arrival_rate_bps = rate_bps;
  f.mfbr_bps = rate_bps;
  f.gfbr_bps = gfbr_ratio(five_qi) * rate_bps;
  f.delay_budget_ttis = ranlb::delay_budget_ttis(five_qi);
  return f;
}

FlowSpec FlowSpec::best_effort(int ue_id, double rate_bps) {
  FlowSpec f;
  f.ue_id = ue_id;
  f.kind = FlowKind::BE;
  f.five_qi = 9;
  f.arrival_rate_bps = rate_bps;
  f.mfbr_bps = rate_bps;
  f.gfbr_bps = 0.0;
  f.delay_budget_ttis = ranlb::delay_budget_ttis(9);
  return f;
}

int generate_arrival_count(const FlowSpec& flow, double tti_s,
                           std::uint64_t packet_bits, rng::Stream& rng) {
  double mean = flow.arrival_rate_bps * tti_s / static_cast<double>(packet_bits);
  return rng.poisson(mean);
}

std::uint64_t expire_packets(std::deque<Packet>& queue, std::int64_t now_tti,
                             int delay_budget_ttis) {
  std::uint64_t dropped = 0;
  while (!queue.empty() &&
         now_tti - queue.front().arrival_tti > delay_budget_ttis) {
    dropped += queue.front().bits_remaining;
    queue.pop_front();
  }
  return dropped;
}

double pf_weight(const FlowSpec& flow, double avg_rate_bps, double eps_bps) {
  if (flow.kind == FlowKind::GBR && avg_rate_bps < flow.gfbr_bps) {
    double ratio = flow.gfbr_bps / std::max(avg_rate_bps, eps_bps);
    return ratio * ratio;
  }
  return 1.0;
}

double qos_metric(double avg_rate_bps, double gfbr_bps, double mfbr_bps) {
  if (avg_rate_bps < gfbr_bps) return 0.0;
  return std::min(avg_rate_bps / mfbr_bps, 1.0);
}

}  // namespace ranlb
