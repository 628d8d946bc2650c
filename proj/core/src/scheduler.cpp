#include "ranlb/scheduler.hpp"

#include <algorithm>

namespace ranlb {

AllocationSlice schedule_prbs(std::span<const SchedCandidate> candidates,
                              int num_prbs, double subcarrier_spacing_hz,
                              double tti_s, double eps_bps) {
  AllocationSlice out;
  out.prb_to_ue.assign(num_prbs, -1);

  struct Live {
    const SchedCandidate* c;
    std::uint64_t granted = 0;
    double metric_scale = 0.0;  // weight / max(avg_rate, eps)
  };
  std::vector<Live> live;
  live.reserve(candidates.size());
  for (const auto& c : candidates) {
    if (c.queued_bits == 0) continue;
    Live l;
    l.c = &c;
    l.metric_scale = c.weight / std::max(c.avg_rate_bps, eps_bps);
    live.push_back(l);
  }

  std::vector<UeGrant> grants;
  for (int j = 0; j < num_prbs; ++j) {
    int best = -1;
    double best_metric = 0.0;
    for (std::size_t i = 0; i < live.size(); ++i) {
      const Live& l = live[i];
      if (l.granted >= l.c->queued_bits) continue;
      double se = l.c->se_per_prb[j];
      if (se <= 0.0) continue;
      double metric = l.metric_scale * se;
      if (best < 0 || metric > best_metric ||
          (metric == best_metric && l.c->ue_id < live[best].c->ue_id)) {
        best = static_cast<int>(i);
        best_metric = metric;
      }
    }
    if (best < 0) continue;

    Live& winner = live[best];
    double se = winner.c->se_per_prb[j];
    winner.granted += prb_bits(se, subcarrier_spacing_hz, tti_s);

    UeGrant* g = nullptr;
    for (auto& existing : grants)
      if (existing.ue_id == winner.c->ue_id) g = &existing;
    if (g == nullptr) {
      grants.push_back(UeGrant{winner.c->ue_id, {}, 0, 0.0});
      g = &grants.back();
    }
    g->prbs.push_back(j);
    out.prb_to_ue[j] = winner.c->ue_id;
    ++out.allocated_prbs;
  }

  for (auto& g : grants) {
    const SchedCandidate* c = nullptr;
    for (const auto& cand : candidates)
      if (cand.ue_id == g.ue_id) c = &cand;
    double se_sum = 0.0;
    std::uint64_t bits = 0;
    for (int j : g.prbs) {
      se_sum += c->se_per_prb[j];
      bits += prb_bits(c->se_per_prb[j], subcarrier_spacing_hz, tti_s);
    }
    g.sched_se_mean = se_sum / static_cast<double>(g.prbs.size());
    g.granted_bits = bits;
  }
  out.grants = std::move(grants);
  return out;
}

ArqOutcome arq_step(std::deque<Packet>& queue, std::uint64_t tb_bits,
                    double sched_se_mean, double realized_se_mean,
                    int max_retx) {
  ArqOutcome out;
  if (tb_bits == 0) {
    out.success = true;
    return out;
  }
  if (realized_se_mean < sched_se_mean) {
    // Decode failure: bump every packet the block would have carried.
    std::uint64_t cover = tb_bits;
    for (auto it = queue.begin(); it != queue.end() && cover > 0;) {
      cover -= std::min(cover, it->bits_remaining);
      it->retx_count += 1;
      if (it->retx_count > max_retx) {
        out.dropped_bits += it->bits_remaining;
        it = queue.erase(it);
      } else {
        ++it;
      }
    }
    return out;
  }
  out.success = true;
  std::uint64_t budget = tb_bits;
  while (budget > 0 && !queue.empty()) {
    Packet& head = queue.front();
    std::uint64_t sent = std::min(budget, head.bits_remaining);
    head.bits_remaining -= sent;
    out.delivered_bits += sent;
    budget -= sent;
    if (head.bits_remaining == 0) queue.pop_front();
  }
  return out;
}

}  // namespace ranlb
