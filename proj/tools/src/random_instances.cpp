#include "pdla_tools/random_instances.hpp"

#include <algorithm>

namespace pdla::tools {

std::int64_t uniform_int(SeededRng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng.next_u64() % span);
}

double uniform_real(SeededRng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform01();
}

CoverInstance random_cover_instance(SeededRng& rng, std::size_t max_n,
                                    std::size_t max_m) {
  CoverInstance inst;
  inst.n = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_n)));
  const auto m = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_m)));
  inst.sets.resize(m);
  for (auto& s : inst.sets) {
    s.weight = rng.uniform01() < 0.5 ? static_cast<double>(uniform_int(rng, 1, 5))
                                     : uniform_real(rng, 1.0, 5.0);
    for (ElementId e = 0; e < inst.n; ++e) {
      if (rng.uniform01() < 0.4) s.elements.push_back(e);
    }
  }
  for (ElementId e = 0; e < inst.n; ++e) {
    bool present = false;
    for (const auto& s : inst.sets) {
      present = present || std::find(s.elements.begin(), s.elements.end(), e) !=
                               s.elements.end();
    }
    if (!present) {
      auto& s = inst.sets[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(m) - 1))];
      s.elements.insert(std::upper_bound(s.elements.begin(), s.elements.end(), e), e);
    }
  }
  const auto arrivals = uniform_int(rng, 0, 2 * static_cast<std::int64_t>(inst.n));
  for (std::int64_t i = 0; i < arrivals; ++i) {
    inst.arrivals.push_back(static_cast<ElementId>(
        uniform_int(rng, 0, static_cast<std::int64_t>(inst.n) - 1)));
  }
  return inst;
}

CoverPrediction random_cover_prediction(SeededRng& rng,
                                        const CoverInstance& instance) {
  CoverPrediction p;
  const double keep = uniform_real(rng, 0.0, 0.7);
  for (SetId s = 0; s < instance.sets.size(); ++s) {
    if (rng.uniform01() < keep) p.sets.push_back(s);
  }
  return p;
}

SkiInstance random_ski_instance(SeededRng& rng, std::int64_t max_B) {
  SkiInstance inst;
  inst.B = uniform_int(rng, 1, max_B);
  inst.N = uniform_int(rng, 0, 3 * inst.B);
  return inst;
}

SkiPrediction random_ski_prediction(SeededRng& rng, const SkiInstance& instance) {
  return SkiPrediction{uniform_int(rng, 0, 3 * instance.B)};
}

BahncardInstance random_bahncard_instance(SeededRng& rng, std::size_t max_trips) {
  BahncardInstance inst;
  const auto trips = uniform_int(rng, 0, static_cast<std::int64_t>(max_trips));
  for (std::int64_t i = 0; i < trips; ++i) inst.trips.push_back(uniform_int(rng, 0, 30));
  std::sort(inst.trips.begin(), inst.trips.end());
  inst.B = uniform_real(rng, 0.5, 6.0);
  inst.beta = rng.uniform01() < 0.2 ? 0.0 : uniform_real(rng, 0.0, 0.9);
  inst.T = uniform_int(rng, 1, 10);
  return inst;
}

BahncardPrediction random_bahncard_prediction(SeededRng& rng,
                                              const BahncardInstance&) {
  BahncardPrediction p;
  const auto cards = uniform_int(rng, 0, 3);
  for (std::int64_t i = 0; i < cards; ++i) p.cards.push_back(uniform_int(rng, 0, 30));
  std::sort(p.cards.begin(), p.cards.end());
  return p;
}

TcpInstance random_tcp_instance(SeededRng& rng, std::size_t max_steps,
                                std::int64_t d) {
  static constexpr std::int64_t kDs[] = {1, 2, 5, 10, 50, 100};
  TcpInstance inst;
  inst.d = d > 0 ? d : kDs[uniform_int(rng, 0, 5)];
  const auto horizon = uniform_int(rng, 1, 40);
  inst.counts.assign(static_cast<std::size_t>(horizon), 0);
  const auto steps = std::min<std::int64_t>(
      horizon, uniform_int(rng, 0, static_cast<std::int64_t>(max_steps)));
  std::int64_t placed = 0;
  while (placed < steps) {
    auto& c = inst.counts[static_cast<std::size_t>(uniform_int(rng, 0, horizon - 1))];
    if (c == 0) {
      c = uniform_int(rng, 1, 5);
      ++placed;
    }
  }
  return inst;
}

TcpPrediction random_tcp_prediction(SeededRng& rng, const TcpInstance& instance) {
  TcpPrediction p;
  const double keep = uniform_real(rng, 0.0, 0.5);
  for (TimeStep t = 0; t < instance.horizon(); ++t) {
    if (rng.uniform01() < keep) p.acks.push_back(t);
  }
  // Usually make sure every packet is eventually acked.
  if (rng.uniform01() < 0.8 && instance.horizon() > 0 &&
      (p.acks.empty() || p.acks.back() < instance.horizon() - 1)) {
    p.acks.push_back(instance.horizon() - 1);
  }
  return p;
}

}  // namespace pdla::tools
