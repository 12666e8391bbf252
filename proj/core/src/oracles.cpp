#include "pdla/oracles.hpp"

#include <algorithm>
#include <sstream>
#include <type_traits>

namespace pdla {

std::string_view to_string(OracleMethod method) {
  switch (method) {
    case OracleMethod::dp:
      return "dp";
    case OracleMethod::brute_force:
      return "brute_force";
    case OracleMethod::closed_form:
      return "closed_form";
  }
  return "unknown";
}

OracleReport opt(const AnyInstance& instance) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport report = std::visit(
      [](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        OracleReport r;
        if constexpr (std::is_same_v<T, CoverInstance>) {
          const auto o = offline_opt_setcover_brute(inst);
          r.opt_cost = o.cost;
          r.witness.assign(o.witness.begin(), o.witness.end());
          r.method = OracleMethod::brute_force;
        } else if constexpr (std::is_same_v<T, SkiInstance>) {
          inst.validate();
          r.opt_cost = static_cast<double>(std::min(inst.N, inst.B));
          if (inst.N > inst.B) r.witness.push_back(1);
          r.method = OracleMethod::closed_form;
        } else if constexpr (std::is_same_v<T, BahncardInstance>) {
          const auto o = offline_opt_bahncard(inst);
          r.opt_cost = o.cost;
          r.witness.assign(o.card_times.begin(), o.card_times.end());
          r.method = OracleMethod::dp;
        } else {
          const auto o = offline_opt_tcp(inst);
          r.opt_cost = o.cost;
          r.witness.assign(o.ack_times.begin(), o.ack_times.end());
          r.method = OracleMethod::dp;
        }
        return r;
      },
      instance);
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

double s_cost(const AnyInstance& instance, const AnyPrediction& prediction) {
  if (instance.index() != prediction.index()) {
    throw DomainError("s_cost: instance and prediction are for different problems");
  }
  switch (instance.index()) {
    case 0:
      return prediction_cost_setcover(std::get<CoverInstance>(instance),
                                      std::get<CoverPrediction>(prediction))
          .s_cost;
    case 1: {
      const auto& inst = std::get<SkiInstance>(instance);
      inst.validate();
      const auto& pred = std::get<SkiPrediction>(prediction);
      return static_cast<double>(pred.n_pred >= inst.B ? inst.B : inst.N);
    }
    case 2:
      return prediction_cost_bahncard(std::get<BahncardInstance>(instance),
                                      std::get<BahncardPrediction>(prediction))
          .s_cost;
    default:
      return prediction_cost_tcp(std::get<TcpInstance>(instance),
                                 std::get<TcpPrediction>(prediction))
          .s_cost;
  }
}

double brute_force_setcover(const CoverInstance& instance) {
  instance.validate();
  const std::size_t m = instance.sets.size();
  if (m > kMaxPlainEnumerationSets) {
    std::ostringstream os;
    os << "plain set cover enumeration supports at most "
       << kMaxPlainEnumerationSets << " sets, got " << m;
    throw SizeError(os.str());
  }
  // Bitmask of the sets containing each arrived element.
  std::vector<std::uint32_t> need;
  const auto by_element = instance.sets_by_element();
  std::vector<ElementId> arrived = instance.arrivals;
  std::sort(arrived.begin(), arrived.end());
  arrived.erase(std::unique(arrived.begin(), arrived.end()), arrived.end());
  for (ElementId e : arrived) {
    std::uint32_t mask = 0;
    for (SetId s : by_element[e]) mask |= std::uint32_t{1} << s;
    if (mask == 0) throw InfeasibleError("element belongs to no set");
    need.push_back(mask);
  }
  double best = kInfinity;
  for (std::uint32_t family = 0; family < (std::uint32_t{1} << m); ++family) {
    bool covers = true;
    for (std::uint32_t mask : need) {
      if ((mask & family) == 0) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    double cost = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      if (family >> s & 1U) cost += instance.sets[s].weight;
    }
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace pdla
