#include "pdla/setcover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pdla {

namespace {

constexpr std::size_t kMaxIterationsPerElement = 1'000'000;

std::vector<char> prediction_mask(const CoverInstance& instance,
                                  const CoverPrediction& prediction) {
  std::vector<char> in_prediction(instance.sets.size(), 0);
  for (SetId s : prediction.sets) {
    if (s >= instance.sets.size()) {
      std::ostringstream os;
      os << "prediction references set " << s << " but the instance has "
         << instance.sets.size();
      throw DomainError(os.str());
    }
    in_prediction[s] = 1;
  }
  return in_prediction;
}

void throw_uncoverable(ElementId e) {
  std::ostringstream os;
  os << "element " << e << " arrived but belongs to no set";
  throw InfeasibleError(os.str());
}

std::vector<ElementId> distinct_arrivals(const CoverInstance& instance) {
  std::vector<ElementId> out = instance.arrivals;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void CoverInstance::validate() const {
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (!(sets[s].weight >= 1.0) || !std::isfinite(sets[s].weight)) {
      std::ostringstream os;
      os << "set " << s << " has weight " << sets[s].weight
         << "; weights must be finite and >= 1";
      throw DomainError(os.str());
    }
    for (ElementId e : sets[s].elements) {
      if (e >= n) {
        std::ostringstream os;
        os << "set " << s << " contains element " << e << " outside [0, " << n
           << ")";
        throw DomainError(os.str());
      }
    }
  }
  for (ElementId e : arrivals) {
    if (e >= n) {
      std::ostringstream os;
      os << "arrival " << e << " outside [0, " << n << ")";
      throw DomainError(os.str());
    }
  }
}

std::vector<std::vector<SetId>> CoverInstance::sets_by_element() const {
  std::vector<std::vector<SetId>> by_element(n);
  for (SetId s = 0; s < sets.size(); ++s) {
    for (ElementId e : sets[s].elements) {
      auto& list = by_element[e];
      if (list.empty() || list.back() != s) list.push_back(s);
    }
  }
  return by_element;
}

std::size_t CoverInstance::max_degree() const {
  const auto by_element = sets_by_element();
  std::size_t d = 0;
  for (ElementId e : arrivals) d = std::max(d, by_element[e].size());
  return d;
}

double CoverRun::primal_cost(const CoverInstance& instance) const {
  double cost = 0.0;
  for (SetId s = 0; s < instance.sets.size(); ++s) {
    cost += instance.sets[s].weight * x.get(s);
  }
  return cost;
}

CoverRun run_pdla_setcover(const CoverInstance& instance,
                           const CoverPrediction& prediction, double lambda,
                           const EpsilonPolicy& eps, bool keep_history) {
  require_lambda(lambda);
  instance.validate();
  const auto by_element = instance.sets_by_element();
  const auto in_prediction = prediction_mask(instance, prediction);

  CoverRun run{MonotoneVarStore(keep_history), {}, {}, 0.0, {}, 0};
  run.y.assign(instance.n, 0.0);
  run.max_degree = instance.max_degree();

  std::vector<SetId> members;
  for (ElementId e : instance.arrivals) {
    const auto& family = by_element[e];
    if (family.empty()) throw_uncoverable(e);
    const auto degree = static_cast<double>(family.size());
    const auto predicted_degree = static_cast<double>(
        std::count_if(family.begin(), family.end(),
                      [&](SetId s) { return in_prediction[s] != 0; }));
    const bool covered_by_prediction = predicted_degree > 0;

    for (std::size_t iter = 0;; ++iter) {
      double sum = 0.0;
      for (SetId s : family) sum += run.x[s];
      if (sum >= 1.0 - eps.coverage_eps) break;
      if (iter == kMaxIterationsPerElement) {
        throw std::runtime_error("set cover: iteration cap reached");
      }

      CoverIteration it;
      it.element = e;
      it.covered_by_prediction = covered_by_prediction;
      it.sum_before = sum;
      for (SetId s : family) {
        const double w = instance.sets[s].weight;
        const double old_value = run.x[s];
        double new_value;
        if (covered_by_prediction) {
          new_value = old_value * (1.0 + 1.0 / w) + lambda / (w * degree);
          if (in_prediction[s]) {
            new_value += (1.0 - lambda) / (w * predicted_degree);
          }
        } else {
          new_value = old_value * (1.0 + 1.0 / w) + 1.0 / (w * degree);
        }
        run.x.raise_to(s, new_value);
        const double delta = w * (new_value - old_value);
        if (covered_by_prediction && in_prediction[s]) {
          it.predicted_part += delta;
        } else {
          it.unpredicted_part += delta;
        }
      }
      it.primal_increase = it.predicted_part + it.unpredicted_part;
      run.ledger.charge_prediction(it.predicted_part);
      run.ledger.charge_other(it.unpredicted_part);
      if (!covered_by_prediction) run.cost_uncovered_part += it.primal_increase;
      run.y[e] += 1.0;
      run.ledger.add_dual(1.0);
      run.iterations.push_back(it);
    }
  }
  return run;
}

CoverRun run_pure_online_setcover(const CoverInstance& instance,
                                  const EpsilonPolicy& eps, bool keep_history) {
  instance.validate();
  const auto by_element = instance.sets_by_element();

  CoverRun run{MonotoneVarStore(keep_history), {}, {}, 0.0, {}, 0};
  run.y.assign(instance.n, 0.0);
  run.max_degree = instance.max_degree();

  for (ElementId e : instance.arrivals) {
    const auto& family = by_element[e];
    if (family.empty()) throw_uncoverable(e);
    const auto degree = static_cast<double>(family.size());
    for (std::size_t iter = 0;; ++iter) {
      double sum = 0.0;
      for (SetId s : family) sum += run.x[s];
      if (sum >= 1.0 - eps.coverage_eps) break;
      if (iter == kMaxIterationsPerElement) {
        throw std::runtime_error("set cover: iteration cap reached");
      }
      CoverIteration it;
      it.element = e;
      it.sum_before = sum;
      for (SetId s : family) {
        const double w = instance.sets[s].weight;
        const double old_value = run.x[s];
        const double new_value =
            old_value * (1.0 + 1.0 / w) + 1.0 / (w * degree);
        run.x.raise_to(s, new_value);
        it.unpredicted_part += w * (new_value - old_value);
      }
      it.primal_increase = it.unpredicted_part;
      run.ledger.charge_other(it.unpredicted_part);
      run.cost_uncovered_part += it.primal_increase;
      run.y[e] += 1.0;
      run.ledger.add_dual(1.0);
      run.iterations.push_back(it);
    }
  }
  return run;
}

CoverDualCheck check_cover_dual_feasibility(const CoverRun& run,
                                            const CoverInstance& instance,
                                            double lambda, double eps) {
  require_lambda(lambda);
  CoverDualCheck check;
  const double d = static_cast<double>(std::max<std::size_t>(run.max_degree, 1));
  check.bound = std::log2(3.0 * d / lambda + 1.0);
  for (const auto& set : instance.sets) {
    std::vector<ElementId> elements = set.elements;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    double load = 0.0;
    for (ElementId e : elements) {
      if (e < run.y.size()) load += run.y[e];
    }
    check.max_violation_factor =
        std::max(check.max_violation_factor, load / set.weight);
  }
  check.ok = check.max_violation_factor <= check.bound + eps;
  return check;
}

CoverPredictionCost prediction_cost_setcover(const CoverInstance& instance,
                                             const CoverPrediction& prediction) {
  const auto in_prediction = prediction_mask(instance, prediction);
  std::vector<char> arrived(instance.n, 0);
  for (ElementId e : instance.arrivals) arrived[e] = 1;

  CoverPredictionCost result;
  std::vector<char> covered(instance.n, 0);
  for (SetId s = 0; s < instance.sets.size(); ++s) {
    if (!in_prediction[s]) continue;
    bool touches = false;
    for (ElementId e : instance.sets[s].elements) {
      if (arrived[e]) {
        touches = true;
        covered[e] = 1;
      }
    }
    if (touches) result.s_cost += instance.sets[s].weight;
  }
  for (ElementId e : instance.arrivals) {
    if (!covered[e]) result.is_feasible = false;
  }
  return result;
}

namespace {

struct BranchAndBound {
  const CoverInstance& instance;
  const std::vector<std::vector<SetId>>& by_element;
  std::vector<ElementId> targets;
  std::vector<int> cover_count;  // per target index
  std::vector<std::vector<std::size_t>> target_slots;  // per set
  std::vector<SetId> chosen;
  double best = kInfinity;
  std::vector<SetId> best_sets;

  void search(double cost, std::size_t uncovered) {
    if (uncovered == 0) {
      if (cost < best) {
        best = cost;
        best_sets = chosen;
      }
      return;
    }
    // Branch on the uncovered target with the fewest candidate sets.
    std::size_t pick = targets.size();
    std::size_t fewest = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (cover_count[i] != 0) continue;
      const std::size_t k = by_element[targets[i]].size();
      if (k < fewest) {
        fewest = k;
        pick = i;
      }
    }
    std::vector<SetId> options = by_element[targets[pick]];
    std::sort(options.begin(), options.end(), [&](SetId a, SetId b) {
      return instance.sets[a].weight < instance.sets[b].weight;
    });
    for (SetId s : options) {
      const double next = cost + instance.sets[s].weight;
      if (next >= best) break;
      std::size_t newly = 0;
      for (std::size_t slot : target_slots[s]) {
        if (cover_count[slot]++ == 0) ++newly;
      }
      chosen.push_back(s);
      search(next, uncovered - newly);
      chosen.pop_back();
      for (std::size_t slot : target_slots[s]) --cover_count[slot];
    }
  }
};

}  // namespace

CoverOptimum offline_opt_setcover_brute(const CoverInstance& instance) {
  instance.validate();
  if (instance.sets.size() > kMaxBruteForceSets) {
    std::ostringstream os;
    os << "offline set cover oracle supports at most " << kMaxBruteForceSets
       << " sets, got " << instance.sets.size();
    throw SizeError(os.str());
  }
  const auto by_element = instance.sets_by_element();
  BranchAndBound bb{instance, by_element, distinct_arrivals(instance), {}, {},
                    {},       kInfinity,  {}};
  for (ElementId e : bb.targets) {
    if (by_element[e].empty()) throw_uncoverable(e);
  }
  bb.cover_count.assign(bb.targets.size(), 0);
  bb.target_slots.assign(instance.sets.size(), {});
  for (std::size_t i = 0; i < bb.targets.size(); ++i) {
    for (SetId s : by_element[bb.targets[i]]) bb.target_slots[s].push_back(i);
  }
  bb.search(0.0, bb.targets.size());

  CoverOptimum opt;
  opt.cost = bb.targets.empty() ? 0.0 : bb.best;
  opt.witness = bb.best_sets;
  std::sort(opt.witness.begin(), opt.witness.end());
  return opt;
}

}  // namespace pdla
