#include "clusterlab/partitional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <type_traits>

namespace clusterlab {

static_assert(std::is_same_v<int, kernels::Label>, "cluster labels are fed to the kernels unconverted");

std::string to_string(Objective objective) {
  switch (objective) {
    case Objective::kmeans: return "kmeans";
    case Objective::kmedian: return "kmedian";
    case Objective::kmedoids: return "kmedoids";
    case Objective::minsum: return "minsum";
    case Objective::mindiameter: return "mindiameter";
    case Objective::kcenter: return "kcenter";
    case Objective::ratiocut: return "ratiocut";
  }
  return "unknown";
}

std::optional<Objective> parse_objective(std::string_view text) {
  for (Objective o : kAllObjectives) {
    if (text == to_string(o)) return o;
  }
  return std::nullopt;
}

TableKind required_kind(Objective objective) {
  return objective == Objective::ratiocut ? TableKind::similarity : TableKind::distance;
}

bool is_weight_free(Objective objective) {
  return objective == Objective::mindiameter || objective == Objective::kcenter;
}

namespace {

void check_kind(Objective objective, const WeightedDataset& ds) {
  if (ds.kind() != required_kind(objective)) {
    throw KindMismatch(to_string(objective) + " requires a " + to_string(required_kind(objective)) + " table, got " +
                       to_string(ds.kind()));
  }
}

}  // namespace

CostEvaluator::CostEvaluator(const WeightedDataset& ds, Objective objective)
    : objective_(objective), n_(ds.n()), weights_(ds.weights().begin(), ds.weights().end()), table_(n_ * n_, 0.0) {
  check_kind(objective, ds);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = ds.d(i, j);
      double& v = table_[i * n_ + j];
      switch (objective) {
        case Objective::kmeans: v = d * d * weights_[i] * weights_[j]; break;
        case Objective::minsum: v = d * weights_[i] * weights_[j]; break;
        case Objective::ratiocut: v = i == j ? 0.0 : d * weights_[i] * weights_[j]; break;
        // Row e holds the cost of serving each x from exemplar e.
        case Objective::kmedian: v = d * weights_[j]; break;
        case Objective::kmedoids: v = d * d * weights_[j]; break;
        case Objective::mindiameter:
        case Objective::kcenter: v = d; break;
      }
    }
  }
}

double CostEvaluator::operator()(std::span<const int> labels, int k) const {
  const auto& kt = kernels::active();
  const auto kk = static_cast<std::size_t>(k);
  const int* lab = labels.data();
  const auto row = [&](std::size_t i) { return table_.data() + i * n_; };

  switch (objective_) {
    case Objective::kmeans:
    case Objective::minsum:
    case Objective::ratiocut: {
      acc_.assign(kk, {});
      cluster_weight_.assign(kk, 0.0);
      for (std::size_t i = 0; i < n_; ++i) {
        const int c = lab[i];
        const double part = objective_ == Objective::ratiocut ? kt.sum_ne(row(i), lab, n_, c)
                                                              : kt.sum_eq(row(i), lab, n_, c);
        acc_[static_cast<std::size_t>(c)].add(part);
        cluster_weight_[static_cast<std::size_t>(c)] += weights_[i];
      }
      kernels::CompensatedSum total;
      for (std::size_t c = 0; c < kk; ++c) {
        // Each unordered pair was visited from both ends.
        const double pairs = 0.5 * acc_[c].value();
        total.add(objective_ == Objective::minsum ? pairs : pairs / cluster_weight_[c]);
      }
      return total.value();
    }
    case Objective::kmedian:
    case Objective::kmedoids: {
      best_.assign(kk, std::numeric_limits<double>::infinity());
      for (std::size_t e = 0; e < n_; ++e) {
        const int c = lab[e];
        double& b = best_[static_cast<std::size_t>(c)];
        b = std::min(b, kt.sum_eq(row(e), lab, n_, c));
      }
      kernels::CompensatedSum total;
      for (double b : best_) total.add(b);
      return total.value();
    }
    case Objective::mindiameter: {
      double diameter = 0.0;
      for (std::size_t i = 0; i < n_; ++i) diameter = std::max(diameter, kt.max_eq(row(i), lab, n_, lab[i]));
      return diameter;
    }
    case Objective::kcenter: {
      best_.assign(kk, std::numeric_limits<double>::infinity());
      for (std::size_t e = 0; e < n_; ++e) {
        double& b = best_[static_cast<std::size_t>(lab[e])];
        b = std::min(b, kt.max_eq(row(e), lab, n_, lab[e]));
      }
      return *std::max_element(best_.begin(), best_.end());
    }
  }
  return 0.0;
}

double cost(Objective objective, const Clustering& c, const WeightedDataset& ds) {
  if (c.n() != ds.n()) throw InvalidInput("clustering and dataset sizes differ");
  return CostEvaluator(ds, objective)(c.labels(), c.k());
}

double kmeans_cost(const Clustering& c, const WeightedDataset& ds) { return cost(Objective::kmeans, c, ds); }
double minsum_cost(const Clustering& c, const WeightedDataset& ds) { return cost(Objective::minsum, c, ds); }
double kmedian_cost(const Clustering& c, const WeightedDataset& ds) { return cost(Objective::kmedian, c, ds); }
double kmedoids_cost(const Clustering& c, const WeightedDataset& ds) { return cost(Objective::kmedoids, c, ds); }
double mindiameter_cost(const Clustering& c, const WeightedDataset& ds) {
  return cost(Objective::mindiameter, c, ds);
}
double kcenter_cost(const Clustering& c, const WeightedDataset& ds) { return cost(Objective::kcenter, c, ds); }
double ratiocut_cost(const Clustering& c, const WeightedDataset& ds) { return cost(Objective::ratiocut, c, ds); }

CostValue evaluate(const ObjectiveSpec& spec, const Clustering& c, const WeightedDataset& ds) {
  return {cost(spec.objective, c, ds), spec};
}

Clustering exact_minimize(const WeightedDataset& ds, const ObjectiveSpec& spec, const MinimizeOptions& options) {
  check_kind(spec.objective, ds);
  const std::size_t n = ds.n();
  if (!(1 < spec.k && static_cast<std::size_t>(spec.k) < n)) {
    throw InvalidInput("exact_minimize requires 1 < k < n (k=" + std::to_string(spec.k) + ", n=" + std::to_string(n) +
                       ")");
  }
  check_enumeration_cap(n, options.cap);

  // Argmin is scale invariant; unit max weight keeps spiked products in range.
  const auto w = ds.weights();
  const double wmax = *std::max_element(w.begin(), w.end());
  std::vector<double> scaled(w.begin(), w.end());
  for (double& x : scaled) x /= wmax;
  const CostEvaluator evaluator(ds.with_weights(std::move(scaled)), spec.objective);

  std::vector<double> costs;
  costs.reserve(static_cast<std::size_t>(stirling2(n, static_cast<std::size_t>(spec.k))));
  double best = std::numeric_limits<double>::infinity();
  RestrictedGrowthEnumerator e(n, spec.k);
  do {
    const double value = evaluator(e.labels(), spec.k);
    costs.push_back(value);
    best = std::min(best, value);
  } while (e.next());

  const double threshold = best + options.tie_tolerance * std::abs(best);
  const auto first = static_cast<std::uint64_t>(
      std::find_if(costs.begin(), costs.end(), [&](double v) { return v <= threshold; }) - costs.begin());

  RestrictedGrowthEnumerator replay(n, spec.k);
  while (replay.index() < first) replay.next();
  return Clustering::from_labels(replay.labels());
}

}  // namespace clusterlab
