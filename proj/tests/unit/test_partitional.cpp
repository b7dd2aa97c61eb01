#include <random>

#include "doctest.h"

#include "../support.hpp"
#include "clusterlab/partitional.hpp"

using namespace clusterlab;

namespace {

const auto kLine = [] { return oracle::line({0, 1, 10, 11}); };
Clustering C(std::vector<int> labels) { return Clustering::from_labels(labels); }

}  // namespace

TEST_SUITE("partitional") {

TEST_CASE("k-means examples") {
  const auto ds = kLine();
  CHECK(kmeans_cost(C({0, 0, 1, 1}), ds) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(kmeans_cost(C({0, 0, 1, 1}), ds.with_weights({3, 1, 1, 1})) == doctest::Approx(1.25).epsilon(1e-12));
  const auto dup = oracle::line({2, 2, 7, 7});
  CHECK(kmeans_cost(C({0, 0, 1, 1}), dup) == 0.0);
}

TEST_CASE("min-sum examples") {
  const auto ds = kLine();
  CHECK(minsum_cost(C({0, 0, 1, 1}), ds) == doctest::Approx(2.0));
  CHECK(minsum_cost(C({0, 0, 1, 1}), ds.with_weights({3, 1, 1, 1})) == doctest::Approx(4.0));
  CHECK(minsum_cost(C({0, 0, 1, 1}), oracle::line({2, 2, 7, 7})) == 0.0);
}

TEST_CASE("k-median and k-medoids examples") {
  const auto ds = kLine();
  CHECK(kmedian_cost(C({0, 0, 1, 1}), ds) == doctest::Approx(2.0));
  CHECK(kmedian_cost(C({0, 0, 1, 1}), ds.with_weights({3, 1, 1, 1})) == doctest::Approx(2.0));
  CHECK(kmedian_cost(C({0, 1, 2, 2}), ds) == doctest::Approx(1.0));
  CHECK(kmedoids_cost(C({0, 0, 1, 1}), ds) == doctest::Approx(2.0));
  CHECK(kmedoids_cost(C({0, 0, 1, 1}), ds.with_weights({3, 1, 1, 1})) == doctest::Approx(2.0));
  CHECK(kmedoids_cost(C({0, 0, 1, 1}), oracle::line({2, 2, 7, 7})) == 0.0);
}

TEST_CASE("min-diameter and k-center examples") {
  const auto ds = kLine();
  CHECK(mindiameter_cost(C({0, 0, 1, 1}), ds) == 1.0);
  CHECK(mindiameter_cost(C({0, 1, 0, 1}), ds) == 10.0);
  CHECK(mindiameter_cost(C({0, 1, 2, 2}), oracle::line({0, 1, 10, 10.5})) == 0.5);
  CHECK(kcenter_cost(C({0, 0, 1, 1}), ds) == 1.0);
  CHECK(kcenter_cost(C({0, 1, 1, 1}), ds) == 9.0);
  CHECK(kcenter_cost(C({0, 1, 1, 2}), oracle::line({0, 1, 1.5, 9})) == 0.5);
}

TEST_CASE("ratio-cut examples") {
  const std::vector<int> planted{0, 0, 1, 1};
  const auto ds = oracle::blocks(planted, 5, 1);
  CHECK(ratiocut_cost(C(planted), ds) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ratiocut_cost(C(planted), ds.with_weights({2, 1, 1, 1})) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(ratiocut_cost(C(planted), oracle::blocks(planted, 5, 0)) == 0.0);
}

TEST_CASE("objectives reject the wrong table kind") {
  const auto sim = oracle::blocks({0, 0, 1, 1}, 5, 1);
  CHECK_THROWS_AS(kmeans_cost(C({0, 0, 1, 1}), sim), KindMismatch);
  CHECK_THROWS_AS(ratiocut_cost(C({0, 0, 1, 1}), kLine()), KindMismatch);
  CHECK_THROWS_AS(exact_minimize(sim, {Objective::kmedian, 2}), KindMismatch);
  CHECK_THROWS_AS(kmeans_cost(C({0, 0, 1}), kLine()), InvalidInput);
}

TEST_CASE("names round-trip") {
  for (Objective o : kAllObjectives) CHECK(parse_objective(to_string(o)) == o);
  CHECK_FALSE(parse_objective("kmeans++").has_value());
  CHECK(is_weight_free(Objective::kcenter));
  CHECK_FALSE(is_weight_free(Objective::minsum));
}

TEST_CASE("costs match the direct formulas on random data") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 6;
    const int k = 2 + trial % 2;
    const auto ds = dataset_from_coords(oracle::random_points(n, 3, gen), oracle::random_weights(n, gen));
    const auto sim = oracle::random_similarity(n, gen).with_weights(oracle::random_weights(n, gen));
    const auto lab = oracle::random_labels(n, k, gen);
    const auto c = C(lab);
    for (Objective o : kAllObjectives) {
      CAPTURE(to_string(o));
      const auto& data = required_kind(o) == TableKind::similarity ? sim : ds;
      const double expected = oracle::cost(o, lab, data);
      CHECK(cost(o, c, data) == doctest::Approx(expected).epsilon(1e-12));
      CHECK(CostEvaluator(data, o)(lab, k) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(kmeans_cost(c, ds) == doctest::Approx(oracle::centroid_cost(lab, ds)).epsilon(1e-9));
  }
}

TEST_CASE("exact minimizer examples") {
  CHECK(exact_minimize(kLine(), {Objective::kmeans, 2}) == C({0, 0, 1, 1}));
  const std::vector<int> planted{0, 1, 0, 1, 1, 0};
  const auto sim = oracle::blocks(planted, 5, 1);
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(exact_minimize(sim.with_weights(oracle::random_weights(6, gen)), {Objective::ratiocut, 2}) == C(planted));
  }
}

TEST_CASE("a large spike separates the spiked set under k-means") {
  const auto ds = oracle::line({0, 1, 2, 10, 11, 12});
  const std::vector<std::size_t> S{0, 1, 2};
  std::vector<double> w(6, 1.0);
  for (std::size_t x : S) w[x] = 1e6;
  const auto out = exact_minimize(ds.with_weights(w), {Objective::kmeans, 3});
  CHECK(out.label(0) != out.label(1));
  CHECK(out.label(1) != out.label(2));
  CHECK(out.label(0) != out.label(2));
}

TEST_CASE("exact minimizer matches brute force over k^n labelings") {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + trial % 3;
    const auto ds = dataset_from_coords(oracle::random_points(n, 2, gen), oracle::random_weights(n, gen));
    const auto sim = oracle::random_similarity(n, gen).with_weights(oracle::random_weights(n, gen));
    for (Objective o : kAllObjectives) {
      for (int k : {2, 3}) {
        CAPTURE(to_string(o));
        const auto& data = required_kind(o) == TableKind::similarity ? sim : ds;
        CHECK(oracle::labels_of(exact_minimize(data, {o, k})) == oracle::argmin(o, k, data));
      }
    }
  }
}

TEST_CASE("ties resolve to the first canonical partition") {
  // Square corners: both axis-aligned 2-splits tie under every objective.
  const auto ds = dataset_from_coords({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {1, 1, 1, 1});
  for (Objective o : kAllObjectives) {
    if (required_kind(o) != TableKind::distance) continue;
    CAPTURE(to_string(o));
    CHECK(oracle::labels_of(exact_minimize(ds, {o, 2})) == oracle::argmin(o, 2, ds));
  }
  CHECK(exact_minimize(ds, {Objective::kmeans, 2}) == C({0, 0, 1, 1}));
}

TEST_CASE("argmin is invariant to weight scale") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ds = dataset_from_coords(oracle::random_points(7, 2, gen), oracle::random_weights(7, gen));
    const auto sim = oracle::random_similarity(7, gen).with_weights(oracle::random_weights(7, gen));
    for (Objective o : kAllObjectives) {
      const auto& data = required_kind(o) == TableKind::similarity ? sim : ds;
      std::vector<double> scaled(data.weights().begin(), data.weights().end());
      for (double& w : scaled) w *= 37.5;
      CHECK(exact_minimize(data, {o, 3}) == exact_minimize(data.with_weights(scaled), {o, 3}));
    }
  }
}

TEST_CASE("weight-free objectives ignore weights") {
  std::mt19937_64 gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ds = dataset_from_coords(oracle::random_points(7, 2, gen), unit_weights(7));
    const auto w = oracle::random_weights(7, gen, 1e-3, 1e3);
    for (Objective o : {Objective::mindiameter, Objective::kcenter}) {
      const auto c = exact_minimize(ds, {o, 3});
      CHECK(c == exact_minimize(ds.with_weights(w), {o, 3}));
      CHECK(cost(o, c, ds) == cost(o, c, ds.with_weights(w)));
    }
  }
}

TEST_CASE("huge spikes stay finite after rescaling") {
  const auto ds = oracle::line({0, 1, 2, 10, 11, 12, 20});
  std::vector<double> w(7, 1.0);
  w[0] = w[3] = 1e9;
  for (Objective o : {Objective::kmeans, Objective::minsum, Objective::kmedian, Objective::kmedoids}) {
    const auto c = exact_minimize(ds.with_weights(w), {o, 2});
    CHECK(c.label(0) != c.label(3));
  }
}

TEST_CASE("exact minimizer respects the cap") {
  std::mt19937_64 gen(1);
  const auto ds = dataset_from_coords(oracle::random_points(13, 1, gen), unit_weights(13));
  CHECK_THROWS_AS(exact_minimize(ds, {Objective::kmeans, 2}), CapExceeded);
  MinimizeOptions small;
  small.cap = 4;
  CHECK_THROWS_WITH_AS(exact_minimize(oracle::line({0, 1, 2, 3, 4}), {Objective::kmeans, 2}, small),
                       doctest::Contains("cap of 4"), CapExceeded);
  CHECK_THROWS_AS(exact_minimize(kLine(), {Objective::kmeans, 4}), InvalidInput);
}

}
