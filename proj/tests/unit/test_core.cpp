#include "doctest.h"

#include "../support.hpp"
#include "clusterlab/core.hpp"

using namespace clusterlab;

TEST_SUITE("core") {

TEST_CASE("validate_dataset accepts a minimal metric") {
  const auto ds = validate_dataset(PairTable(TableKind::distance, {{0, 1}, {1, 0}}), {1, 1});
  CHECK(ds.n() == 2);
  CHECK(ds.d(0, 1) == 1.0);
  CHECK(ds.total_weight() == 2.0);
}

TEST_CASE("validate_dataset rejects bad input") {
  CHECK_THROWS_AS(validate_dataset(PairTable(TableKind::distance, {{0, 1}, {1, 0}}), {1, 0}), InvalidInput);
  CHECK_THROWS_WITH_AS(validate_dataset(PairTable(TableKind::distance, {{0, 1}, {1, 0}}), {1, 0}),
                       doctest::Contains("non-positive weight"), InvalidInput);
  CHECK_THROWS_WITH_AS(validate_dataset(PairTable(TableKind::distance, {{0, 1}, {2, 0}}), {1, 1}),
                       doctest::Contains("asymmetric"), InvalidInput);
  CHECK_THROWS_AS(validate_dataset(PairTable(TableKind::distance, {{0, -1}, {-1, 0}}), {1, 1}), InvalidInput);
  CHECK_THROWS_AS(validate_dataset(PairTable(TableKind::distance, {{0, 1}, {1, 0}}), {1, 1, 1}), InvalidInput);
  // Zero distance between elements that are not duplicates.
  CHECK_THROWS_AS(validate_dataset(PairTable(TableKind::distance, {{0, 0, 1}, {0, 0, 2}, {1, 2, 0}}), {1, 1, 1}),
                  InvalidInput);
}

TEST_CASE("validate_dataset allows zero distance between duplicates") {
  const auto ds = validate_dataset(PairTable(TableKind::distance, {{0, 0, 5}, {0, 0, 5}, {5, 5, 0}}), {1, 1, 1});
  CHECK(ds.n() == 3);
}

TEST_CASE("coords datasets carry their metric") {
  const auto ds = oracle::line({0, 3}, {1, 2});
  CHECK(ds.has_coords());
  CHECK(ds.d(0, 1) == 3.0);
  CHECK_THROWS_AS(dataset_from_coords({{0.0}, {1.0, 2.0}}, {1, 1}), InvalidInput);
}

TEST_CASE("dedupe counts duplicates") {
  const auto table = distance_table({{0.0}, {0.0}, {5.0}});
  const auto r = dedupe(table);
  CHECK(r.dataset.n() == 2);
  CHECK(std::vector<double>(r.dataset.weights().begin(), r.dataset.weights().end()) == std::vector<double>{2, 1});
  CHECK(r.class_of == std::vector<std::size_t>{0, 0, 1});
  CHECK(r.representative == std::vector<std::size_t>{0, 2});

  const auto same = dedupe(distance_table({{0.0}, {1.0}, {3.0}, {7.0}}));
  CHECK(same.dataset.n() == 4);
  CHECK(same.dataset.table() == distance_table({{0.0}, {1.0}, {3.0}, {7.0}}));

  const auto one = dedupe(distance_table({{0.0}, {0.0}, {0.0}}));
  CHECK(one.dataset.n() == 1);
  CHECK(one.dataset.weight(0) == 3.0);
  CHECK_THROWS_AS(Clustering::from_labels(std::vector<int>{0}), InvalidInput);
}

TEST_CASE("dedupe rejects zero distance between non-duplicates") {
  CHECK_THROWS_AS(dedupe(PairTable(TableKind::distance, {{0, 0, 1}, {0, 0, 2}, {1, 2, 0}})), InvalidInput);
  CHECK_THROWS_AS(dedupe(PairTable(TableKind::similarity, {{0, 1}, {1, 0}})), KindMismatch);
}

TEST_CASE("expand inverts dedupe") {
  const auto ds = oracle::line({0, 5}, {2, 1});
  const auto e = expand(ds);
  CHECK(e.dataset.n() == 3);
  CHECK(e.origin == std::vector<std::size_t>{0, 0, 1});
  CHECK(e.dataset.d(0, 1) == 0.0);
  CHECK(e.dataset.d(0, 2) == 5.0);
  const auto back = dedupe(e.dataset.table());
  CHECK(back.dataset.table() == ds.table());
  CHECK(std::vector<double>(back.dataset.weights().begin(), back.dataset.weights().end()) ==
        std::vector<double>{2, 1});

  const auto unit = oracle::line({0, 1, 4});
  CHECK(expand(unit).dataset.table() == unit.table());

  CHECK_THROWS_AS(expand(oracle::line({0, 1}, {1.5, 1})), InvalidInput);
}

TEST_CASE("expand copies similarity through the diagonal") {
  const auto ds = oracle::matrix(TableKind::similarity, {{9, 2}, {2, 9}}, {2, 1});
  const auto e = expand(ds);
  CHECK(e.dataset.d(0, 1) == 9.0);
  CHECK(e.dataset.d(0, 2) == 2.0);
}

TEST_CASE("expand then dedupe is the identity on integer weights") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = oracle::random_points(5, 2, gen);
    std::vector<double> w;
    std::uniform_int_distribution<int> u(1, 3);
    for (int i = 0; i < 5; ++i) w.push_back(u(gen));
    const auto ds = dataset_from_coords(pts, w);
    const auto back = dedupe(expand(ds).dataset.table());
    CHECK(back.dataset.table() == ds.table());
    CHECK(std::vector<double>(back.dataset.weights().begin(), back.dataset.weights().end()) == w);
  }
}

TEST_CASE("clusterings are canonical unlabeled partitions") {
  const auto a = Clustering::from_labels(std::vector<int>{5, 5, 2, 2});
  const auto b = Clustering::from_labels(std::vector<int>{0, 0, 1, 1});
  CHECK(a == b);
  CHECK(a.k() == 2);
  CHECK(a.to_string() == "{{0,1},{2,3}}");
  CHECK(Clustering::from_blocks({{2, 3}, {0, 1}}, 4) == a);
  CHECK(a.cluster_weights(std::vector<double>{1, 2, 3, 4}) == std::vector<double>{3, 7});
  CHECK_FALSE(a.has_singleton());
  CHECK(Clustering::from_labels(std::vector<int>{0, 1, 1}).has_singleton());
  CHECK(a.min_cluster_size() == 2);
}

TEST_CASE("clusterings enforce 1 < k < n") {
  CHECK_THROWS_AS(Clustering::from_labels(std::vector<int>{0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(Clustering::from_labels(std::vector<int>{0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(Clustering::from_labels(std::vector<int>{0, -1, 2}), InvalidInput);
  CHECK_THROWS_AS(Clustering::from_blocks({{0, 1}, {1, 2}}, 3), InvalidInput);
  CHECK_THROWS_AS(Clustering::from_blocks({{0, 1}}, 3), InvalidInput);
}

TEST_CASE("subset and with_weights") {
  const auto ds = oracle::line({0, 1, 10, 11}, {1, 2, 3, 4});
  const std::vector<std::size_t> members{3, 1};
  const auto sub = ds.subset(members);
  CHECK(sub.n() == 2);
  CHECK(sub.d(0, 1) == 10.0);
  CHECK(sub.weight(0) == 4.0);
  CHECK(sub.has_coords());
  CHECK(ds.with_weights({1, 1, 1, 1}).total_weight() == 4.0);
  CHECK_THROWS_AS(ds.with_weights({1, 1, 1, -1}), InvalidInput);
}

}
