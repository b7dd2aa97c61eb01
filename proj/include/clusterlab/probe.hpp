#pragma once

// Weight-response probing: witness search for weightings that make an
// algorithm produce or stop producing a clustering, robustness certificates,
// separability checks, range sampling and classification.
//
// Search can only ever prove responsiveness. Robustness comes exclusively
// from certificates (weight-free algorithms, nice clusterings for average
// linkage, perfect separation-uniform clusterings for ratio-cut).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/dendrogram.hpp"
#include "clusterlab/hierarchical.hpp"
#include "clusterlab/partitional.hpp"

namespace clusterlab {

/// A certificate and a responsive verdict met on the same clustering, or a
/// verdict failed to replay. Either means a certificate rule is wrong or a bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

enum class AlgorithmId {
  kmeans, kmedian, kmedoids, minsum, mindiameter, kcenter, ratiocut,
  single, complete, average, ward, divisive,
};

struct AlgorithmHandle {
  AlgorithmId id = AlgorithmId::kmeans;
  /// Splitting objective for divisive(P).
  Objective divisive_base = Objective::kmeans;

  bool hierarchical() const;
  Objective objective() const;  // partitional handles
  Linkage linkage() const;      // linkage handles
  TableKind required_kind() const;
  bool requires_coords() const;
  std::string name() const;

  /// "kmeans", "average", "divisive(kmeans)", ...
  static AlgorithmHandle parse(std::string_view text);
  static AlgorithmHandle partitional(Objective objective);

  bool operator==(const AlgorithmHandle&) const = default;
};

/// The twelve algorithms of the weighted-clustering classification table.
std::vector<AlgorithmHandle> classification_algorithms();

using AlgorithmOutput = std::variant<Clustering, Dendrogram>;

/// Partitional handles need k; hierarchical handles ignore it.
AlgorithmOutput run_algorithm(const AlgorithmHandle& a, const WeightedDataset& ds, int k = 2,
                              const MinimizeOptions& minimize = {});

/// Whether A(w[X]) outputs c: equality for partitional algorithms (at k=|c|),
/// c's blocks all being dendrogram nodes for hierarchical ones.
bool outputs(const AlgorithmHandle& a, const WeightedDataset& ds, const Clustering& c,
             const MinimizeOptions& minimize = {});

/// A recipe for a weight vector.
struct WeightFamily {
  enum class Kind { unit, given, log_uniform, spike };

  Kind kind = Kind::unit;
  std::vector<std::size_t> spiked;  // spike: W on these, 1 elsewhere
  double big = 1.0;                 // spike height W
  double lo = 1e-2, hi = 1e2;       // log_uniform range
  std::uint64_t seed = 0;           // log_uniform stream
  std::vector<double> values;       // given

  static WeightFamily unit();
  static WeightFamily given(std::vector<double> values, std::string label = "given");
  static WeightFamily log_uniform(double lo, double hi, std::uint64_t seed);
  static WeightFamily spike(std::vector<std::size_t> set, double big);
  static WeightFamily pair_spike(std::size_t x1, std::size_t x2, double big);

  std::vector<double> materialize(std::size_t n) const;
  std::string describe() const;

  std::string label;
};

/// Geometric spike heights 1e2, 1e3, ..., 1e9.
std::vector<double> default_spike_ladder();

struct Witness {
  std::vector<double> weights;
  std::string family;
};

enum class VerdictStatus { responsive, robust_on_clustering, inconclusive };
std::string to_string(VerdictStatus status);

struct Verdict {
  Clustering clustering;
  VerdictStatus status = VerdictStatus::inconclusive;
  std::optional<Witness> produce;  // A(w) outputs the clustering
  std::optional<Witness> remove;   // A(w') does not
  std::size_t trials = 0;
  double max_w = 0.0;
};

struct ProbeOptions {
  std::size_t budget = 2000;          // algorithm runs per probe
  std::size_t random_samples = 100;
  std::uint64_t seed = 0;
  std::vector<double> ladder = default_spike_ladder();
  std::vector<std::vector<double>> hints;  // tried first when looking for a producer
  MinimizeOptions minimize;
};

/// Two-phase witness search. Phase 1 looks for weights producing c (hints,
/// the dataset's own weights, unit, random, spikes). Phase 2 looks for
/// weights that do not, trying in order: pair spikes on within-cluster pairs
/// (pairs violating niceness first), single-point spikes, whole-cluster
/// spikes, random weights. Returns responsive iff both succeed within budget,
/// otherwise inconclusive.
Verdict responsiveness_probe(const AlgorithmHandle& a, const WeightedDataset& ds, const Clustering& c,
                             const ProbeOptions& options = {});

/// True iff a is provably weight-robust on c: weight-free
/// algorithms (single, complete, mindiameter, kcenter); average linkage on a
/// nice clustering; ratio-cut on a perfect, separation-uniform clustering.
bool robustness_certificate(const AlgorithmHandle& a, const WeightedDataset& ds, const Clustering& c);

/// Re-runs a responsive verdict's witnesses; false if either fails to replay.
bool replay_verdict(const AlgorithmHandle& a, const WeightedDataset& ds, const Verdict& v,
                    const MinimizeOptions& minimize = {});

struct SeparabilityResult {
  bool separated = false;
  std::optional<double> big;  // first spike height that separated S
  double max_w = 0.0;
};

/// Tries spike(S, W) up the ladder until the k-clustering puts every member
/// of S in its own cluster. Requires 2 <= |S| <= k < n.
SeparabilityResult separability_probe(const AlgorithmHandle& a, const WeightedDataset& ds,
                                      const std::vector<std::size_t>& set, int k,
                                      const std::vector<double>& ladder = default_spike_ladder(),
                                      const MinimizeOptions& minimize = {});

struct RangeSample {
  std::vector<Clustering> clusterings;           // sorted, distinct
  std::vector<std::vector<double>> producers;    // weights first producing each
  std::size_t runs = 0;
};

/// Outputs of a over unit weights, `samples` log-uniform weightings on
/// [1e-2, 1e2] and every single- and pair-spike on the ladder. A lower bound
/// on range(A(X,d)). For hierarchical algorithms every clustering each
/// dendrogram outputs is collected.
RangeSample range_estimate(const AlgorithmHandle& a, const WeightedDataset& ds, int k, std::size_t samples,
                           std::uint64_t seed, const std::vector<double>& ladder = default_spike_ladder(),
                           const MinimizeOptions& minimize = {});

enum class Category { sensitive, considering, robust, undetermined };
std::string to_string(Category category);

struct Evidence {
  std::string dataset;
  int k = 0;  // 0 for hierarchical
  Verdict verdict;
  bool certified = false;
};

struct CategoryReport {
  AlgorithmHandle algorithm;
  std::string family;
  Category category = Category::undetermined;
  std::vector<Evidence> evidence;
  std::size_t probed = 0;
  std::size_t responsive = 0;
  std::size_t certified = 0;
  std::size_t inconclusive = 0;
  std::size_t range_size = 0;  // summed over datasets and k
};

struct ClassifyOptions {
  ProbeOptions probe;
  std::size_t range_samples = 100;
  std::vector<int> ks{2, 3};
};

struct NamedDataset {
  std::string name;
  WeightedDataset dataset;
  std::vector<int> ks;  // partitional k values; empty means ClassifyOptions::ks
};

/// Probes every clustering in the sampled range of a on each compatible
/// dataset. sensitive: every probe responsive; robust: every clustering
/// certified; considering: at least one of each; otherwise undetermined.
/// Throws InconsistencyError when a clustering is both certified and
/// responsive, or a verdict fails to replay. Evidence from a finite family
/// supports a category; it does not prove one.
CategoryReport classify(const AlgorithmHandle& a, const std::vector<NamedDataset>& family,
                        const std::string& family_name, const ClassifyOptions& options = {});

/// Whether a can run on ds (table kind, coordinates).
bool compatible(const AlgorithmHandle& a, const WeightedDataset& ds);

}  // namespace clusterlab
