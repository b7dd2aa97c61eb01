#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

/// Binary rooted merge tree whose leaves biject onto elements 0..n-1.
///
/// Nodes are stored in creation order; a fresh Dendrogram(n) holds the n
/// leaves (node i <-> element i) and join() adds internal nodes until a single
/// root remains.
class Dendrogram {
 public:
  static constexpr int kNone = -1;

  struct Node {
    int left = kNone;
    int right = kNone;
    std::size_t element = 0;  // leaves only
    double height = 0.0;      // diagnostic merge value, internal nodes only
    bool is_leaf() const { return left == kNone; }
  };

  Dendrogram() = default;
  explicit Dendrogram(std::size_t n);
  /// Leaves in the given order; leaf_elements must be a permutation of 0..n-1.
  static Dendrogram with_leaves(const std::vector<std::size_t>& leaf_elements);

  /// Adds a parent of two current roots; returns the new node id.
  int join(int left, int right, double height = 0.0);

  std::size_t n_leaves() const { return n_leaves_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  bool is_complete() const;
  int root() const;
  /// Id of the leaf carrying element x.
  int leaf_of(std::size_t x) const { return leaf_of_[x]; }

  /// Sorted element set below a node.
  std::vector<std::size_t> members(int id) const;

  /// Nested parentheses with leaf element indices, children ordered by their
  /// minimum element, e.g. "((0,1),(2,3));". Equal strings <=> equal
  /// node-cluster sets.
  std::string to_newick() const;
  static Dendrogram from_newick(std::string_view text);

 private:
  std::size_t n_leaves_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> leaf_of_;
  std::vector<bool> has_parent_;
};

/// One element subset per node (2n-1 of them), each sorted, in node order.
std::vector<std::vector<std::size_t>> dendrogram_clusters(const Dendrogram& d);

/// True iff every block of c is the cluster of some node.
bool dendrogram_outputs(const Dendrogram& d, const Clustering& c);

/// Structural equality: the same set of node clusters.
bool structurally_equal(const Dendrogram& a, const Dendrogram& b);

/// Every clustering (1 < k < n) the dendrogram outputs, sorted canonically.
/// Refuses trees whose cut count exceeds max_count.
std::vector<Clustering> output_clusterings(const Dendrogram& d, std::size_t max_count = 100000);

}  // namespace clusterlab
