#include "clusterlab/dendrogram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace clusterlab {

Dendrogram::Dendrogram(std::size_t n) : n_leaves_(n), nodes_(n), leaf_of_(n), has_parent_(n, false) {
  for (std::size_t i = 0; i < n; ++i) {
    nodes_[i].element = i;
    leaf_of_[i] = static_cast<int>(i);
  }
}

Dendrogram Dendrogram::with_leaves(const std::vector<std::size_t>& leaf_elements) {
  const std::size_t n = leaf_elements.size();
  Dendrogram d(n);
  std::vector<bool> seen(n, false);
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const std::size_t x = leaf_elements[leaf];
    if (x >= n || seen[x]) throw InvalidInput("leaf labels are not a bijection onto 0..n-1");
    seen[x] = true;
    d.nodes_[leaf].element = x;
    d.leaf_of_[x] = static_cast<int>(leaf);
  }
  return d;
}

int Dendrogram::join(int left, int right, double height) {
  const auto valid = [&](int id) {
    return id >= 0 && static_cast<std::size_t>(id) < nodes_.size() && !has_parent_[static_cast<std::size_t>(id)];
  };
  if (left == right || !valid(left) || !valid(right)) throw InvalidInput("join requires two distinct current roots");
  Node parent;
  parent.left = left;
  parent.right = right;
  parent.height = height;
  nodes_.push_back(parent);
  has_parent_.push_back(false);
  has_parent_[static_cast<std::size_t>(left)] = true;
  has_parent_[static_cast<std::size_t>(right)] = true;
  return static_cast<int>(nodes_.size()) - 1;
}

bool Dendrogram::is_complete() const { return n_leaves_ > 0 && nodes_.size() == 2 * n_leaves_ - 1; }

int Dendrogram::root() const {
  if (!is_complete()) throw InvalidInput("dendrogram is not complete");
  return static_cast<int>(nodes_.size()) - 1;
}

std::vector<std::size_t> Dendrogram::members(int id) const {
  std::vector<std::size_t> out;
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const Node& nd = node(stack.back());
    stack.pop_back();
    if (nd.is_leaf()) {
      out.push_back(nd.element);
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Minimum element below each node; nodes are created after their children.
std::vector<std::size_t> min_elements(const Dendrogram& d) {
  std::vector<std::size_t> out(d.nodes().size());
  for (std::size_t id = 0; id < out.size(); ++id) {
    const auto& nd = d.nodes()[id];
    out[id] = nd.is_leaf() ? nd.element
                           : std::min(out[static_cast<std::size_t>(nd.left)], out[static_cast<std::size_t>(nd.right)]);
  }
  return out;
}

void write_newick(const Dendrogram& d, const std::vector<std::size_t>& mins, int id, std::ostream& out) {
  const auto& nd = d.node(id);
  if (nd.is_leaf()) {
    out << nd.element;
    return;
  }
  int a = nd.left, b = nd.right;
  if (mins[static_cast<std::size_t>(b)] < mins[static_cast<std::size_t>(a)]) std::swap(a, b);
  out << '(';
  write_newick(d, mins, a, out);
  out << ',';
  write_newick(d, mins, b, out);
  out << ')';
}

struct NewickParser {
  std::string_view text;
  std::size_t pos = 0;

  struct Tree {
    bool leaf;
    std::size_t element;
    std::vector<Tree> kids;
  };

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) {
      throw InvalidInput(std::string("newick: expected '") + c + "' at offset " + std::to_string(pos));
    }
    ++pos;
  }
  Tree parse_subtree() {
    skip_space();
    if (pos < text.size() && text[pos] == '(') {
      ++pos;
      Tree t{false, 0, {}};
      t.kids.push_back(parse_subtree());
      expect(',');
      t.kids.push_back(parse_subtree());
      expect(')');
      return t;
    }
    std::size_t value = 0;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw InvalidInput("newick: expected leaf index at offset " + std::to_string(start));
    return Tree{true, value, {}};
  }
};

void collect_leaves(const NewickParser::Tree& t, std::vector<std::size_t>& out) {
  if (t.leaf) {
    out.push_back(t.element);
    return;
  }
  for (const auto& k : t.kids) collect_leaves(k, out);
}

int build(const NewickParser::Tree& t, Dendrogram& d, std::size_t& next_leaf) {
  if (t.leaf) return static_cast<int>(next_leaf++);
  const int a = build(t.kids[0], d, next_leaf);
  const int b = build(t.kids[1], d, next_leaf);
  return d.join(a, b);
}

}  // namespace

std::string Dendrogram::to_newick() const {
  std::ostringstream out;
  write_newick(*this, min_elements(*this), root(), out);
  out << ';';
  return out.str();
}

Dendrogram Dendrogram::from_newick(std::string_view text) {
  NewickParser parser{text};
  const auto tree = parser.parse_subtree();
  parser.expect(';');
  parser.skip_space();
  if (parser.pos != text.size()) throw InvalidInput("newick: trailing characters");
  std::vector<std::size_t> leaves;
  collect_leaves(tree, leaves);
  Dendrogram d = with_leaves(leaves);
  std::size_t next_leaf = 0;
  build(tree, d, next_leaf);
  return d;
}

std::vector<std::vector<std::size_t>> dendrogram_clusters(const Dendrogram& d) {
  std::vector<std::vector<std::size_t>> out(d.nodes().size());
  for (std::size_t id = 0; id < out.size(); ++id) {
    const auto& nd = d.nodes()[id];
    if (nd.is_leaf()) {
      out[id] = {nd.element};
    } else {
      const auto& a = out[static_cast<std::size_t>(nd.left)];
      const auto& b = out[static_cast<std::size_t>(nd.right)];
      out[id].reserve(a.size() + b.size());
      std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out[id]));
    }
  }
  return out;
}

bool dendrogram_outputs(const Dendrogram& d, const Clustering& c) {
  if (c.n() != d.n_leaves()) return false;
  const auto clusters = dendrogram_clusters(d);
  const std::set<std::vector<std::size_t>> present(clusters.begin(), clusters.end());
  for (const auto& block : c.blocks()) {
    if (!present.contains(block)) return false;
  }
  return true;
}

bool structurally_equal(const Dendrogram& a, const Dendrogram& b) {
  if (a.n_leaves() != b.n_leaves()) return false;
  auto ca = dendrogram_clusters(a);
  auto cb = dendrogram_clusters(b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

std::vector<Clustering> output_clusterings(const Dendrogram& d, std::size_t max_count) {
  const auto& nodes = d.nodes();
  const int root = d.root();
  // Number of ways to cut below each node (the node itself counts as one).
  std::vector<std::size_t> cuts(nodes.size(), 1);
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    if (nodes[id].is_leaf()) continue;
    const std::size_t l = cuts[static_cast<std::size_t>(nodes[id].left)];
    const std::size_t r = cuts[static_cast<std::size_t>(nodes[id].right)];
    cuts[id] = (l > max_count || r > max_count || l * r > max_count) ? max_count + 1 : 1 + l * r;
  }
  if (cuts[static_cast<std::size_t>(root)] > max_count) {
    throw CapExceeded("dendrogram outputs more than " + std::to_string(max_count) + " clusterings");
  }

  std::vector<std::vector<std::vector<int>>> memo(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    auto& mine = memo[id];
    mine.push_back({static_cast<int>(id)});
    if (nodes[id].is_leaf()) continue;
    for (const auto& a : memo[static_cast<std::size_t>(nodes[id].left)]) {
      for (const auto& b : memo[static_cast<std::size_t>(nodes[id].right)]) {
        std::vector<int> both = a;
        both.insert(both.end(), b.begin(), b.end());
        mine.push_back(std::move(both));
      }
    }
  }

  const std::size_t n = d.n_leaves();
  const auto clusters = dendrogram_clusters(d);
  std::vector<Clustering> out;
  for (const auto& cut : memo[static_cast<std::size_t>(root)]) {
    if (cut.size() < 2 || cut.size() >= n) continue;
    std::vector<std::vector<std::size_t>> blocks;
    for (int id : cut) blocks.push_back(clusters[static_cast<std::size_t>(id)]);
    out.push_back(Clustering::from_blocks(blocks, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clusterlab
