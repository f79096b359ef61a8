#pragma once

// Unlabelled, unordered rooted trees and forests in canonical form.
//
// Canonical serialization: a node is "[" followed by its children separated by
// single spaces, followed by "]". Children are sorted in DESCENDING byte
// lexicographic order of their own serializations (with the ASCII order
// ' ' < '[' < ']'), so "[]" sorts above "[[]]". The same order, applied to
// whole serializations, is the total order on trees. Forests use the same
// descending order for their members and serialize as "1" when empty.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfchar/errors.hpp"

namespace hopfchar {

/// Largest tree order enumerate_trees accepts unless the caller raises it.
inline constexpr std::size_t kDefaultMaxTreeOrder = 12;

class RootedTree {
 public:
  /// The single-node tree.
  RootedTree() : RootedTree(std::vector<RootedTree>{}) {}

  /// Tree whose root has the given subtrees; sorts them into canonical order.
  explicit RootedTree(std::vector<RootedTree> children) {
    std::sort(children.begin(), children.end(), [](const RootedTree& a, const RootedTree& b) {
      return a.str() > b.str();
    });
    auto node = std::make_shared<Node>();
    node->order = 1;
    node->repr = "[";
    for (std::size_t i = 0; i < children.size(); ++i) {
      node->order += children[i].order();
      if (i) node->repr += ' ';
      node->repr += children[i].str();
    }
    node->repr += ']';
    node->children = std::move(children);
    node_ = std::move(node);
  }

  static RootedTree leaf() { return RootedTree(); }

  const std::vector<RootedTree>& children() const { return node_->children; }
  std::size_t order() const { return node_->order; }
  const std::string& str() const { return node_->repr; }

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.node_ == b.node_ || a.str() == b.str();
  }
  friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    return a.str() <=> b.str();
  }

 private:
  struct Node {
    std::vector<RootedTree> children;
    std::size_t order = 1;
    std::string repr;
  };
  std::shared_ptr<const Node> node_;
};

/// Commutative monomial in trees; the empty forest is the unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<RootedTree> trees) : trees_(std::move(trees)) { normalize(); }
  explicit Forest(RootedTree tree) : trees_{std::move(tree)} { normalize(); }

  const std::vector<RootedTree>& trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }
  std::size_t degree() const { return degree_; }
  const std::string& str() const { return repr_; }

  /// Multiset union.
  friend Forest operator*(const Forest& a, const Forest& b) {
    std::vector<RootedTree> all = a.trees_;
    all.insert(all.end(), b.trees_.begin(), b.trees_.end());
    return Forest(std::move(all));
  }

  friend bool operator==(const Forest& a, const Forest& b) { return a.repr_ == b.repr_; }
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) { return a.repr_ <=> b.repr_; }

 private:
  void normalize() {
    std::sort(trees_.begin(), trees_.end(), [](const RootedTree& a, const RootedTree& b) {
      return a.str() > b.str();
    });
    degree_ = 0;
    repr_.clear();
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      degree_ += trees_[i].order();
      if (i) repr_ += ' ';
      repr_ += trees_[i].str();
    }
    if (trees_.empty()) repr_ = "1";
  }

  std::vector<RootedTree> trees_;
  std::size_t degree_ = 0;
  std::string repr_ = "1";
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  RootedTree tree(std::size_t depth = 0) {
    if (depth > 4096) throw ParseError("tree nesting too deep", pos_);
    if (peek() != '[') throw ParseError("expected '['", pos_);
    ++pos_;
    std::vector<RootedTree> children;
    skip_ws();
    while (peek() == '[') {
      children.push_back(tree(depth + 1));
      skip_ws();
    }
    if (peek() != ']') throw ParseError(at_end() ? "unexpected end of input" : "expected '[' or ']'", pos_);
    ++pos_;
    return RootedTree(std::move(children));
  }

 private:
  static bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `Tree := "[" ws (Tree ws)* "]"`, allowing surrounding whitespace.
inline RootedTree parse_tree(std::string_view text) {
  detail::TreeParser p(text);
  p.skip_ws();
  RootedTree t = p.tree();
  p.skip_ws();
  if (!p.at_end()) throw ParseError("trailing characters after tree", p.pos());
  return t;
}

/// Parses "1" (the empty forest) or whitespace separated trees.
inline Forest parse_forest(std::string_view text) {
  detail::TreeParser p(text);
  p.skip_ws();
  if (p.peek() == '1') {
    std::size_t at = p.pos();
    detail::TreeParser rest(text.substr(at + 1));
    rest.skip_ws();
    if (!rest.at_end()) throw ParseError("trailing characters after unit forest", at + 1 + rest.pos());
    return Forest();
  }
  std::vector<RootedTree> trees;
  while (!p.at_end()) {
    trees.push_back(p.tree());
    p.skip_ws();
  }
  if (trees.empty()) throw ParseError("empty forest literal (use \"1\")", p.pos());
  return Forest(std::move(trees));
}

// ---------------------------------------------------------------------------
// Vertex level view

/// Pre-order vertex numbering; parent[0] == -1 is the root.
struct TreeLayout {
  std::vector<int> parent;

  std::size_t size() const { return parent.size(); }
};

inline void append_layout(const RootedTree& t, int parent, TreeLayout& out) {
  int me = static_cast<int>(out.parent.size());
  out.parent.push_back(parent);
  for (const auto& c : t.children()) append_layout(c, me, out);
}

inline TreeLayout layout(const RootedTree& t) {
  TreeLayout out;
  out.parent.reserve(t.order());
  append_layout(t, -1, out);
  return out;
}

/// Builds the tree induced on the vertices selected by `keep` (a bit per
/// vertex), rooted at `root`. Only kept children whose parent is kept attach.
inline RootedTree induced_tree(const TreeLayout& l, std::uint64_t keep, int root) {
  std::vector<RootedTree> kids;
  for (std::size_t v = static_cast<std::size_t>(root) + 1; v < l.size(); ++v)
    if (l.parent[v] == root && (keep >> v & 1u)) kids.push_back(induced_tree(l, keep, static_cast<int>(v)));
  return RootedTree(std::move(kids));
}

/// Tree from an arbitrary parent array (exactly one entry equal to -1).
inline RootedTree tree_from_parents(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<int>> kids(parent.size());
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (parent[v] < 0) {
      root = v;
    } else {
      kids[parent[v]].push_back(v);
    }
  }
  if (root < 0) throw Error("parent array without root");
  auto build = [&](auto&& self, int v) -> RootedTree {
    std::vector<RootedTree> c;
    for (int k : kids[v]) c.push_back(self(self, k));
    return RootedTree(std::move(c));
  };
  return build(build, root);
}

// ---------------------------------------------------------------------------
// Ordered subtrees and edge partitions

/// One ordered subtree s of a tree: the forest cut away and the kept
/// root-containing subtree (empty forest when s is empty).
struct SubtreeCut {
  Forest cut;
  Forest kept;
};

/// One subset of edges: the forest left after deleting those edges and the
/// skeleton obtained by contracting each of its trees to a point.
struct EdgePartition {
  Forest cut;
  RootedTree skeleton;
};

namespace detail {

template <class V>
class MemoTable {
 public:
  template <class F>
  std::shared_ptr<const V> get(const std::string& key, F&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = std::make_shared<const V>(compute());
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const V>> table_;
};

inline void check_vertex_count(const RootedTree& t) {
  if (t.order() > 24) throw ResourceLimitError("tree of order " + std::to_string(t.order()) + " is too large for subset enumeration");
}

inline std::vector<SubtreeCut> compute_ordered_subtrees(const RootedTree& t) {
  check_vertex_count(t);
  const TreeLayout l = layout(t);
  const std::size_t n = l.size();
  std::vector<SubtreeCut> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (s != 0) {
      if (!(s & 1u)) continue;
      bool connected = true;
      for (std::size_t v = 1; v < n && connected; ++v)
        if ((s >> v & 1u) && !(s >> l.parent[v] & 1u)) connected = false;
      if (!connected) continue;
    }
    std::vector<RootedTree> cut;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (s >> v & 1u) continue;
      bool top = (v == 0) ? s == 0 : (s >> l.parent[v] & 1u);
      if (top) cut.push_back(induced_tree(l, all, static_cast<int>(v)));
    }
    Forest kept = s == 0 ? Forest() : Forest(induced_tree(l, s, 0));
    out.push_back({Forest(std::move(cut)), std::move(kept)});
  }
  return out;
}

inline std::vector<EdgePartition> compute_edge_partitions(const RootedTree& t) {
  check_vertex_count(t);
  const TreeLayout l = layout(t);
  const std::size_t n = l.size();
  std::vector<EdgePartition> out;
  out.reserve(std::size_t{1} << (n - 1));
  // Edge e (0-based) joins vertex e+1 to its parent.
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << (n - 1)); ++p) {
    std::vector<int> comp(n, 0);
    std::vector<int> comp_root{0};
    for (std::size_t v = 1; v < n; ++v) {
      if (p >> (v - 1) & 1u) {
        comp[v] = static_cast<int>(comp_root.size());
        comp_root.push_back(static_cast<int>(v));
      } else {
        comp[v] = comp[l.parent[v]];
      }
    }
    std::vector<RootedTree> pieces;
    std::vector<int> skeleton_parent(comp_root.size(), -1);
    for (std::size_t c = 0; c < comp_root.size(); ++c) {
      std::uint64_t mask = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] == static_cast<int>(c)) mask |= std::uint64_t{1} << v;
      pieces.push_back(induced_tree(l, mask, comp_root[c]));
      if (c) skeleton_parent[c] = comp[l.parent[comp_root[c]]];
    }
    out.push_back({Forest(std::move(pieces)), tree_from_parents(skeleton_parent)});
  }
  return out;
}

inline MemoTable<std::vector<SubtreeCut>>& subtree_memo() {
  static MemoTable<std::vector<SubtreeCut>> table;
  return table;
}

inline MemoTable<std::vector<EdgePartition>>& partition_memo() {
  static MemoTable<std::vector<EdgePartition>> table;
  return table;
}

}  // namespace detail

/// All ordered subtrees (root-containing connected vertex subsets, plus the
/// empty set), one entry per subset. Memoized per canonical tree.
inline std::shared_ptr<const std::vector<SubtreeCut>> ordered_subtrees(const RootedTree& t) {
  return detail::subtree_memo().get(t.str(), [&] { return detail::compute_ordered_subtrees(t); });
}

/// All 2^(|t|-1) edge subsets with their cut forest and skeleton.
inline std::shared_ptr<const std::vector<EdgePartition>> edge_partitions(const RootedTree& t) {
  return detail::partition_memo().get(t.str(), [&] { return detail::compute_edge_partitions(t); });
}

/// Grafts `graft` onto the root of `base`; the root of `base` stays the root.
inline RootedTree butcher_product(const RootedTree& base, const RootedTree& graft) {
  std::vector<RootedTree> kids = base.children();
  kids.push_back(graft);
  return RootedTree(std::move(kids));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Appends every multiset of trees with total order `remaining`, drawing from
// pool[i..] only, so each multiset is produced once.
inline void multisets(const std::vector<RootedTree>& pool, std::size_t start, std::size_t remaining,
                      std::vector<RootedTree>& current, std::vector<std::vector<RootedTree>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    if (pool[i].order() > remaining) continue;
    current.push_back(pool[i]);
    multisets(pool, i, remaining - pool[i].order(), current, out);
    current.pop_back();
  }
}

}  // namespace detail

/// Trees of order 1..max_order; entry k holds the trees of order k+1 sorted
/// ascending in the canonical order.
inline std::vector<std::vector<RootedTree>> enumerate_trees(std::size_t max_order,
                                                            std::size_t cap = kDefaultMaxTreeOrder) {
  if (max_order > cap)
    throw ResourceLimitError("tree order " + std::to_string(max_order) + " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<RootedTree>> by_order;
  std::vector<RootedTree> pool;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::vector<std::vector<RootedTree>> child_sets;
    std::vector<RootedTree> current;
    detail::multisets(pool, 0, n - 1, current, child_sets);
    std::vector<RootedTree> level;
    level.reserve(child_sets.size());
    for (auto& kids : child_sets) level.emplace_back(std::move(kids));
    std::sort(level.begin(), level.end());
    pool.insert(pool.end(), level.begin(), level.end());
    by_order.push_back(std::move(level));
  }
  return by_order;
}

/// Forests of total order `degree` built from the given trees (which must
/// include every tree of order <= degree), sorted ascending by serialization.
inline std::vector<Forest> forests_of_degree(std::size_t degree, const std::vector<RootedTree>& trees) {
  std::vector<std::vector<RootedTree>> sets;
  std::vector<RootedTree> current;
  detail::multisets(trees, 0, degree, current, sets);
  std::vector<Forest> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopfchar
