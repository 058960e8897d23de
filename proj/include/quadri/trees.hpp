#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadri {

/// A planar binary tree whose internal vertices carry generator indices.
/// Stored as a preorder code: kLeaf for a leaf, otherwise the decoration of
/// an internal vertex followed by the codes of its two subtrees. For the two
/// arity-3 shapes the preorder decoration sequence reads (bottom vertex, top
/// vertex), matching the usual picture of the combs.
class TreeMonomial {
 public:
  static constexpr std::int8_t kLeaf = -1;

  TreeMonomial() : code_{kLeaf} {}

  static TreeMonomial leaf() { return TreeMonomial(); }

  static TreeMonomial node(int gen, const TreeMonomial& left, const TreeMonomial& right) {
    TreeMonomial t;
    t.code_.clear();
    t.code_.push_back(static_cast<std::int8_t>(gen));
    t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
    t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
    return t;
  }

  static TreeMonomial corolla(int gen) { return node(gen, leaf(), leaf()); }

  static TreeMonomial from_code(std::vector<std::int8_t> code) {
    TreeMonomial t;
    t.code_ = std::move(code);
    return t;
  }

  /// (x top y) bottom z
  static TreeMonomial left_comb3(int bottom, int top) {
    return node(bottom, corolla(top), leaf());
  }
  /// x bottom (y top z)
  static TreeMonomial right_comb3(int bottom, int top) {
    return node(bottom, leaf(), corolla(top));
  }

  bool is_leaf() const { return code_.size() == 1 && code_[0] == kLeaf; }
  int root_generator() const { return code_[0]; }

  int leaves() const {
    int n = 0;
    for (std::int8_t c : code_)
      if (c == kLeaf) ++n;
    return n;
  }
  int arity() const { return leaves(); }
  int internal_vertices() const { return static_cast<int>(code_.size()) - leaves(); }

  const std::vector<std::int8_t>& code() const { return code_; }

  std::vector<int> decorations_preorder() const {
    std::vector<int> d;
    for (std::int8_t c : code_)
      if (c != kLeaf) d.push_back(c);
    return d;
  }

  /// The undecorated shape: every internal vertex masked to 0.
  std::vector<std::int8_t> shape_mask() const {
    std::vector<std::int8_t> s(code_);
    for (std::int8_t& c : s)
      if (c != kLeaf) c = 0;
    return s;
  }

  /// Sum over leaves of the number of right edges on the root path. Strictly
  /// decreases under right rotations, which is what makes it usable as the
  /// head of the rewriting order.
  int right_edge_weight() const {
    int total = 0;
    std::size_t pos = 0;
    weight_rec(pos, 0, total);
    return total;
  }

  /// Partial composition: grafts `inner` onto the 1-based `position`-th leaf.
  TreeMonomial graft(int position, const TreeMonomial& inner) const {
    if (position < 1 || position > leaves()) throw std::out_of_range("graft position");
    TreeMonomial out;
    out.code_.clear();
    int seen = 0;
    for (std::int8_t c : code_) {
      if (c == kLeaf && ++seen == position) {
        out.code_.insert(out.code_.end(), inner.code_.begin(), inner.code_.end());
      } else {
        out.code_.push_back(c);
      }
    }
    return out;
  }

  /// Simultaneously replaces the i-th leaf by parts[i].
  TreeMonomial substitute_leaves(std::span<const TreeMonomial> parts) const {
    if (static_cast<int>(parts.size()) != leaves())
      throw std::invalid_argument("leaf substitution arity mismatch");
    TreeMonomial out;
    out.code_.clear();
    int seen = 0;
    for (std::int8_t c : code_) {
      if (c == kLeaf) {
        const auto& p = parts[seen++].code_;
        out.code_.insert(out.code_.end(), p.begin(), p.end());
      } else {
        out.code_.push_back(c);
      }
    }
    return out;
  }

  /// End offset (one past) of the subtree starting at code offset `pos`.
  std::size_t subtree_end(std::size_t pos) const {
    int pending = 1;
    while (pending > 0) {
      if (code_[pos] == kLeaf)
        --pending;
      else
        ++pending;
      ++pos;
    }
    return pos;
  }

  TreeMonomial subtree(std::size_t pos) const {
    TreeMonomial t;
    t.code_.assign(code_.begin() + pos, code_.begin() + subtree_end(pos));
    return t;
  }

  TreeMonomial relabel(std::span<const int> generator_map) const {
    TreeMonomial t(*this);
    for (std::int8_t& c : t.code_)
      if (c != kLeaf) c = static_cast<std::int8_t>(generator_map[c]);
    return t;
  }

  friend std::strong_ordering operator<=>(const TreeMonomial& a, const TreeMonomial& b) = default;

  std::string str(std::span<const std::string> gen_names) const {
    std::ostringstream os;
    std::size_t pos = 0;
    int leaf_counter = 0;
    print_rec(pos, gen_names, leaf_counter, os);
    return os.str();
  }

 private:
  void weight_rec(std::size_t& pos, int right_edges, int& total) const {
    if (code_[pos] == kLeaf) {
      total += right_edges;
      ++pos;
      return;
    }
    ++pos;
    weight_rec(pos, right_edges, total);
    weight_rec(pos, right_edges + 1, total);
  }

  void print_rec(std::size_t& pos, std::span<const std::string> gen_names, int& leaf_counter,
                 std::ostringstream& os) const {
    if (code_[pos] == kLeaf) {
      ++pos;
      os << ++leaf_counter;
      return;
    }
    int gen = code_[pos];
    ++pos;
    os << '(';
    print_rec(pos, gen_names, leaf_counter, os);
    os << ' ' << gen_names[gen] << ' ';
    print_rec(pos, gen_names, leaf_counter, os);
    os << ')';
  }

  std::vector<std::int8_t> code_;
};

/// Every planar binary tree shape with n leaves, in a fixed recursive order.
inline std::vector<TreeMonomial> tree_shapes(int n) {
  if (n < 1) throw std::invalid_argument("tree arity must be positive");
  if (n == 1) return {TreeMonomial::leaf()};
  std::vector<TreeMonomial> out;
  for (int i = 1; i < n; ++i) {
    for (const auto& left : tree_shapes(i))
      for (const auto& right : tree_shapes(n - i))
        out.push_back(TreeMonomial::node(0, left, right));
  }
  return out;
}

/// Basis of the arity-n component of the free nonsymmetric operad on
/// `num_generators` binary generators: Catalan(n-1) * k^(n-1) monomials.
inline std::vector<TreeMonomial> free_basis(int num_generators, int n) {
  std::vector<TreeMonomial> out;
  for (const auto& shape : tree_shapes(n)) {
    int vertices = shape.internal_vertices();
    std::vector<int> dec(vertices, 0);
    while (true) {
      std::vector<std::int8_t> code = shape.code();
      int idx = 0;
      for (std::int8_t& c : code)
        if (c != TreeMonomial::kLeaf) c = static_cast<std::int8_t>(dec[idx++]);
      out.push_back(TreeMonomial::from_code(std::move(code)));
      int j = vertices - 1;
      while (j >= 0 && dec[j] == num_generators - 1) dec[j--] = 0;
      if (j < 0) break;
      ++dec[j];
    }
  }
  return out;
}

}  // namespace quadri
