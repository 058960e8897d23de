#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quadri/lincomb.hpp"
#include "quadri/trees.hpp"

namespace quadri {

/// Total order on tree monomials of a fixed arity: right-edge weight of the
/// shape first, then the shape code, then the preorder decoration sequence
/// compared through the generator ranks. A rewrite that replaces a right
/// comb by a left comb lowers the weight; one that only changes a decoration
/// keeps the shape and lowers the decoration sequence, so every rule of the
/// systems below strictly decreases this order.
struct MonomialOrder {
  std::vector<int> generator_rank;  // rank[g] = position in the ascending generator order

  bool less(const TreeMonomial& a, const TreeMonomial& b) const {
    int wa = a.right_edge_weight(), wb = b.right_edge_weight();
    if (wa != wb) return wa < wb;
    auto sa = a.shape_mask(), sb = b.shape_mask();
    if (sa != sb) return sa < sb;
    auto da = a.decorations_preorder(), db = b.decorations_preorder();
    for (std::size_t i = 0; i < da.size(); ++i)
      if (da[i] != db[i]) return generator_rank[da[i]] < generator_rank[db[i]];
    return false;
  }

  const TreeMonomial* leading(const LinComb<TreeMonomial>& v) const {
    const TreeMonomial* best = nullptr;
    for (const auto& [m, c] : v)
      if (best == nullptr || less(*best, m)) best = &m;
    return best;
  }
};

struct RewriteRule {
  TreeMonomial lhs;           // arity 3
  LinComb<TreeMonomial> rhs;  // strictly smaller monomials
};

/// A position where an arity-3 pattern sits inside a monomial: the code
/// offset of the lower vertex plus the side of its internal child.
struct Occurrence {
  std::size_t vertex = 0;
  bool right_child = false;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

enum class Strategy { kInnermost, kOutermost };

struct ConfluenceReport {
  std::size_t rule_count = 0;
  std::size_t critical_count = 0;
  bool joinable = false;
  std::vector<TreeMonomial> failures;
};

class RewritingSystem {
 public:
  RewritingSystem(int num_generators, MonomialOrder order, std::vector<RewriteRule> rules)
      : num_generators_(num_generators),
        order_(std::move(order)),
        rules_(std::move(rules)),
        lookup_(2 * num_generators * num_generators, -1) {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const TreeMonomial& l = rules_[r].lhs;
      if (l.arity() != 3) throw std::invalid_argument("rule lhs must have arity 3");
      for (const auto& [m, c] : rules_[r].rhs)
        if (!order_.less(m, l)) throw std::invalid_argument("rule does not decrease the order");
      auto dec = l.decorations_preorder();
      bool rc = l.code()[1] == TreeMonomial::kLeaf;
      int& slot = lookup_[slot_index(rc, dec[0], dec[1])];
      if (slot != -1) throw std::invalid_argument("two rules share a left-hand side");
      slot = static_cast<int>(r);
    }
  }

  std::size_t size() const { return rules_.size(); }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const MonomialOrder& order() const { return order_; }
  int num_generators() const { return num_generators_; }

  /// Index of the rule matching the pattern at `occ`, or -1.
  int rule_at(const TreeMonomial& t, const Occurrence& occ) const {
    const auto& code = t.code();
    int bottom = code[occ.vertex];
    std::size_t child = occ.right_child ? t.subtree_end(occ.vertex + 1) : occ.vertex + 1;
    int top = code[child];
    return lookup_[slot_index(occ.right_child, bottom, top)];
  }

  /// All pattern positions (reducible or not) of t, in code order.
  std::vector<Occurrence> pattern_positions(const TreeMonomial& t) const {
    std::vector<Occurrence> out;
    const auto& code = t.code();
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (code[i] == TreeMonomial::kLeaf) continue;
      if (code[i + 1] != TreeMonomial::kLeaf) out.push_back({i, false});
      std::size_t right = t.subtree_end(i + 1);
      if (code[right] != TreeMonomial::kLeaf) out.push_back({i, true});
    }
    return out;
  }

  std::optional<Occurrence> find_redex(const TreeMonomial& t, Strategy strategy) const {
    std::optional<Occurrence> found;
    for (const Occurrence& occ : pattern_positions(t)) {
      if (rule_at(t, occ) < 0) continue;
      // Code order is outside-in: parents precede children. The innermost
      // strategy therefore takes the last reducible position.
      found = occ;
      if (strategy == Strategy::kOutermost) return found;
    }
    return found;
  }

  bool reducible(const TreeMonomial& t) const {
    return find_redex(t, Strategy::kOutermost).has_value();
  }

  /// Applies the rule matching `occ`; the caller must know it matches.
  LinComb<TreeMonomial> rewrite_at(const TreeMonomial& t, const Occurrence& occ) const {
    int r = rule_at(t, occ);
    if (r < 0) throw std::invalid_argument("no rule at occurrence");
    // Extract the three hanging subtrees x, y, z in leaf order.
    TreeMonomial x, y, z;
    if (occ.right_child) {
      std::size_t xs = occ.vertex + 1;
      x = t.subtree(xs);
      std::size_t top = t.subtree_end(xs);
      y = t.subtree(top + 1);
      z = t.subtree(t.subtree_end(top + 1));
    } else {
      std::size_t top = occ.vertex + 1;
      x = t.subtree(top + 1);
      std::size_t ys = t.subtree_end(top + 1);
      y = t.subtree(ys);
      z = t.subtree(t.subtree_end(ys));
    }
    std::size_t pattern_end = t.subtree_end(occ.vertex);

    LinComb<TreeMonomial> out;
    const TreeMonomial parts[3] = {x, y, z};
    for (const auto& [m, c] : rules_[r].rhs) {
      TreeMonomial replacement = m.substitute_leaves(parts);
      // Splice the replacement over the pattern span.
      std::vector<std::int8_t> code(t.code().begin(), t.code().begin() + occ.vertex);
      code.insert(code.end(), replacement.code().begin(), replacement.code().end());
      code.insert(code.end(), t.code().begin() + pattern_end, t.code().end());
      TreeMonomial whole = TreeMonomial::from_code(std::move(code));
      if (!order_.less(whole, t)) throw std::logic_error("rewrite step failed to decrease");
      out.add(whole, c);
    }
    return out;
  }

  LinComb<TreeMonomial> normal_form(const LinComb<TreeMonomial>& v,
                                    Strategy strategy = Strategy::kInnermost,
                                    std::size_t budget = 10000) const {
    LinComb<TreeMonomial> work = v;
    std::size_t steps = 0;
    while (true) {
      std::optional<TreeMonomial> redex_monomial;
      std::optional<Occurrence> redex_occ;
      for (const auto& [m, c] : work) {
        auto occ = find_redex(m, strategy);
        if (occ) {
          redex_monomial = m;
          redex_occ = occ;
          break;
        }
      }
      if (!redex_monomial) return work;
      if (++steps > budget) throw std::runtime_error("normal form budget exceeded");
      Rational c = work.coeff(*redex_monomial);
      work.add(*redex_monomial, -c);
      work += c * rewrite_at(*redex_monomial, *redex_occ);
    }
  }

  LinComb<TreeMonomial> normal_form(const TreeMonomial& m,
                                    Strategy strategy = Strategy::kInnermost,
                                    std::size_t budget = 10000) const {
    return normal_form(LinComb<TreeMonomial>(m), strategy, budget);
  }

  /// Arity-4 monomials in which two rule left-hand sides overlap. A quadratic
  /// pattern covers two of the three internal vertices, so two distinct
  /// occurrences always share a vertex; the condition is that both pattern
  /// positions of the monomial are reducible.
  std::vector<TreeMonomial> critical_monomials() const {
    std::vector<TreeMonomial> out;
    for (const TreeMonomial& t : free_basis(num_generators_, 4)) {
      auto positions = pattern_positions(t);
      std::size_t reducible_count = 0;
      for (const Occurrence& occ : positions)
        if (rule_at(t, occ) >= 0) ++reducible_count;
      if (reducible_count >= 2) out.push_back(t);
    }
    return out;
  }

  /// Reduces every critical monomial via each of its two overlapping rules
  /// first; the system is confluent on the monomial iff the normal forms
  /// agree.
  ConfluenceReport confluence_check(std::size_t budget = 10000) const {
    ConfluenceReport report;
    report.rule_count = rules_.size();
    auto criticals = critical_monomials();
    report.critical_count = criticals.size();
    report.joinable = true;
    for (const TreeMonomial& t : criticals) {
      std::vector<LinComb<TreeMonomial>> results;
      for (const Occurrence& occ : pattern_positions(t)) {
        if (rule_at(t, occ) < 0) continue;
        results.push_back(normal_form(rewrite_at(t, occ), Strategy::kInnermost, budget));
      }
      for (std::size_t i = 1; i < results.size(); ++i) {
        if (!(results[i] == results[0])) {
          report.joinable = false;
          report.failures.push_back(t);
          break;
        }
      }
    }
    return report;
  }

  std::size_t normal_form_count(int arity) const {
    std::size_t count = 0;
    for (const TreeMonomial& t : free_basis(num_generators_, arity))
      if (!reducible(t)) ++count;
    return count;
  }

  /// Normal-form monomial counts for arities lo..hi. After a successful
  /// confluence check these are the operad dimensions.
  std::vector<std::size_t> dims_from_normal_forms(int lo, int hi) const {
    std::vector<std::size_t> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(normal_form_count(n));
    return dims;
  }

 private:
  std::size_t slot_index(bool right_comb, int bottom, int top) const {
    return (right_comb ? 1u : 0u) * num_generators_ * num_generators_ +
           static_cast<std::size_t>(bottom) * num_generators_ + static_cast<std::size_t>(top);
  }

  int num_generators_;
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::vector<int> lookup_;
};

/// Turns relation vectors into rules: each relation r with leading monomial
/// L and coefficient c becomes L -> L - r/c. Relations sharing a leading
/// monomial are first echelonized against each other, so the rule set
/// presents the same span with pairwise distinct left-hand sides.
inline RewritingSystem orient(const std::vector<LinComb<TreeMonomial>>& relations,
                              MonomialOrder order, int num_generators) {
  std::vector<std::pair<TreeMonomial, LinComb<TreeMonomial>>> reduced;
  for (const auto& relation : relations) {
    LinComb<TreeMonomial> rel = relation;
    while (!rel.empty()) {
      const TreeMonomial* lead = order.leading(rel);
      auto clash = std::find_if(reduced.begin(), reduced.end(),
                                [&](const auto& entry) { return entry.first == *lead; });
      if (clash == reduced.end()) {
        reduced.emplace_back(*lead, rel);
        break;
      }
      rel -= (rel.coeff(*lead) / clash->second.coeff(*lead)) * clash->second;
    }
  }
  std::vector<RewriteRule> rules;
  for (auto& [lead, rel] : reduced) {
    Rational c = rel.coeff(lead);
    LinComb<TreeMonomial> rhs = rel;
    rhs *= Rational(-1) / c;
    rhs.add(lead, Rational(1));
    rules.push_back(RewriteRule{lead, std::move(rhs)});
  }
  return RewritingSystem(num_generators, std::move(order), std::move(rules));
}

}  // namespace quadri
