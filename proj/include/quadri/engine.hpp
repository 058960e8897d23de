#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "quadri/lincomb.hpp"
#include "quadri/operads.hpp"

namespace quadri {

/// The four basic products/coproducts and the derived ones. The basic values
/// coincide with the generator indices kNw..kNe.
enum class Kind { kNw = 0, kSw = 1, kSe = 2, kNe = 3, kLeft, kRight, kUp, kDown, kStar };

inline constexpr std::array<Kind, 4> kBasicKinds = {Kind::kNw, Kind::kSw, Kind::kSe, Kind::kNe};

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::kNw: return "nw";
    case Kind::kSw: return "sw";
    case Kind::kSe: return "se";
    case Kind::kNe: return "ne";
    case Kind::kLeft: return "left";
    case Kind::kRight: return "right";
    case Kind::kUp: return "up";
    case Kind::kDown: return "down";
    case Kind::kStar: return "star";
  }
  return "?";
}

/// Which basic products a derived product sums. For products the splitting
/// follows the quadrants: left = nw+sw, right = se+ne, up = nw+ne,
/// down = sw+se.
inline std::vector<Kind> basic_components(Kind k) {
  switch (k) {
    case Kind::kLeft: return {Kind::kNw, Kind::kSw};
    case Kind::kRight: return {Kind::kSe, Kind::kNe};
    case Kind::kUp: return {Kind::kNw, Kind::kNe};
    case Kind::kDown: return {Kind::kSw, Kind::kSe};
    case Kind::kStar: return {Kind::kNw, Kind::kSw, Kind::kSe, Kind::kNe};
    default: return {k};
  }
}

/// A quadri-algebra presented through its four product evaluators on basis
/// keys. Derived products are always computed, never stored.
template <typename B>
struct QuadriOps {
  using ProductFn = std::function<LinComb<B>(const B&, const B&)>;
  std::array<ProductFn, 4> basic;  // indexed nw, sw, se, ne

  LinComb<B> product(Kind k, const B& x, const B& y) const {
    LinComb<B> out;
    for (Kind b : basic_components(k)) out += basic[static_cast<int>(b)](x, y);
    return out;
  }

  LinComb<B> product(Kind k, const LinComb<B>& x, const LinComb<B>& y) const {
    LinComb<B> out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y) out += (cx * cy) * product(k, kx, ky);
    return out;
  }
};

/// A quadri-coalgebra presented through its four reduced coproducts.
template <typename B>
struct QuadriCoops {
  using CoproductFn = std::function<LinComb<Tensor<B, B>>(const B&)>;
  std::array<CoproductFn, 4> basic;  // indexed nw, sw, se, ne

  LinComb<Tensor<B, B>> coproduct(Kind k, const B& c) const {
    LinComb<Tensor<B, B>> out;
    for (Kind b : basic_components(k)) out += basic[static_cast<int>(b)](c);
    return out;
  }

  LinComb<Tensor<B, B>> coproduct(Kind k, const LinComb<B>& v) const {
    LinComb<Tensor<B, B>> out;
    for (const auto& [key, c] : v) out += c * coproduct(k, key);
    return out;
  }
};

/// Evaluates an arity-3 tree monomial as a composite product on (x, y, z).
template <typename B>
LinComb<B> evaluate_tree3(const QuadriOps<B>& ops, const TreeMonomial& m, const B& x, const B& y,
                          const B& z) {
  auto dec = m.decorations_preorder();
  Kind bottom = static_cast<Kind>(dec[0]);
  Kind top = static_cast<Kind>(dec[1]);
  LinComb<B> lx(x), ly(y), lz(z);
  if (m.code()[1] == TreeMonomial::kLeaf)  // x bottom (y top z)
    return ops.product(bottom, lx, ops.product(top, ly, lz));
  return ops.product(bottom, ops.product(top, lx, ly), lz);
}

template <typename B>
LinComb<B> evaluate_relation3(const QuadriOps<B>& ops, const LinComb<TreeMonomial>& rel,
                              const B& x, const B& y, const B& z) {
  LinComb<B> out;
  for (const auto& [m, c] : rel) out += c * evaluate_tree3(ops, m, x, y, z);
  return out;
}

template <typename B>
using Triple = std::tuple<B, B, B>;

/// Transpose of evaluate_tree3: a left comb becomes (delta_top x Id) o
/// delta_bottom, a right comb (Id x delta_top) o delta_bottom.
template <typename B>
LinComb<Triple<B>> coevaluate_tree3(const QuadriCoops<B>& coops, const TreeMonomial& m,
                                    const B& c) {
  auto dec = m.decorations_preorder();
  Kind bottom = static_cast<Kind>(dec[0]);
  Kind top = static_cast<Kind>(dec[1]);
  bool right_comb = m.code()[1] == TreeMonomial::kLeaf;
  LinComb<Triple<B>> out;
  for (const auto& [pair1, c1] : coops.coproduct(bottom, c)) {
    const auto& inner = right_comb ? pair1.second : pair1.first;
    for (const auto& [pair2, c2] : coops.coproduct(top, inner)) {
      if (right_comb)
        out.add({pair1.first, pair2.first, pair2.second}, c1 * c2);
      else
        out.add({pair2.first, pair2.second, pair1.second}, c1 * c2);
    }
  }
  return out;
}

/// Defects of the nine quadri-algebra relations on the triple (x, y, z);
/// entry (i, j) sits at index 3*i + j. All zero iff the axioms hold there.
template <typename B>
std::array<LinComb<B>, 9> check_quadri_axioms(const QuadriOps<B>& ops, const B& x, const B& y,
                                              const B& z) {
  std::array<LinComb<B>, 9> defects;
  auto rels = quad_relations();
  for (std::size_t i = 0; i < 9; ++i) defects[i] = evaluate_relation3(ops, rels[i], x, y, z);
  return defects;
}

template <typename B>
struct DualAxiomReport {
  // One defect per identification, grouped (1)!..(9)!; 23 in total.
  std::vector<LinComb<B>> defects;
  // Value of each group's normal-form monomial on (x, y, z).
  std::array<LinComb<B>, 9> group_values;

  bool all_zero() const {
    for (const auto& d : defects)
      if (!d.empty()) return false;
    return true;
  }
};

/// Defects of the 23 dual-quadri identifications on (x, y, z).
template <typename B>
DualAxiomReport<B> check_dual_quadri_axioms(const QuadriOps<B>& ops, const B& x, const B& y,
                                            const B& z) {
  DualAxiomReport<B> report;
  auto groups = quad_shriek_groups();
  for (std::size_t g = 0; g < groups.size(); ++g) {
    LinComb<B> base = evaluate_tree3(ops, groups[g][0], x, y, z);
    report.group_values[g] = base;
    for (std::size_t i = 1; i < groups[g].size(); ++i)
      report.defects.push_back(evaluate_tree3(ops, groups[g][i], x, y, z) - base);
  }
  return report;
}

/// Defects of the nine quadri-coalgebra relations on c: each is the
/// transpose of the corresponding algebra relation.
template <typename B>
std::array<LinComb<Triple<B>>, 9> check_quadri_coaxioms(const QuadriCoops<B>& coops, const B& c) {
  std::array<LinComb<Triple<B>>, 9> defects;
  auto rels = quad_relations();
  for (std::size_t i = 0; i < 9; ++i) {
    LinComb<Triple<B>> d;
    for (const auto& [m, coeff] : rels[i]) d += coeff * coevaluate_tree3(coops, m, c);
    defects[i] = std::move(d);
  }
  return defects;
}

/// An elementary tensor in the unital extension A ⊗̄ A: one slot may hold the
/// formal unit (disengaged optional), but not both.
template <typename B>
struct UnitalPair {
  std::optional<B> first;
  std::optional<B> second;

  static UnitalPair both(B a, B b) { return {std::move(a), std::move(b)}; }
  static UnitalPair left_only(B a) { return {std::move(a), std::nullopt}; }   // a (x) 1
  static UnitalPair right_only(B b) { return {std::nullopt, std::move(b)}; }  // 1 (x) b

  friend auto operator<=>(const UnitalPair&, const UnitalPair&) = default;
};

namespace detail {

// Product with a unit slot: u <kind> 1 keeps u only for nw (and the derived
// kinds containing nw), 1 <kind> u keeps u only for se.
template <typename B>
LinComb<B> unit_on_right(const QuadriOps<B>&, Kind k, const LinComb<B>& u) {
  for (Kind b : basic_components(k))
    if (b == Kind::kNw) return u;
  return {};
}

template <typename B>
LinComb<B> unit_on_left(const QuadriOps<B>&, Kind k, const LinComb<B>& u) {
  for (Kind b : basic_components(k))
    if (b == Kind::kSe) return u;
  return {};
}

template <typename B>
LinComb<B> slot_product(const QuadriOps<B>& ops, Kind k, const std::optional<B>& a,
                        const std::optional<B>& b) {
  if (a && b) return ops.product(k, LinComb<B>(*a), LinComb<B>(*b));
  if (a) return unit_on_right(ops, k, LinComb<B>(*a));
  if (b) return unit_on_left(ops, k, LinComb<B>(*b));
  throw std::invalid_argument("1 <> 1 slot product");
}

template <typename B>
void emit_pair(LinComb<UnitalPair<B>>& out, const LinComb<B>& f, bool f_unit, const LinComb<B>& s,
               bool s_unit, const Rational& scale) {
  if (f_unit && s_unit) return;  // both factors collapsed to multiples of 1&(x)1: excluded
  if (f_unit) {
    for (const auto& [k, c] : s) out.add(UnitalPair<B>::right_only(k), scale * c);
  } else if (s_unit) {
    for (const auto& [k, c] : f) out.add(UnitalPair<B>::left_only(k), scale * c);
  } else {
    for (const auto& [kf, cf] : f)
      for (const auto& [ks, cs] : s) out.add(UnitalPair<B>::both(kf, ks), scale * cf * cs);
  }
}

}  // namespace detail

/// Product of two elementary tensors of A ⊗̄ A. Pairs with both second (resp.
/// first) slots unital multiply diagonally; mixed pairs factor through the
/// (up, left), (down, left), (down, right), (up, right) table.
template <typename B>
LinComb<UnitalPair<B>> unital_product(const QuadriOps<B>& ops, Kind k, const UnitalPair<B>& u,
                                      const UnitalPair<B>& v) {
  if (!u.first && !u.second) throw std::invalid_argument("1 (x) 1 operand");
  if (!v.first && !v.second) throw std::invalid_argument("1 (x) 1 operand");
  LinComb<UnitalPair<B>> out;
  if (!u.second && !v.second) {
    // (a (x) 1) <k> (a' (x) 1) = (a <k> a') (x) 1
    detail::emit_pair(out, ops.product(k, LinComb<B>(*u.first), LinComb<B>(*v.first)), false, {},
                      true, Rational(1));
    return out;
  }
  if (!u.first && !v.first) {
    detail::emit_pair(out, {}, true, ops.product(k, LinComb<B>(*u.second), LinComb<B>(*v.second)),
                      false, Rational(1));
    return out;
  }
  Kind row, col;
  switch (k) {
    case Kind::kNw: row = Kind::kUp; col = Kind::kLeft; break;
    case Kind::kSw: row = Kind::kDown; col = Kind::kLeft; break;
    case Kind::kSe: row = Kind::kDown; col = Kind::kRight; break;
    case Kind::kNe: row = Kind::kUp; col = Kind::kRight; break;
    default: throw std::invalid_argument("unital product needs a basic kind");
  }
  // Slot products of A-elements with at most one unit never output the unit
  // itself, so the mixed case lands in A (x) A.
  LinComb<B> f = detail::slot_product(ops, row, u.first, v.first);
  LinComb<B> s = detail::slot_product(ops, col, u.second, v.second);
  detail::emit_pair(out, f, false, s, false, Rational(1));
  return out;
}

namespace detail {

// Extended coproduct of Definition-10 type: the reduced terms plus the
// unital term a (x) 1 (for nw, up, left) or 1 (x) a (for se, down, right).
// In the bialgebra compatibilities the derived coproducts are the plain
// quadrant sums.
template <typename B>
std::vector<std::pair<UnitalPair<B>, Rational>> extended_coproduct(const QuadriCoops<B>& coops,
                                                                   Kind k, const LinComb<B>& a) {
  std::vector<std::pair<UnitalPair<B>, Rational>> terms;
  for (const auto& [pair, c] : coops.coproduct(k, a))
    terms.emplace_back(UnitalPair<B>::both(pair.first, pair.second), c);
  bool left_unital = false, right_unital = false;
  for (Kind b : basic_components(k)) {
    if (b == Kind::kNw) left_unital = true;   // contributes a (x) 1
    if (b == Kind::kSe) right_unital = true;  // contributes 1 (x) a
  }
  for (const auto& [key, c] : a) {
    if (left_unital) terms.emplace_back(UnitalPair<B>::left_only(key), c);
    if (right_unital) terms.emplace_back(UnitalPair<B>::right_only(key), c);
  }
  return terms;
}

}  // namespace detail

/// Defects of the sixteen quadri-bialgebra compatibilities on the pair
/// (a, b), indexed 4 * coproduct + product over the basic kinds in the order
/// nw, sw, se, ne. Compatibility (x, k):
///   delta_x(a <k> b) = delta_row(x)(a) <k> delta_col(x)(b)
/// with row nw,ne -> up / sw,se -> down and col nw,sw -> left / se,ne -> right.
template <typename B>
std::array<LinComb<UnitalPair<B>>, 16> check_bialgebra_compat(const QuadriOps<B>& ops,
                                                              const QuadriCoops<B>& coops,
                                                              const B& a, const B& b) {
  std::array<LinComb<UnitalPair<B>>, 16> defects;
  LinComb<B> la(a), lb(b);
  for (int xi = 0; xi < 4; ++xi) {
    Kind x = kBasicKinds[xi];
    Kind row = (x == Kind::kNw || x == Kind::kNe) ? Kind::kUp : Kind::kDown;
    Kind col = (x == Kind::kNw || x == Kind::kSw) ? Kind::kLeft : Kind::kRight;
    auto da = detail::extended_coproduct(coops, row, la);
    auto db = detail::extended_coproduct(coops, col, lb);
    for (int ki = 0; ki < 4; ++ki) {
      Kind k = kBasicKinds[ki];
      LinComb<B> ab = ops.product(k, la, lb);
      // Left side: extended coproduct of the product.
      LinComb<UnitalPair<B>> lhs;
      for (const auto& [key, c] : ab)
        for (const auto& [pair, cc] : detail::extended_coproduct(coops, x, LinComb<B>(key)))
          lhs.add(pair, c * cc);
      LinComb<UnitalPair<B>> rhs;
      for (const auto& [u, cu] : da)
        for (const auto& [v, cv] : db) rhs += (cu * cv) * unital_product(ops, k, u, v);
      defects[4 * xi + ki] = lhs - rhs;
    }
  }
  return defects;
}

}  // namespace quadri
