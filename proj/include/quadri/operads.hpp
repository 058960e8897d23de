#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadri/linear.hpp"
#include "quadri/rewriting.hpp"
#include "quadri/trees.hpp"

namespace quadri {

// Generator indices of the quadri operads, in the order the four products
// are usually listed.
inline constexpr int kNw = 0;
inline constexpr int kSw = 1;
inline constexpr int kSe = 2;
inline constexpr int kNe = 3;

// Dendriform generators.
inline constexpr int kPrec = 0;
inline constexpr int kSucc = 1;

// Diassociative generators (left product first).
inline constexpr int kDashv = 0;
inline constexpr int kVdash = 1;

/// A quadratic presentation: binary generators plus relation vectors in the
/// arity-3 component of the free operad.
struct PresentedOperad {
  std::string name;
  std::vector<std::string> generator_names;
  std::vector<LinComb<TreeMonomial>> relations;

  int num_generators() const { return static_cast<int>(generator_names.size()); }
};

enum class OperadName { kQuad, kDend, kDias, kQuadShriek };

namespace detail {

inline LinComb<TreeMonomial> combination(
    std::initializer_list<std::pair<TreeMonomial, int>> terms) {
  LinComb<TreeMonomial> v;
  for (const auto& [m, c] : terms) v.add(m, Rational(c));
  return v;
}

}  // namespace detail

/// The nine quadri-algebra relations, rows of the 3x3 matrix with every
/// derived product expanded into generator sums.
inline std::vector<LinComb<TreeMonomial>> quad_relations() {
  using T = TreeMonomial;
  auto L = [](int bottom, int top) { return T::left_comb3(bottom, top); };
  auto R = [](int bottom, int top) { return T::right_comb3(bottom, top); };
  return {
      // (x nw y) nw z = x nw (y * z)
      detail::combination({{L(kNw, kNw), 1},
                           {R(kNw, kNw), -1},
                           {R(kNw, kSw), -1},
                           {R(kNw, kSe), -1},
                           {R(kNw, kNe), -1}}),
      // (x ne y) nw z = x ne (y <- z)
      detail::combination({{L(kNw, kNe), 1}, {R(kNe, kNw), -1}, {R(kNe, kSw), -1}}),
      // (x up y) ne z = x ne (y -> z)
      detail::combination(
          {{L(kNe, kNw), 1}, {L(kNe, kNe), 1}, {R(kNe, kNe), -1}, {R(kNe, kSe), -1}}),
      // (x sw y) nw z = x sw (y up z)
      detail::combination({{L(kNw, kSw), 1}, {R(kSw, kNw), -1}, {R(kSw, kNe), -1}}),
      // (x se y) nw z = x se (y nw z)
      detail::combination({{L(kNw, kSe), 1}, {R(kSe, kNw), -1}}),
      // (x down y) ne z = x se (y ne z)
      detail::combination({{L(kNe, kSw), 1}, {L(kNe, kSe), 1}, {R(kSe, kNe), -1}}),
      // (x <- y) sw z = x sw (y down z)
      detail::combination(
          {{L(kSw, kNw), 1}, {L(kSw, kSw), 1}, {R(kSw, kSw), -1}, {R(kSw, kSe), -1}}),
      // (x -> y) sw z = x se (y sw z)
      detail::combination({{L(kSw, kNe), 1}, {L(kSw, kSe), 1}, {R(kSe, kSw), -1}}),
      // (x * y) se z = x se (y se z)
      detail::combination({{L(kSe, kNw), 1},
                           {L(kSe, kSw), 1},
                           {L(kSe, kSe), 1},
                           {L(kSe, kNe), 1},
                           {R(kSe, kSe), -1}}),
  };
}

/// The dual relations, nine groups of identified monomials. Group g lists
/// monomials that are all equal in the dual operad; the first entry of each
/// group is its normal form under the rewriting order.
inline std::vector<std::vector<TreeMonomial>> quad_shriek_groups() {
  using T = TreeMonomial;
  auto L = [](int bottom, int top) { return T::left_comb3(bottom, top); };
  auto R = [](int bottom, int top) { return T::right_comb3(bottom, top); };
  return {
      {L(kNw, kNw), R(kNw, kNw), R(kNw, kSw), R(kNw, kSe), R(kNw, kNe)},
      {L(kNw, kNe), R(kNe, kNw), R(kNe, kSw)},
      {L(kNe, kNe), L(kNe, kNw), R(kNe, kSe), R(kNe, kNe)},
      {L(kNw, kSw), R(kSw, kNw), R(kSw, kNe)},
      {L(kNw, kSe), R(kSe, kNw)},
      {L(kNe, kSe), L(kNe, kSw), R(kSe, kNe)},
      {L(kSw, kSw), L(kSw, kNw), R(kSw, kSw), R(kSw, kSe)},
      {L(kSw, kSe), L(kSw, kNe), R(kSe, kSw)},
      {L(kSe, kSe), L(kSe, kNw), L(kSe, kSw), L(kSe, kNe), R(kSe, kSe)},
  };
}

inline PresentedOperad presentation(OperadName name) {
  using T = TreeMonomial;
  auto L = [](int bottom, int top) { return T::left_comb3(bottom, top); };
  auto R = [](int bottom, int top) { return T::right_comb3(bottom, top); };
  switch (name) {
    case OperadName::kQuad:
      return {"quad", {"nw", "sw", "se", "ne"}, quad_relations()};
    case OperadName::kDend:
      return {"dend",
              {"prec", "succ"},
              {
                  detail::combination(
                      {{L(kPrec, kPrec), 1}, {R(kPrec, kPrec), -1}, {R(kPrec, kSucc), -1}}),
                  detail::combination({{L(kPrec, kSucc), 1}, {R(kSucc, kPrec), -1}}),
                  detail::combination(
                      {{L(kSucc, kPrec), 1}, {L(kSucc, kSucc), 1}, {R(kSucc, kSucc), -1}}),
              }};
    case OperadName::kDias:
      // The five identifications of the dialgebra axioms, written as
      // (left comb) - (right comb) binomials.
      return {"dias",
              {"dashv", "vdash"},
              {
                  detail::combination({{L(kDashv, kDashv), 1}, {R(kDashv, kDashv), -1}}),
                  detail::combination({{L(kDashv, kDashv), 1}, {R(kDashv, kVdash), -1}}),
                  detail::combination({{L(kDashv, kVdash), 1}, {R(kVdash, kDashv), -1}}),
                  detail::combination({{L(kVdash, kDashv), 1}, {R(kVdash, kVdash), -1}}),
                  detail::combination({{L(kVdash, kVdash), 1}, {R(kVdash, kVdash), -1}}),
              }};
    case OperadName::kQuadShriek: {
      // One relation per non-minimal monomial of each group: m - nf(group).
      std::vector<LinComb<TreeMonomial>> relations;
      for (const auto& group : quad_shriek_groups()) {
        for (std::size_t i = 1; i < group.size(); ++i)
          relations.push_back(detail::combination({{group[i], 1}, {group[0], -1}}));
      }
      return {"quad!", {"nw", "sw", "se", "ne"}, std::move(relations)};
    }
  }
  throw std::invalid_argument("unknown operad");
}

/// Rewriting order for the dual quadri operad: se < ne < sw < nw.
inline MonomialOrder quad_shriek_order() { return MonomialOrder{{3, 2, 0, 1}}; }
/// Dendriform order: succ < prec.
inline MonomialOrder dend_order() { return MonomialOrder{{1, 0}}; }
/// Diassociative order: vdash < dashv.
inline MonomialOrder dias_order() { return MonomialOrder{{1, 0}}; }

inline RewritingSystem quad_shriek_system() {
  return orient(presentation(OperadName::kQuadShriek).relations, quad_shriek_order(), 4);
}
inline RewritingSystem dend_system() {
  return orient(presentation(OperadName::kDend).relations, dend_order(), 2);
}
inline RewritingSystem dias_system() {
  return orient(presentation(OperadName::kDias).relations, dias_order(), 2);
}

/// The signed pairing on the arity-3 component: left combs pair +1 with
/// themselves, right combs -1, cross terms vanish (generators orthonormal).
inline BilinearForm<TreeMonomial> arity3_pairing(int num_generators) {
  BilinearForm<TreeMonomial> form;
  for (const TreeMonomial& m : free_basis(num_generators, 3)) {
    bool right_comb = m.code()[1] == TreeMonomial::kLeaf;
    LinComb<TreeMonomial> row;
    row.add(m, Rational(right_comb ? -1 : 1));
    form.emplace(m, std::move(row));
  }
  return form;
}

/// Koszul dual presentation: same generators, relations R^perp under the
/// signed arity-3 pairing.
inline PresentedOperad koszul_dual(const PresentedOperad& p) {
  PresentedOperad dual;
  dual.name = p.name + "!";
  dual.generator_names = p.generator_names;
  dual.relations = orth_complement(p.relations, arity3_pairing(p.num_generators()));
  return dual;
}

namespace detail {

// (a, b, c, d) with the relation reading (x a y) b z = x c (y d z).
struct IdentificationTuple {
  int a, b, c, d;
};

inline IdentificationTuple binomial_tuple(const LinComb<TreeMonomial>& rel) {
  if (rel.size() != 2) throw std::invalid_argument("relation is not a monomial identification");
  const TreeMonomial* lc = nullptr;
  const TreeMonomial* rc = nullptr;
  Rational clc, crc;
  for (const auto& [m, c] : rel) {
    if (m.arity() != 3) throw std::invalid_argument("relation is not quadratic");
    if (m.code()[1] == TreeMonomial::kLeaf) {
      rc = &m;
      crc = c;
    } else {
      lc = &m;
      clc = c;
    }
  }
  if (lc == nullptr || rc == nullptr || clc != -crc)
    throw std::invalid_argument("relation is not a monomial identification");
  auto ld = lc->decorations_preorder();  // (bottom, top) = (b, a)
  auto rd = rc->decorations_preorder();  // (bottom, top) = (c, d)
  return {ld[1], ld[0], rd[0], rd[1]};
}

}  // namespace detail

/// Black Manin product on presentations given by monomial identifications:
/// generators are pairs, and every pair of input identifications yields one
/// identification on the pairs, componentwise.
inline PresentedOperad manin_black_relations(const PresentedOperad& p, const PresentedOperad& q) {
  int kq = q.num_generators();
  auto pair_gen = [kq](int gp, int gq) { return gp * kq + gq; };

  PresentedOperad out;
  out.name = p.name + "#" + q.name;
  for (int gp = 0; gp < p.num_generators(); ++gp)
    for (int gq = 0; gq < kq; ++gq)
      out.generator_names.push_back("(" + p.generator_names[gp] + "," + q.generator_names[gq] +
                                    ")");

  for (const auto& rp : p.relations) {
    auto t1 = detail::binomial_tuple(rp);
    for (const auto& rq : q.relations) {
      auto t2 = detail::binomial_tuple(rq);
      out.relations.push_back(detail::combination(
          {{TreeMonomial::left_comb3(pair_gen(t1.b, t2.b), pair_gen(t1.a, t2.a)), 1},
           {TreeMonomial::right_comb3(pair_gen(t1.c, t2.c), pair_gen(t1.d, t2.d)), -1}}));
    }
  }
  return out;
}

template <typename B>
LinComb<B> relabel_generators(const LinComb<TreeMonomial>& v, std::span<const int> map)
  requires std::is_same_v<B, TreeMonomial>
{
  return v.map_keys([&](const TreeMonomial& m) { return m.relabel(map); });
}

/// The embedding of the quadri operad into the tensor square of the
/// dendriform operad: each quadri generator maps to a pair of dendriform
/// generators, and images are reported in normal-form coordinates.
class ThetaMap {
 public:
  ThetaMap() : dend_(dend_system()) {}

  /// Image of a quadri tree monomial, expanded over pairs of dendriform
  /// normal-form monomials.
  LinComb<Tensor<TreeMonomial, TreeMonomial>> expand(const TreeMonomial& m) const {
    static constexpr int kFirst[4] = {kPrec, kPrec, kSucc, kSucc};   // nw, sw, se, ne
    static constexpr int kSecond[4] = {kPrec, kSucc, kSucc, kPrec};
    TreeMonomial t1 = m.relabel(std::span<const int>(kFirst, 4));
    TreeMonomial t2 = m.relabel(std::span<const int>(kSecond, 4));
    return tensor(dend_.normal_form(t1), dend_.normal_form(t2));
  }

  LinComb<Tensor<TreeMonomial, TreeMonomial>> expand(const LinComb<TreeMonomial>& v) const {
    LinComb<Tensor<TreeMonomial, TreeMonomial>> out;
    for (const auto& [m, c] : v) out += c * expand(m);
    return out;
  }

  const RewritingSystem& dend() const { return dend_; }

 private:
  RewritingSystem dend_;
};

}  // namespace quadri
