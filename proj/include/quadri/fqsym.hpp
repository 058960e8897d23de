#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "quadri/engine.hpp"
#include "quadri/linear.hpp"
#include "quadri/trees.hpp"
#include "quadri/words.hpp"

namespace quadri {

namespace detail {

// Shuffle filters: which block the first and last letter of the result must
// come from. Left operand = the first block.
inline bool shuffle_admitted(Kind k, const Shuffle& sh) {
  bool first_left = sh.first_letter_from_left();
  bool last_left = sh.last_letter_from_left();
  switch (k) {
    case Kind::kNw: return first_left && last_left;
    case Kind::kSw: return !first_left && last_left;
    case Kind::kSe: return !first_left && !last_left;
    case Kind::kNe: return first_left && !last_left;
    case Kind::kLeft: return last_left;
    case Kind::kRight: return !last_left;
    case Kind::kUp: return first_left;
    case Kind::kDown: return !first_left;
    case Kind::kStar: return true;
  }
  return false;
}

}  // namespace detail

/// Shifted shuffle of permutations filtered by the kind's first/last-letter
/// constraints.
inline LinComb<Permutation> fqsym_product(Kind kind, const Permutation& s, const Permutation& t) {
  if (s.size() == 0 || t.size() == 0) throw std::invalid_argument("augmentation ideal only");
  LinComb<Permutation> out;
  Word right = shift(t.word(), s.size());
  for (const Shuffle& sh : shuffles(s.size(), t.size())) {
    if (!detail::shuffle_admitted(kind, sh)) continue;
    out.add(Permutation(sh.apply(s.word(), right)), Rational(1));
  }
  return out;
}

/// Reduced coproducts: cuts of the one-line word filtered by the positions
/// of the extreme values 1 and n.
inline LinComb<Tensor<Permutation, Permutation>> fqsym_coproduct(Kind kind,
                                                                 const Permutation& s) {
  if (s.size() == 0) throw std::invalid_argument("augmentation ideal only");
  LinComb<Tensor<Permutation, Permutation>> out;
  int n = s.size();
  if (n == 1) return out;
  int pos1 = s.position_of(1);
  int posn = s.position_of(n);
  auto cut_filter = [&](Kind k, int i) -> bool {
    switch (k) {
      case Kind::kNw: return pos1 <= i && posn <= i;
      case Kind::kSw: return posn <= i && i < pos1;
      case Kind::kSe: return i < pos1 && i < posn;
      case Kind::kNe: return pos1 <= i && i < posn;
      default: throw std::invalid_argument("basic kinds only");
    }
  };
  for (int i = 1; i < n; ++i) {
    bool keep = false;
    for (Kind b : basic_components(kind)) keep = keep || cut_filter(b, i);
    if (!keep) continue;
    Word left(s.word().begin(), s.word().begin() + i);
    Word right(s.word().begin() + i, s.word().end());
    out.add({std_word(left), std_word(right)}, Rational(1));
  }
  return out;
}

/// The same shuffle splitting on plain words in a free alphabet.
inline LinComb<Word> shuffle_word_product(Kind kind, const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("augmentation ideal only");
  LinComb<Word> out;
  for (const Shuffle& sh : shuffles(static_cast<int>(u.size()), static_cast<int>(v.size()))) {
    if (!detail::shuffle_admitted(kind, sh)) continue;
    out.add(sh.apply(u, v), Rational(1));
  }
  return out;
}

inline QuadriOps<Permutation> fqsym_ops() {
  QuadriOps<Permutation> ops;
  for (int g = 0; g < 4; ++g)
    ops.basic[g] = [g](const Permutation& a, const Permutation& b) {
      return fqsym_product(static_cast<Kind>(g), a, b);
    };
  return ops;
}

inline QuadriCoops<Permutation> fqsym_coops() {
  QuadriCoops<Permutation> coops;
  for (int g = 0; g < 4; ++g)
    coops.basic[g] = [g](const Permutation& a) {
      return fqsym_coproduct(static_cast<Kind>(g), a);
    };
  return coops;
}

inline QuadriOps<Word> shuffle_word_ops() {
  QuadriOps<Word> ops;
  for (int g = 0; g < 4; ++g)
    ops.basic[g] = [g](const Word& a, const Word& b) {
      return shuffle_word_product(static_cast<Kind>(g), a, b);
    };
  return ops;
}

inline std::vector<Permutation> all_permutations(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Evaluates a free quadri-magma monomial (a decorated tree) on one
/// generator element.
template <typename B>
LinComb<B> evaluate_magma_monomial(const QuadriOps<B>& ops, const TreeMonomial& m,
                                   const LinComb<B>& generator) {
  if (m.is_leaf()) return generator;
  TreeMonomial left = m.subtree(1);
  TreeMonomial right = m.subtree(m.subtree_end(1));
  return ops.product(static_cast<Kind>(m.root_generator()),
                     evaluate_magma_monomial(ops, left, generator),
                     evaluate_magma_monomial(ops, right, generator));
}

struct SpanResult {
  // Per tree arity: number of magma monomials and the rank of their values.
  std::vector<std::size_t> monomial_counts;
  std::vector<std::size_t> ranks;
};

/// Rank witness of freeness: evaluates every decorated tree monomial over
/// the generator and compares ranks per arity against operad dimensions.
template <typename B>
SpanResult quadri_span(const QuadriOps<B>& ops, const LinComb<B>& generator, int generator_degree,
                       int max_degree) {
  SpanResult result;
  for (int arity = 1; arity * generator_degree <= max_degree; ++arity) {
    std::vector<LinComb<B>> values;
    for (const TreeMonomial& m : free_basis(4, arity))
      values.push_back(evaluate_magma_monomial(ops, m, generator));
    result.monomial_counts.push_back(values.size());
    result.ranks.push_back(rank(SparseMatrix<B>{values}));
  }
  return result;
}

/// Basis of the joint kernel of the four reduced coproducts on the degree-n
/// component.
inline std::vector<LinComb<Permutation>> quadri_primitives(int degree) {
  std::vector<Permutation> basis = all_permutations(degree);
  using Row = Tensor<Permutation, Permutation>;
  // One constraint row per (kind, tensor key): entries over the sigma columns.
  std::map<std::pair<int, Row>, LinComb<Permutation>> rows;
  for (const Permutation& s : basis)
    for (int g = 0; g < 4; ++g)
      for (const auto& [key, c] : fqsym_coproduct(static_cast<Kind>(g), s))
        rows[{g, key}].add(s, c);
  SparseMatrix<Permutation> m;
  for (auto& [k, row] : rows) m.rows.push_back(std::move(row));
  return kernel_basis(m, basis);
}

/// Odd/even splitting of an even permutation: halved halves if the first
/// half is odd and the second even, zero otherwise.
inline LinComb<Tensor<Permutation, Permutation>> psi(const Permutation& s) {
  if (s.size() % 2 != 0) throw std::invalid_argument("psi needs even length");
  int n = s.size() / 2;
  LinComb<Tensor<Permutation, Permutation>> out;
  for (int p = 1; p <= n; ++p)
    if (s(p) % 2 == 0) return out;
  for (int p = n + 1; p <= 2 * n; ++p)
    if (s(p) % 2 != 0) return out;
  Word left(n), right(n);
  for (int p = 1; p <= n; ++p) left[p - 1] = (s(p) + 1) / 2;
  for (int p = 1; p <= n; ++p) right[p - 1] = s(n + p) / 2;
  out.add({Permutation(left), Permutation(right)}, Rational(1));
  return out;
}

/// The quadri products on pure tensors of FQSym (x) FQSym: first slot through
/// up/down, second through left/right.
inline LinComb<Tensor<Permutation, Permutation>> fqsym_tensor_product(
    Kind kind, const LinComb<Tensor<Permutation, Permutation>>& a,
    const LinComb<Tensor<Permutation, Permutation>>& b) {
  Kind row, col;
  switch (kind) {
    case Kind::kNw: row = Kind::kUp; col = Kind::kLeft; break;
    case Kind::kSw: row = Kind::kDown; col = Kind::kLeft; break;
    case Kind::kSe: row = Kind::kDown; col = Kind::kRight; break;
    case Kind::kNe: row = Kind::kUp; col = Kind::kRight; break;
    default: throw std::invalid_argument("basic kinds only");
  }
  LinComb<Tensor<Permutation, Permutation>> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      out += (ca * cb) * tensor(fqsym_product(row, ka.first, kb.first),
                                fqsym_product(col, ka.second, kb.second));
  return out;
}

}  // namespace quadri
