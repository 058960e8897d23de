#pragma once

#include <stdexcept>
#include <vector>

#include "quadri/engine.hpp"
#include "quadri/words.hpp"

namespace quadri {

/// m(w): last position of the letter 1; M(w): last position of the maximum.
struct WordStats {
  int m = 0;
  int M = 0;
};

inline WordStats word_stats(const PackedWord& w) {
  WordStats st;
  int mx = w.max_letter();
  for (int p = 1; p <= w.size(); ++p) {
    if (w(p) == 1) st.m = p;
    if (w(p) == mx) st.M = p;
  }
  return st;
}

/// Every packed word w of length |u| + |v| whose prefix packs to u and
/// suffix packs to v. Enumerated by fusing the two value alphabets: a pair
/// of strictly increasing maps into a common initial segment covering it.
inline std::vector<PackedWord> enumerate_quasi_shuffles(const PackedWord& u,
                                                        const PackedWord& v) {
  int p = u.max_letter(), q = v.max_letter();
  std::vector<PackedWord> out;
  for (int r = std::max(p, q); r <= p + q; ++r) {
    // f, g: ascending value maps [p] -> [r], [q] -> [r].
    std::vector<int> f(p), g(q);
    auto first_map = [r](std::vector<int>& m) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i) + 1;
      return static_cast<int>(m.size()) <= r;
    };
    auto next_map = [r](std::vector<int>& m) {
      int k = static_cast<int>(m.size());
      int i = k - 1;
      while (i >= 0 && m[i] == r - (k - 1 - i)) --i;
      if (i < 0) return false;
      ++m[i];
      for (int j = i + 1; j < k; ++j) m[j] = m[j - 1] + 1;
      return true;
    };
    if (!first_map(f)) continue;
    do {
      if (!first_map(g)) continue;
      do {
        std::vector<bool> hit(r, false);
        for (int x : f) hit[x - 1] = true;
        for (int x : g) hit[x - 1] = true;
        bool covers = true;
        for (bool b : hit) covers = covers && b;
        if (!covers) continue;
        Word w;
        w.reserve(u.size() + v.size());
        for (int x : u.word()) w.push_back(f[x - 1]);
        for (int x : v.word()) w.push_back(g[x - 1]);
        out.push_back(PackedWord(w));
      } while (next_map(g));
    } while (next_map(f));
  }
  return out;
}

namespace detail {

inline bool quasi_shuffle_admitted(Kind k, const WordStats& st, int prefix) {
  bool m_left = st.m <= prefix;
  bool M_left = st.M <= prefix;
  switch (k) {
    case Kind::kNw: return m_left && M_left;
    case Kind::kSw: return M_left && !m_left;
    case Kind::kSe: return !m_left && !M_left;
    case Kind::kNe: return m_left && !M_left;
    default: throw std::invalid_argument("basic kinds only");
  }
}

}  // namespace detail

/// Quasi-shuffle products filtered by where the last 1 and the last maximum
/// land relative to the prefix.
inline LinComb<PackedWord> wqsym_product(Kind kind, const PackedWord& u, const PackedWord& v) {
  LinComb<PackedWord> out;
  for (const PackedWord& w : enumerate_quasi_shuffles(u, v)) {
    WordStats st = word_stats(w);
    bool keep = false;
    for (Kind b : basic_components(kind))
      keep = keep || detail::quasi_shuffle_admitted(b, st, u.size());
    if (keep) out.add(w, Rational(1));
  }
  return out;
}

/// Reduced coproducts by alphabet cuts, filtered by the first and last
/// letters of the word.
inline LinComb<Tensor<PackedWord, PackedWord>> wqsym_coproduct(Kind kind, const PackedWord& u) {
  LinComb<Tensor<PackedWord, PackedWord>> out;
  int mx = u.max_letter();
  int first = u(1), last = u(u.size());
  auto cut_filter = [&](Kind k, int i) {
    switch (k) {
      case Kind::kNw: return first <= i && last <= i;
      case Kind::kSw: return last <= i && i < first;
      case Kind::kSe: return i < first && i < last;
      case Kind::kNe: return first <= i && i < last;
      default: throw std::invalid_argument("basic kinds only");
    }
  };
  for (int i = 1; i < mx; ++i) {
    bool keep = false;
    for (Kind b : basic_components(kind)) keep = keep || cut_filter(b, i);
    if (!keep) continue;
    auto [left, right] = restrict_word(u, i);
    out.add({PackedWord(left), pack(right)}, Rational(1));
  }
  return out;
}

inline QuadriOps<PackedWord> wqsym_ops() {
  QuadriOps<PackedWord> ops;
  for (int g = 0; g < 4; ++g)
    ops.basic[g] = [g](const PackedWord& a, const PackedWord& b) {
      return wqsym_product(static_cast<Kind>(g), a, b);
    };
  return ops;
}

inline QuadriCoops<PackedWord> wqsym_coops() {
  QuadriCoops<PackedWord> coops;
  for (int g = 0; g < 4; ++g)
    coops.basic[g] = [g](const PackedWord& a) {
      return wqsym_coproduct(static_cast<Kind>(g), a);
    };
  return coops;
}

/// All packed words of length n.
inline std::vector<PackedWord> all_packed_words(int n) {
  std::vector<PackedWord> out;
  Word w(n, 1);
  while (true) {
    int mx = 0;
    for (int x : w) mx = std::max(mx, x);
    std::vector<bool> seen(mx, false);
    for (int x : w) seen[x - 1] = true;
    bool packed = true;
    for (bool b : seen) packed = packed && b;
    if (packed) out.push_back(PackedWord(w));
    int i = n - 1;
    while (i >= 0 && w[i] == n) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

}  // namespace quadri
