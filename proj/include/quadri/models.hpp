#pragma once

#include <compare>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadri/engine.hpp"

namespace quadri {

/// The element (i,j)_n of the free dual quadri-algebra model: a grey-box
/// rectangle anchored in the upper-left corner of an n x n array.
struct Rect {
  int i = 1;
  int j = 1;
  int n = 1;

  Rect() = default;
  Rect(int i_, int j_, int n_) : i(i_), j(j_), n(n_) {
    if (n < 1 || i < 1 || j < 1 || i > n || j > n)
      throw std::invalid_argument("rectangle indices out of range");
  }

  friend auto operator<=>(const Rect&, const Rect&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '(' << i << ',' << j << ")_" << n;
    return os.str();
  }

  /// The grey-box picture: filled cells (a,b) with a <= i, b <= j, row a of
  /// column b of an n x n grid.
  std::string ascii_grid() const {
    std::ostringstream os;
    for (int b = 1; b <= n; ++b) {
      for (int a = 1; a <= n; ++a) os << (a <= i && b <= j ? '#' : '.');
      os << '\n';
    }
    return os.str();
  }
};

/// Product formulas on the model: monomial in every slot.
inline Rect rect_product(Kind k, const Rect& a, const Rect& b) {
  switch (k) {
    case Kind::kNw: return Rect(a.i, a.j, a.n + b.n);
    case Kind::kSw: return Rect(a.i, a.n + b.j, a.n + b.n);
    case Kind::kSe: return Rect(b.i + a.n, b.j + a.n, a.n + b.n);
    case Kind::kNe: return Rect(b.i + a.n, a.j, a.n + b.n);
    default: throw std::invalid_argument("rect product needs a basic kind");
  }
}

inline QuadriOps<Rect> rect_ops() {
  QuadriOps<Rect> ops;
  for (int g = 0; g < 4; ++g)
    ops.basic[g] = [g](const Rect& a, const Rect& b) {
      return LinComb<Rect>(rect_product(static_cast<Kind>(g), a, b));
    };
  return ops;
}

/// The decorated model: a rectangle with one decoration per unit of size.
struct DecoratedRect {
  Rect rect;
  std::vector<int> decorations;

  DecoratedRect(Rect r, std::vector<int> d) : rect(r), decorations(std::move(d)) {
    if (static_cast<int>(decorations.size()) != rect.n)
      throw std::invalid_argument("decoration length must equal the size");
  }

  friend auto operator<=>(const DecoratedRect&, const DecoratedRect&) = default;
};

inline DecoratedRect decorated_rect_product(Kind k, const DecoratedRect& a,
                                            const DecoratedRect& b) {
  std::vector<int> decorations = a.decorations;
  decorations.insert(decorations.end(), b.decorations.begin(), b.decorations.end());
  return DecoratedRect(rect_product(k, a.rect, b.rect), std::move(decorations));
}

/// Closes {(1,1)_1} under the four products degree by degree and reports the
/// elements reached per degree; generation holds iff all n^2 appear.
struct GenerationReport {
  bool generated = false;
  std::vector<std::size_t> degree_counts;  // degree_counts[d-1] = elements reached in degree d
};

inline GenerationReport rect_generation_check(int max_n) {
  std::vector<std::set<Rect>> by_degree(max_n + 1);
  if (max_n >= 1) by_degree[1].insert(Rect(1, 1, 1));
  for (int n = 2; n <= max_n; ++n) {
    for (int p = 1; p < n; ++p) {
      int q = n - p;
      for (const Rect& a : by_degree[p])
        for (const Rect& b : by_degree[q])
          for (Kind k : kBasicKinds) by_degree[n].insert(rect_product(k, a, b));
    }
  }
  GenerationReport report;
  report.generated = true;
  for (int n = 1; n <= max_n; ++n) {
    report.degree_counts.push_back(by_degree[n].size());
    if (by_degree[n].size() != static_cast<std::size_t>(n) * n) report.generated = false;
  }
  return report;
}

/// The element (i)_n of the diassociative operad.
struct DiasElt {
  int i = 1;
  int n = 1;

  DiasElt() = default;
  DiasElt(int i_, int n_) : i(i_), n(n_) {
    if (n < 1 || i < 1 || i > n) throw std::invalid_argument("dias element out of range");
  }

  friend auto operator<=>(const DiasElt&, const DiasElt&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '(' << i << ")_" << n;
    return os.str();
  }
};

/// (i)_m o ((j_1)_{n_1}, ..., (j_m)_{n_m}) = (n_1+...+n_{i-1}+j_i)_{n_1+...+n_m}.
inline DiasElt dias_compose(const DiasElt& outer, std::span<const DiasElt> inners) {
  if (static_cast<int>(inners.size()) != outer.n)
    throw std::invalid_argument("dias composition arity mismatch");
  int total = 0, before_i = 0;
  for (int t = 0; t < outer.n; ++t) {
    if (t < outer.i - 1) before_i += inners[t].n;
    total += inners[t].n;
  }
  return DiasElt(before_i + inners[outer.i - 1].i, total);
}

/// Composition of the dual quadri operad on rectangles: both coordinates
/// compose like the diassociative operad, the first through i, the second
/// through j.
inline Rect quad_shriek_compose(const Rect& outer, std::span<const Rect> inners) {
  if (static_cast<int>(inners.size()) != outer.n)
    throw std::invalid_argument("composition arity mismatch");
  int total = 0, before_i = 0, before_j = 0;
  for (int t = 0; t < outer.n; ++t) {
    if (t < outer.i - 1) before_i += inners[t].n;
    if (t < outer.j - 1) before_j += inners[t].n;
    total += inners[t].n;
  }
  return Rect(before_i + inners[outer.i - 1].i, before_j + inners[outer.j - 1].j, total);
}

/// Generator dictionary into arity 2 of the rectangle operad.
inline Rect quad_shriek_generator(int g) {
  switch (g) {
    case kNw: return Rect(1, 1, 2);
    case kSw: return Rect(1, 2, 2);
    case kSe: return Rect(2, 2, 2);
    case kNe: return Rect(2, 1, 2);
  }
  throw std::invalid_argument("unknown generator");
}

/// Evaluates a tree monomial over the quadri generators inside the rectangle
/// operad; leaves are composition units (1,1)_1.
inline Rect evaluate_tree_in_rect_operad(const TreeMonomial& m) {
  if (m.is_leaf()) return Rect(1, 1, 1);
  TreeMonomial left = m.subtree(1);
  TreeMonomial right = m.subtree(m.subtree_end(1));
  Rect inners[2] = {evaluate_tree_in_rect_operad(left), evaluate_tree_in_rect_operad(right)};
  return quad_shriek_compose(quad_shriek_generator(m.root_generator()), inners);
}

/// Checks that (i)_n (x) (j)_n -> (i,j)_n intertwines the two compositions
/// for every composition with total inner arity <= max_n.
inline bool tensor_iso_check(int max_n) {
  // Enumerate outer arity m and inner arities n_1..n_m with sum <= max_n.
  for (int m = 1; m <= max_n; ++m) {
    std::vector<int> sizes(m, 1);
    while (true) {
      int total = 0;
      for (int s : sizes) total += s;
      if (total <= max_n) {
        // All index choices for outer and inners.
        std::vector<DiasElt> di(m), dj(m);
        std::vector<Rect> rects(m);
        for (int oi = 1; oi <= m; ++oi)
          for (int oj = 1; oj <= m; ++oj) {
            // Iterate over inner index tuples (k_t, l_t).
            std::vector<int> ks(m, 1), ls(m, 1);
            while (true) {
              for (int t = 0; t < m; ++t) {
                di[t] = DiasElt(ks[t], sizes[t]);
                dj[t] = DiasElt(ls[t], sizes[t]);
                rects[t] = Rect(ks[t], ls[t], sizes[t]);
              }
              DiasElt ci = dias_compose(DiasElt(oi, m), di);
              DiasElt cj = dias_compose(DiasElt(oj, m), dj);
              Rect cr = quad_shriek_compose(Rect(oi, oj, m), rects);
              if (cr != Rect(ci.i, cj.i, ci.n)) return false;
              int t = m - 1;
              while (t >= 0) {
                if (ls[t] < sizes[t]) {
                  ++ls[t];
                  break;
                }
                ls[t] = 1;
                if (ks[t] < sizes[t]) {
                  ++ks[t];
                  break;
                }
                ks[t] = 1;
                --t;
              }
              if (t < 0) break;
            }
          }
      }
      int t = m - 1;
      while (t >= 0 && sizes[t] == max_n) sizes[t--] = 1;
      if (t < 0) break;
      ++sizes[t];
    }
  }
  return true;
}

}  // namespace quadri
