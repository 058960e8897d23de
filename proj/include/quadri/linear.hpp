#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "quadri/lincomb.hpp"

namespace quadri {

/// Sparse row-major matrix over an ordered basis-key space.
/// Columns are indexed by the union of the row supports unless an explicit
/// ambient column set is supplied.
template <typename B>
struct SparseMatrix {
  std::vector<LinComb<B>> rows;

  static SparseMatrix from_rows(std::vector<LinComb<B>> rs) {
    return SparseMatrix{std::move(rs)};
  }
};

namespace detail {

// Row with keys renamed to dense column ordinals.
using OrdRow = std::map<int, Rational>;

template <typename B>
std::vector<B> sorted_columns(const SparseMatrix<B>& m) {
  std::set<B> cols;
  for (const auto& row : m.rows)
    for (const auto& [k, c] : row) cols.insert(k);
  return std::vector<B>(cols.begin(), cols.end());
}

inline void axpy(OrdRow& row, const Rational& factor, const OrdRow& other) {
  for (const auto& [col, c] : other) {
    auto it = row.find(col);
    if (it == row.end()) {
      Rational v = factor * c;
      if (!is_zero(v)) row.emplace(col, std::move(v));
    } else {
      it->second += factor * c;
      if (is_zero(it->second)) row.erase(it);
    }
  }
}

// Echelonization against columns in the given ordinal order. Returns the
// pivot rows keyed by pivot ordinal.
inline std::map<int, OrdRow> echelon(std::vector<OrdRow> rows) {
  std::map<int, OrdRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto pivot = pivots.find(lead);
      if (pivot == pivots.end()) {
        Rational inv = Rational(1) / row.begin()->second;
        for (auto& [col, c] : row) c *= inv;
        pivots.emplace(lead, std::move(row));
        break;
      }
      axpy(row, -row.begin()->second, pivot->second);
    }
  }
  return pivots;
}

}  // namespace detail

/// Row rank over the rationals. Elimination works through the columns in
/// order of increasing support count, which keeps fill-in low on the large
/// evaluation matrices.
template <typename B>
std::size_t rank(const SparseMatrix<B>& m) {
  std::vector<B> cols = detail::sorted_columns(m);
  std::map<B, int> support;
  for (const auto& row : m.rows)
    for (const auto& [k, c] : row) ++support[k];
  // Ordinals sorted by (support, key): sparser columns are eliminated first.
  std::vector<int> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return support[cols[a]] < support[cols[b]];
  });
  std::vector<int> ordinal_of(cols.size());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) ordinal_of[perm[pos]] = static_cast<int>(pos);

  std::map<B, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], ordinal_of[i]);

  std::vector<detail::OrdRow> rows;
  rows.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    detail::OrdRow r;
    for (const auto& [k, c] : row) r.emplace(index[k], c);
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return detail::echelon(std::move(rows)).size();
}

template <typename B>
std::size_t rank(const std::vector<LinComb<B>>& rows) {
  return rank(SparseMatrix<B>{rows});
}

/// Basis of {x : m·x = 0} over the given ambient column set, one vector per
/// non-pivot column, emitted in ascending column order.
template <typename B>
std::vector<LinComb<B>> kernel_basis(const SparseMatrix<B>& m,
                                     const std::vector<B>& ambient_columns) {
  std::vector<B> cols = ambient_columns;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::map<B, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], static_cast<int>(i));

  std::vector<detail::OrdRow> rows;
  for (const auto& row : m.rows) {
    detail::OrdRow r;
    for (const auto& [k, c] : row) {
      auto it = index.find(k);
      if (it == index.end()) throw std::invalid_argument("row support outside ambient columns");
      r.emplace(it->second, c);
    }
    if (!r.empty()) rows.push_back(std::move(r));
  }

  std::map<int, detail::OrdRow> pivots = detail::echelon(std::move(rows));
  // Back-substitution: reduce each pivot row against the later ones so every
  // pivot row reads x_p + sum over free columns.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto& row = it->second;
    for (auto jt = std::next(row.begin()); jt != row.end();) {
      auto other = pivots.find(jt->first);
      if (other == pivots.end() || other->first == it->first) {
        ++jt;
        continue;
      }
      Rational factor = -jt->second;
      ++jt;
      detail::axpy(row, factor, other->second);
      jt = row.upper_bound(other->first);
    }
  }

  std::vector<LinComb<B>> basis;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (pivots.count(static_cast<int>(j)) != 0) continue;
    LinComb<B> v;
    v.add(cols[j], Rational(1));
    for (const auto& [p, row] : pivots) {
      auto it = row.find(static_cast<int>(j));
      if (it != row.end()) v.add(cols[p], -it->second);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <typename B>
std::vector<LinComb<B>> kernel_basis(const SparseMatrix<B>& m) {
  return kernel_basis(m, detail::sorted_columns(m));
}

/// True iff the rational spans coincide: rank(a) = rank(b) = rank(a ∪ b).
template <typename B>
bool span_equal(const std::vector<LinComb<B>>& a, const std::vector<LinComb<B>>& b) {
  std::size_t ra = rank(SparseMatrix<B>{a});
  std::size_t rb = rank(SparseMatrix<B>{b});
  if (ra != rb) return false;
  std::vector<LinComb<B>> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return rank(SparseMatrix<B>{joint}) == ra;
}

template <typename B>
bool in_span(const std::vector<LinComb<B>>& basis, const LinComb<B>& v) {
  std::vector<LinComb<B>> joint = basis;
  joint.push_back(v);
  return rank(SparseMatrix<B>{joint}) == rank(SparseMatrix<B>{basis});
}

/// Bilinear form given by rows over the key space; must be square in the
/// sense that every key appearing in a row lies in the row-key set.
template <typename B>
using BilinearForm = std::map<B, LinComb<B>>;

/// Basis of {x : <v, x> = 0 for all v in vs} for the given form.
template <typename B>
std::vector<LinComb<B>> orth_complement(const std::vector<LinComb<B>>& vs,
                                        const BilinearForm<B>& form) {
  std::vector<B> ambient;
  ambient.reserve(form.size());
  for (const auto& [k, row] : form) ambient.push_back(k);
  for (const auto& [k, row] : form)
    for (const auto& [kk, c] : row)
      if (form.count(kk) == 0) throw std::invalid_argument("bilinear form is not square");

  SparseMatrix<B> constraints;
  for (const auto& v : vs) {
    LinComb<B> row;
    for (const auto& [k, c] : v) {
      auto it = form.find(k);
      if (it == form.end()) throw std::invalid_argument("vector support outside form keys");
      row += c * it->second;
    }
    constraints.rows.push_back(std::move(row));
  }
  return kernel_basis(constraints, ambient);
}

}  // namespace quadri
