#pragma once

#include <stdexcept>
#include <vector>

#include "quadri/rational.hpp"

namespace quadri {

/// Integer sequence a_1..a_N, N <= 12.
struct IntSeries {
  std::vector<Integer> coeffs;  // coeffs[k] = a_{k+1}

  explicit IntSeries(std::vector<Integer> c) : coeffs(std::move(c)) {
    if (coeffs.size() > 12) throw std::invalid_argument("series capped at 12 terms");
  }

  int terms() const { return static_cast<int>(coeffs.size()); }
  const Integer& at(int n) const { return coeffs.at(n - 1); }  // 1-based
};

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 0; i < k; ++i) {
    out *= n - i;
    out /= i + 1;
  }
  return out;
}

inline Integer catalan(int n) { return binomial(2 * n, n) / (n + 1); }

/// Dimension of the arity-n component of the quadri operad:
/// (1/n) * sum_{j=n}^{2n-1} C(3n, n+1+j) C(j-1, j-n).
inline Integer dim_quad(int n) {
  if (n < 1) throw std::invalid_argument("arity must be positive");
  Integer total = 0;
  for (int j = n; j <= 2 * n - 1; ++j) total += binomial(3 * n, n + 1 + j) * binomial(j - 1, j - n);
  if (total % n != 0) throw std::logic_error("binomial sum not divisible by n");
  return total / n;
}

inline IntSeries quad_dimension_series(int terms) {
  std::vector<Integer> c;
  for (int n = 1; n <= terms; ++n) c.push_back(dim_quad(n));
  return IntSeries(std::move(c));
}

/// Coefficients of B = A / (1 + A): the primitive-element series of a
/// conilpotent cofree coalgebra with graded dimensions A.
inline IntSeries primitive_series_from(const IntSeries& a) {
  if (a.terms() == 0 || a.at(1) < 1) throw std::invalid_argument("series must start at degree 1");
  std::vector<Integer> b(a.terms());
  for (int n = 1; n <= a.terms(); ++n) {
    Integer val = a.at(n);
    for (int k = 1; k < n; ++k) val -= b[k - 1] * a.at(n - k);
    b[n - 1] = val;
  }
  return IntSeries(std::move(b));
}

/// The unique series C with A = f(C), where f(t) = sum Catalan(n) t^n is the
/// one-generator free dendriform series; C counts dendriform generators.
inline IntSeries dendriform_generator_series_from(const IntSeries& a) {
  if (a.terms() == 0 || a.at(1) < 1) throw std::invalid_argument("series must start at degree 1");
  int N = a.terms();
  std::vector<Integer> c(N, 0);
  c[0] = a.at(1);
  for (int n = 2; n <= N; ++n) {
    // Coefficient of t^n in sum_{m>=2} Catalan(m) C^m, with c_n still zero.
    std::vector<Integer> power(N + 1, 0);  // power[k] = coeff of t^k in C^m
    for (int k = 1; k <= N; ++k) power[k] = k <= n - 1 ? c[k - 1] : 0;
    Integer correction = 0;
    for (int m = 2; m <= n; ++m) {
      // power currently holds C^(m-1); multiply by C.
      std::vector<Integer> next(N + 1, 0);
      for (int i = 1; i <= N; ++i) {
        if (power[i] == 0) continue;
        for (int k = 1; i + k <= N; ++k) {
          if (k <= n - 1) next[i + k] += power[i] * c[k - 1];
        }
      }
      power = std::move(next);
      correction += catalan(m) * power[n];
    }
    c[n - 1] = a.at(n) - correction;
  }
  return IntSeries(std::move(c));
}

}  // namespace quadri
