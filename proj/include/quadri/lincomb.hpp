#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "quadri/rational.hpp"

namespace quadri {

/// Finite formal linear combination over an ordered basis-key space.
/// Zero coefficients are never stored; iteration is ascending in the key.
template <typename B>
class LinComb {
 public:
  using key_type = B;
  using map_type = std::map<B, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(const B& key) { terms_.emplace(key, Rational(1)); }
  LinComb(std::initializer_list<std::pair<B, Rational>> init) {
    for (const auto& [k, c] : init) add(k, c);
  }

  static LinComb zero() { return LinComb(); }
  static LinComb unit(const B& key) { return LinComb(key); }

  void add(const B& key, const Rational& coeff) {
    if (is_zero(coeff)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coeff(const B& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool contains(const B& key) const { return terms_.count(key) != 0; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other) add(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }

  /// Smallest key with nonzero coefficient; combination must be nonempty.
  const B& leading_key() const { return terms_.begin()->first; }

  template <typename F>
  auto map_keys(F&& f) const -> LinComb<std::decay_t<decltype(f(std::declval<B>()))>> {
    LinComb<std::decay_t<decltype(f(std::declval<B>()))>> out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  map_type terms_;
};

template <typename A, typename B>
using Tensor = std::pair<A, B>;

/// a ⊗ b extended bilinearly.
template <typename A, typename B>
LinComb<Tensor<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
  LinComb<Tensor<A, B>> out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out.add({ka, kb}, ca * cb);
  return out;
}

}  // namespace quadri
