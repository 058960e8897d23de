#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadri {

using Word = std::vector<int>;

namespace detail {

// Words compare by length first, then lexicographically, so linear
// combinations iterate degree by degree.
inline std::strong_ordering graded_compare(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

inline std::string format_word(const Word& w) {
  bool digits = std::all_of(w.begin(), w.end(), [](int x) { return 1 <= x && x <= 9; });
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && !digits) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

inline Word parse_word(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("word literal must be parenthesized: " + s);
  std::string body = s.substr(1, s.size() - 2);
  Word w;
  if (body.find(',') != std::string::npos) {
    std::istringstream is(body);
    std::string item;
    while (std::getline(is, item, ',')) w.push_back(std::stoi(item));
  } else {
    for (char c : body) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad digit in word literal: " + s);
      w.push_back(c - '0');
    }
  }
  return w;
}

}  // namespace detail

/// A permutation of [n] in one-line notation; n = 0 is the empty permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(Word w) : w_(std::move(w)) {
    std::vector<bool> seen(w_.size(), false);
    for (int x : w_) {
      if (x < 1 || x > static_cast<int>(w_.size()) || seen[x - 1])
        throw std::invalid_argument("not a permutation: " + detail::format_word(w_));
      seen[x - 1] = true;
    }
  }

  const Word& word() const { return w_; }
  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int pos) const { return w_[pos - 1]; }  // 1-based

  /// Position of the value v, 1-based.
  int position_of(int v) const {
    for (int p = 1; p <= size(); ++p)
      if (w_[p - 1] == v) return p;
    throw std::out_of_range("value not present");
  }

  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return detail::graded_compare(a.w_, b.w_);
  }
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }

  std::string str() const { return detail::format_word(w_); }
  static Permutation parse(const std::string& s) { return Permutation(detail::parse_word(s)); }

 private:
  Word w_;
};

/// A packed word: the letter set is exactly [max(u)].
class PackedWord {
 public:
  PackedWord() = default;
  explicit PackedWord(Word w) : w_(std::move(w)) {
    if (w_.empty()) throw std::invalid_argument("packed word must be nonempty");
    int mx = *std::max_element(w_.begin(), w_.end());
    std::vector<bool> seen(mx, false);
    for (int x : w_) {
      if (x < 1) throw std::invalid_argument("letters must be positive");
      seen[x - 1] = true;
    }
    for (bool b : seen)
      if (!b) throw std::invalid_argument("not packed: " + detail::format_word(w_));
  }

  const Word& word() const { return w_; }
  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int pos) const { return w_[pos - 1]; }
  int max_letter() const { return *std::max_element(w_.begin(), w_.end()); }

  friend std::strong_ordering operator<=>(const PackedWord& a, const PackedWord& b) {
    return detail::graded_compare(a.w_, b.w_);
  }
  friend bool operator==(const PackedWord& a, const PackedWord& b) { return a.w_ == b.w_; }

  std::string str() const { return detail::format_word(w_); }
  static PackedWord parse(const std::string& s) { return PackedWord(detail::parse_word(s)); }

 private:
  Word w_;
};

/// Standardization: the unique permutation with the same relative order of
/// letters. Letters must be pairwise distinct.
inline Permutation std_word(const Word& w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  Word out(w.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && w[order[r]] == w[order[r - 1]])
      throw std::invalid_argument("duplicate letter in std");
    out[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(out);
}

/// Packing: replace each letter by its rank among the distinct values.
inline PackedWord pack(const Word& w) {
  Word values = w;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto it = std::lower_bound(values.begin(), values.end(), w[i]);
    out[i] = static_cast<int>(it - values.begin()) + 1;
  }
  return PackedWord(out);
}

/// A (k,l)-shuffle, stored as the sorted positions of the first block inside
/// [k+l].
struct Shuffle {
  int k = 0;
  int l = 0;
  std::vector<int> first_positions;  // ascending, 1-based, size k

  bool first_letter_from_left() const {
    return !first_positions.empty() && first_positions.front() == 1;
  }
  bool last_letter_from_left() const {
    return !first_positions.empty() && first_positions.back() == k + l;
  }

  /// Interleaves u (length k) and v (length l) according to this shuffle.
  Word apply(const Word& u, const Word& v) const {
    Word out(k + l);
    std::vector<bool> used(k + l, false);
    for (int i = 0; i < k; ++i) {
      out[first_positions[i] - 1] = u[i];
      used[first_positions[i] - 1] = true;
    }
    int j = 0;
    for (int p = 0; p < k + l; ++p)
      if (!used[p]) out[p] = v[j++];
    return out;
  }
};

/// All C(k+l, k) shuffles, ordered lexicographically by the position set of
/// the first block.
inline std::vector<Shuffle> shuffles(int k, int l) {
  if (k < 0 || l < 0) throw std::invalid_argument("negative shuffle arity");
  std::vector<Shuffle> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    out.push_back(Shuffle{k, l, pick});
    int i = k - 1;
    while (i >= 0 && pick[i] == k + l - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

/// Splits a packed word by letter threshold: left = subword of letters <= i
/// (positions preserved), right = subword of letters > i.
inline std::pair<Word, Word> restrict_word(const PackedWord& u, int i) {
  if (i < 0 || i > u.max_letter()) throw std::out_of_range("restriction threshold out of range");
  Word left, right;
  for (int x : u.word()) (x <= i ? left : right).push_back(x);
  return {left, right};
}

inline Word shift(Word w, int k) {
  for (int& x : w) x += k;
  return w;
}

}  // namespace quadri
