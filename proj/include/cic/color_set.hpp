#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cic/error.hpp"

namespace cic {

/// Largest universe a ColorSet will materialize. Larger t is handled
/// symbolically (see CyclicIntervalSpec::contains).
inline constexpr std::int64_t kMaxMaterializedColors = 1'000'000;

/// Subset of the color range [1, t]. Colors are 1-based at every interface.
class ColorSet {
 public:
  ColorSet() = default;

  explicit ColorSet(int t) : t_(t) {
    if (t < 1 || t > kMaxMaterializedColors)
      throw error(errc::range_error, "color universe t=" + std::to_string(t));
    words_.assign(static_cast<std::size_t>((t + 63) / 64), 0);
  }

  ColorSet(int t, std::initializer_list<int> colors) : ColorSet(t) {
    for (int c : colors) insert(c);
  }

  template <class Range>
  static ColorSet of(int t, const Range& colors) {
    ColorSet s(t);
    for (int c : colors) s.insert(c);
    return s;
  }

  static ColorSet full(int t) { return range(t, 1, t); }

  /// [lo, hi] ∩ [1, t]; empty when lo > hi.
  static ColorSet range(int t, int lo, int hi) {
    ColorSet s(t);
    for (int c = std::max(lo, 1); c <= std::min(hi, t); ++c) s.insert(c);
    return s;
  }

  int universe() const noexcept { return t_; }

  bool contains(int c) const noexcept {
    if (c < 1 || c > t_) return false;
    const auto i = static_cast<unsigned>(c - 1);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void insert(int c) {
    check(c);
    const auto i = static_cast<unsigned>(c - 1);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(int c) {
    check(c);
    const auto i = static_cast<unsigned>(c - 1);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  int size() const noexcept {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or 0 when empty.
  int min() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]) + 1;
    return 0;
  }

  /// Largest member, or 0 when empty.
  int max() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i]) return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]) + 1;
    return 0;
  }

  /// Smallest member >= c, or 0 if none.
  int next(int c) const noexcept {
    if (c < 1) c = 1;
    if (c > t_) return 0;
    auto i = static_cast<std::size_t>(c - 1);
    std::size_t w = i / 64;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i % 64));
    while (true) {
      if (bits) return static_cast<int>(w * 64) + std::countr_zero(bits) + 1;
      if (++w == words_.size()) return 0;
      bits = words_[w];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int c = next(1); c != 0; c = next(c + 1)) out.push_back(c);
    return out;
  }

  /// Plain (non-cyclic) interval [p, q] with p <= q.
  bool is_interval() const noexcept {
    const int n = size();
    return n > 0 && max() - min() + 1 == n;
  }

  ColorSet complement() const {
    ColorSet out(t_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
  }

  ColorSet& operator|=(const ColorSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ColorSet& operator&=(const ColorSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ColorSet& operator-=(const ColorSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ColorSet operator|(ColorSet a, const ColorSet& b) { return a |= b; }
  friend ColorSet operator&(ColorSet a, const ColorSet& b) { return a &= b; }
  friend ColorSet operator-(ColorSet a, const ColorSet& b) { return a -= b; }

  bool intersects(const ColorSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const ColorSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const ColorSet&, const ColorSet&) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int c : members()) {
      if (!first) s += ",";
      s += std::to_string(c);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(int c) const {
    if (c < 1 || c > t_)
      throw error(errc::index_out_of_range,
                  "color " + std::to_string(c) + " outside [1," + std::to_string(t_) + "]");
  }

  void same_universe(const ColorSet& o) const {
    if (o.t_ != t_)
      throw error(errc::precondition_violated, "color sets over different universes " +
                                                   std::to_string(t_) + " and " +
                                                   std::to_string(o.t_));
  }

  void trim() noexcept {
    if (const int r = t_ % 64; r != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << r) - 1;
  }

  int t_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cic
