#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "cic/color_set.hpp"
#include "cic/error.hpp"

namespace cic {

/// Names one of the four intcyc sets over [1, t]:
///   family 1, closed: [min(i1,i2), max(i1,i2)]
///   family 1, open:   the closed set minus {i1, i2}
///   family 2, open:   [1,t] minus family-1 closed
///   family 2, closed: [1,t] minus family-1 open
/// Only the closed variants define t-cyclic intervals; the open ones are
/// auxiliary sets and may be empty.
struct CyclicIntervalSpec {
  int family = 1;  // 1 or 2
  std::int64_t i1 = 1;
  std::int64_t i2 = 1;
  std::int64_t t = 1;
  bool closed = true;

  bool valid() const noexcept {
    return (family == 1 || family == 2) && t >= 1 && i1 >= 1 && i1 <= t && i2 >= 1 && i2 <= t;
  }

  void validate() const {
    if (family != 1 && family != 2)
      throw error(errc::index_out_of_range, "intcyc family " + std::to_string(family));
    if (t < 1) throw error(errc::index_out_of_range, "t=" + std::to_string(t));
    if (i1 < 1 || i1 > t || i2 < 1 || i2 > t)
      throw error(errc::index_out_of_range, "endpoints (" + std::to_string(i1) + ", " +
                                                std::to_string(i2) + ") outside [1," +
                                                std::to_string(t) + "]");
  }

  /// Membership without materializing the set; works for any t.
  bool contains(std::int64_t c) const {
    validate();
    if (c < 1 || c > t) return false;
    const auto lo = std::min(i1, i2), hi = std::max(i1, i2);
    const bool in_closed1 = lo <= c && c <= hi;
    const bool in_open1 = in_closed1 && c != i1 && c != i2;
    if (family == 1) return closed ? in_closed1 : in_open1;
    return closed ? !in_open1 : !in_closed1;
  }

  std::string to_string() const {
    const char* l = closed ? "[" : "(";
    const char* r = closed ? "]" : ")";
    return "intcyc" + std::to_string(family) + l + "(" + std::to_string(i1) + "," +
           std::to_string(i2) + ")," + std::to_string(t) + r;
  }
};

/// Materializes the set named by `spec`. Requires t <= kMaxMaterializedColors.
inline ColorSet intcyc(const CyclicIntervalSpec& spec) {
  spec.validate();
  if (spec.t > kMaxMaterializedColors)
    throw error(errc::range_error, "t=" + std::to_string(spec.t) + " too large to materialize");
  const int t = static_cast<int>(spec.t);
  const int i1 = static_cast<int>(spec.i1), i2 = static_cast<int>(spec.i2);

  const ColorSet closed1 = ColorSet::range(t, std::min(i1, i2), std::max(i1, i2));
  ColorSet open1 = closed1;
  open1.erase(i1);
  open1.erase(i2);
  if (spec.family == 1) return spec.closed ? closed1 : open1;
  const ColorSet all = ColorSet::full(t);
  return spec.closed ? all - open1 : all - closed1;
}

/// The cyclic arc {start, start+1, ...} of `length` colors, wrapping t -> 1.
inline ColorSet cyclic_arc(int t, int start, int length) {
  if (start < 1 || start > t || length < 0 || length > t)
    throw error(errc::index_out_of_range, "arc start=" + std::to_string(start) +
                                              " length=" + std::to_string(length) +
                                              " over t=" + std::to_string(t));
  ColorSet s(t);
  for (int k = 0; k < length; ++k) s.insert((start - 1 + k) % t + 1);
  return s;
}

/// A t-cyclic interval: nonempty, and either an interval of [1,t] or the
/// complement of one. Equivalently an arc of the color cycle 1..t.
inline bool is_cyclic_interval(const ColorSet& q) {
  if (q.empty()) return false;
  return q.is_interval() || q.complement().is_interval();
}

/// Length of the shortest cyclic arc containing q: t minus the largest run of
/// non-members between cyclically consecutive members.
inline int cyclic_span(const ColorSet& q) {
  if (q.empty()) throw error(errc::empty_set, "cyclic_span of the empty set");
  const int t = q.universe();
  const int first = q.min();
  int prev = first;
  int widest_gap = 0;
  for (int c = q.next(first + 1); c != 0; c = q.next(c + 1)) {
    widest_gap = std::max(widest_gap, c - prev - 1);
    prev = c;
  }
  widest_gap = std::max(widest_gap, t - prev + first - 1);
  return t - widest_gap;
}

/// Union of a chain of arcs in which each consecutive pair intersects.
/// Returns nullopt if the union is not a t-cyclic interval.
inline std::optional<ColorSet> union_of_chained_arcs(std::span<const ColorSet> arcs, int t) {
  if (arcs.empty()) throw error(errc::precondition_violated, "empty arc chain");
  ColorSet acc(t);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& a = arcs[k];
    if (a.universe() != t)
      throw error(errc::precondition_violated, "arc " + std::to_string(k) + " is over t=" +
                                                   std::to_string(a.universe()));
    if (!is_cyclic_interval(a))
      throw error(errc::precondition_violated,
                  "arc " + std::to_string(k) + " " + a.to_string() + " is not a cyclic interval");
    if (k > 0 && !arcs[k - 1].intersects(a))
      throw error(errc::precondition_violated, "chain broken between arcs " +
                                                   std::to_string(k - 1) + " and " +
                                                   std::to_string(k));
    acc |= a;
  }
  if (!is_cyclic_interval(acc)) return std::nullopt;
  return acc;
}

}  // namespace cic
