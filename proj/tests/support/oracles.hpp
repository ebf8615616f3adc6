#pragma once

// Test-only oracles built straight from the set definitions, with plain
// std::set and no use of the library's ColorSet algebra.

#include <algorithm>
#include <set>
#include <vector>

#include "cic/color_set.hpp"

namespace cic::test {

using IntSet = std::set<int>;

inline IntSet to_set(const ColorSet& s) {
  const auto m = s.members();
  return IntSet(m.begin(), m.end());
}

inline ColorSet from_set(int t, const IntSet& s) { return ColorSet::of(t, s); }

inline IntSet closed_interval(int p, int q) {
  IntSet s;
  for (int c = p; c <= q; ++c) s.insert(c);
  return s;
}

inline IntSet minus(const IntSet& a, const IntSet& b) {
  IntSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// The four intcyc sets, transcribed literally.
inline IntSet def_closed1(int i1, int i2) { return closed_interval(std::min(i1, i2), std::max(i1, i2)); }
inline IntSet def_open1(int i1, int i2) { return minus(def_closed1(i1, i2), {i1, i2}); }
inline IntSet def_open2(int i1, int i2, int t) { return minus(closed_interval(1, t), def_closed1(i1, i2)); }
inline IntSet def_closed2(int i1, int i2, int t) { return minus(closed_interval(1, t), def_open1(i1, i2)); }

/// Every set of the form intcyc_j[(i1,i2),t], j in {1,2}.
inline std::set<IntSet> all_cyclic_intervals(int t) {
  std::set<IntSet> out;
  for (int i1 = 1; i1 <= t; ++i1)
    for (int i2 = 1; i2 <= t; ++i2) {
      out.insert(def_closed1(i1, i2));
      out.insert(def_closed2(i1, i2, t));
    }
  out.erase(IntSet{});
  return out;
}

/// Cyclic arc start, start+1, ... of `len` colors on 1..t.
inline IntSet arc(int t, int start, int len) {
  IntSet s;
  for (int k = 0; k < len; ++k) s.insert((start - 1 + k) % t + 1);
  return s;
}

/// Minimum length over all arcs containing q (q nonempty).
inline int brute_span(const IntSet& q, int t) {
  for (int len = 1; len <= t; ++len)
    for (int s = 1; s <= t; ++s) {
      const auto a = arc(t, s, len);
      if (std::includes(a.begin(), a.end(), q.begin(), q.end())) return len;
    }
  return t;
}

inline IntSet subset_from_mask(unsigned mask, int t) {
  IntSet s;
  for (int c = 1; c <= t; ++c)
    if (mask >> (c - 1) & 1u) s.insert(c);
  return s;
}

}  // namespace cic::test
