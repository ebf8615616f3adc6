#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cic/color_set.hpp"
#include "cic/error.hpp"
#include "cic/graph.hpp"

namespace cic {

/// Edge coloring certificate: colors[e] is the color of edge e, in [1, t].
struct Coloring {
  int t = 0;
  std::vector<int> colors;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Throws LengthMismatch / ColorOutOfRange unless `c` can certify `g`.
inline void validate_shape(const Graph& g, const Coloring& c) {
  if (c.t < 1) throw error(errc::color_out_of_range, "t=" + std::to_string(c.t));
  if (c.colors.size() != g.edge_count())
    throw error(errc::length_mismatch, "coloring has " + std::to_string(c.colors.size()) +
                                           " entries, graph has " +
                                           std::to_string(g.edge_count()) + " edges");
  for (std::size_t e = 0; e < c.colors.size(); ++e) {
    if (c.colors[e] < 1 || c.colors[e] > c.t)
      throw error(errc::color_out_of_range, "edge " + std::to_string(e) + " has color " +
                                                std::to_string(c.colors[e]) + " outside [1," +
                                                std::to_string(c.t) + "]");
  }
}

/// c -> (c mod t) + 1 on every edge.
inline Coloring rotate(const Coloring& c) {
  Coloring out = c;
  for (auto& x : out.colors) x = x % c.t + 1;
  return out;
}

/// c -> t + 1 - c on every edge.
inline Coloring reflect(const Coloring& c) {
  Coloring out = c;
  for (auto& x : out.colors) x = c.t + 1 - x;
  return out;
}

/// Colors on the edges at v.
inline ColorSet palette(const Graph& g, const Coloring& c, vertex_id v) {
  validate_shape(g, c);
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
    throw error(errc::unknown_label, "vertex id " + std::to_string(v));
  ColorSet s(c.t);
  for (const auto& inc : g.incident(v)) s.insert(c.colors[inc.edge]);
  return s;
}

inline ColorSet palette(const Graph& g, const Coloring& c, const std::string& label) {
  auto v = g.find(label);
  if (!v) throw error(errc::unknown_label, "vertex '" + label + "'");
  return palette(g, c, *v);
}

enum class FailureKind { not_proper, color_unused, bad_palette };

constexpr std::string_view to_string(FailureKind k) noexcept {
  switch (k) {
    case FailureKind::not_proper: return "NotProper";
    case FailureKind::color_unused: return "ColorUnused";
    case FailureKind::bad_palette: return "BadPalette";
  }
  return "Unknown";
}

struct Failure {
  FailureKind kind;
  std::optional<vertex_id> vertex;
  std::vector<edge_id> edges;  // offending edges (NotProper)
  std::optional<int> color;    // repeated color (NotProper) or missing color (ColorUnused)
  std::string detail;
};

struct Verdict {
  bool ok = true;
  std::vector<Failure> failures;

  void add(Failure f) {
    ok = false;
    failures.push_back(std::move(f));
  }
};

/// Every violation is reported: repeated colors per vertex (vertex order,
/// then color order), then unused colors.
inline Verdict check_proper(const Graph& g, const Coloring& c) {
  validate_shape(g, c);
  Verdict verdict;
  std::vector<std::vector<edge_id>> by_color(static_cast<std::size_t>(c.t) + 1);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> used;
    for (const auto& inc : g.incident(static_cast<vertex_id>(v))) {
      auto& bucket = by_color[c.colors[inc.edge]];
      if (bucket.empty()) used.push_back(c.colors[inc.edge]);
      bucket.push_back(inc.edge);
    }
    std::sort(used.begin(), used.end());
    for (int col : used) {
      auto& bucket = by_color[col];
      if (bucket.size() > 1) {
        std::sort(bucket.begin(), bucket.end());
        std::string detail = "color " + std::to_string(col) + " on edges";
        for (auto e : bucket) detail += " " + std::to_string(e);
        verdict.add({FailureKind::not_proper, static_cast<vertex_id>(v), bucket, col,
                     detail + " at " + g.label(static_cast<vertex_id>(v))});
      }
      bucket.clear();
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(c.t) + 1, 0);
  for (int col : c.colors) seen[col] = 1;
  for (int col = 1; col <= c.t; ++col) {
    if (!seen[col])
      verdict.add({FailureKind::color_unused, std::nullopt, {}, col,
                   "color " + std::to_string(col) + " is not used"});
  }
  return verdict;
}

namespace detail {
/// Interval or interval complement, tested directly on the sorted set of
/// colors: the set is an interval, or its complement in [1,t] is.
inline bool palette_condition(const ColorSet& p) {
  if (p.is_interval()) return true;
  return p.complement().is_interval();
}
}  // namespace detail

/// Proper, surjective, and every palette is an interval of [1,t] or has an
/// interval complement.
inline Verdict check_cyclically_interval(const Graph& g, const Coloring& c) {
  Verdict verdict = check_proper(g, c);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto p = palette(g, c, static_cast<vertex_id>(v));
    if (!detail::palette_condition(p)) {
      verdict.add({FailureKind::bad_palette, static_cast<vertex_id>(v), {}, std::nullopt,
                   "palette " + p.to_string() + " at " + g.label(static_cast<vertex_id>(v)) +
                       " is not an interval and its complement " + p.complement().to_string() +
                       " is not an interval"});
    }
  }
  return verdict;
}

/// Allocation-light yes/no form of check_cyclically_interval for t <= 64,
/// used by exhaustive enumeration. Falls back to the full checker otherwise.
class FastCyclicCheck {
 public:
  FastCyclicCheck(const Graph& g, int t) : g_(&g), t_(t) {}

  bool operator()(std::span<const int> colors) const {
    if (t_ > 64) {
      Coloring c{t_, std::vector<int>(colors.begin(), colors.end())};
      return check_cyclically_interval(*g_, c).ok;
    }
    const std::uint64_t all = t_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t_) - 1;
    std::uint64_t used = 0;
    for (int col : colors) used |= std::uint64_t{1} << (col - 1);
    if (used != all) return false;
    for (std::size_t v = 0; v < g_->vertex_count(); ++v) {
      std::uint64_t p = 0;
      for (const auto& inc : g_->incident(static_cast<vertex_id>(v))) {
        const std::uint64_t bit = std::uint64_t{1} << (colors[inc.edge] - 1);
        if (p & bit) return false;
        p |= bit;
      }
      if (!is_interval_mask(p) && !is_interval_mask(all & ~p)) return false;
    }
    return true;
  }

 private:
  static bool is_interval_mask(std::uint64_t m) {
    if (m == 0) return false;
    const std::uint64_t shifted = m >> std::countr_zero(m);
    return (shifted & (shifted + 1)) == 0;
  }

  const Graph* g_;
  int t_;
};

}  // namespace cic
