#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cic/cyclic_interval.hpp"
#include "cic/error.hpp"
#include "cic/families.hpp"

// Step-by-step arithmetic check of the argument that G(m) has no
// cyclically-interval coloring for m >= 8. For a hypothetical coloring with
// t0 = m^2 + k0 colors whose hub palette is [1, m^2]:
//   y'  : grid vertex on the hub edge of color 1
//   y'' : grid vertex on the hub edge of color h = floor(m^2 / 2)
//   x~  : pair vertex adjacent to both
// The palettes of y', x~, y'' chain into one cyclic arc of at most 4m - 2
// colors through color 1, which must lie in intcyc2[(4m-2, t0-4m+4), t0],
// while h lies strictly inside (4m-2, t0-4m+4).

namespace cic {

inline constexpr std::int64_t kMaxAuditM = 2'000'000;

struct AuditParams {
  std::int64_t m = 8;
  std::int64_t k0 = 0;

  std::int64_t t0() const noexcept { return m * m + k0; }
  static std::int64_t max_k0(std::int64_t m) noexcept { return m * m * m - m * m; }

  void validate() const {
    if (m < 2 || m > kMaxAuditM)
      throw error(errc::params_out_of_range, "m=" + std::to_string(m) + " outside [2," +
                                                 std::to_string(kMaxAuditM) + "]");
    if (k0 < 0 || k0 > max_k0(m))
      throw error(errc::params_out_of_range, "k0=" + std::to_string(k0) + " outside [0," +
                                                 std::to_string(max_k0(m)) + "]");
  }
};

struct Witness {
  std::string name;
  std::int64_t value;
};

struct AuditStep {
  std::string id;
  std::string statement;
  bool holds = false;
  std::vector<Witness> witnesses;
  std::string note;

  std::optional<std::int64_t> witness(const std::string& name) const {
    for (const auto& w : witnesses)
      if (w.name == name) return w.value;
    return std::nullopt;
  }
};

struct AuditReport {
  AuditParams params;
  std::int64_t t0 = 0;
  std::vector<AuditStep> steps;
  std::vector<std::string> assumptions;
  std::vector<std::string> interpretations;
  bool pass = false;
  std::optional<std::string> first_failure;
  /// S2 when its lower bound 4m-1 <= floor(m^2/2) fails (no k0 can repair
  /// that); otherwise the first failing step.
  std::optional<std::string> limiting_step;

  const AuditStep& step(const std::string& id) const {
    for (const auto& s : steps)
      if (s.id == id) return s;
    throw error(errc::invalid_argument, "no audit step " + id);
  }
};

/// True iff every cyclic arc of Z_t with at most `max_len` colors that
/// contains color 1 is a subset of `target`, a family-2 closed set
/// [1, lo] ∪ [hi, t]. Decided from the two extreme arcs [1, L] and
/// [t-L+2, t] ∪ {1}, whose union covers every such arc.
inline bool arcs_through_one_within(std::int64_t t, std::int64_t max_len,
                                    const CyclicIntervalSpec& target) {
  target.validate();
  if (target.t != t || target.family != 2 || !target.closed)
    throw error(errc::precondition_violated, "target must be a family-2 closed set over t");
  if (max_len < 1) return true;
  const std::int64_t len = std::min(max_len, t);
  const auto lo = std::min(target.i1, target.i2), hi = std::max(target.i1, target.i2);
  if (hi <= lo + 1) return true;  // target is all of [1, t]
  const bool forward = len <= lo;
  const bool backward = len == 1 || t - len + 2 >= hi;
  return forward && backward;
}

inline AuditReport audit(const AuditParams& params) {
  params.validate();
  const std::int64_t m = params.m;
  const std::int64_t t0 = params.t0();
  const std::int64_t h = (m * m) / 2;
  const std::int64_t left = 4 * m - 2;
  const std::int64_t right = t0 - 4 * m + 4;

  AuditReport r;
  r.params = params;
  r.t0 = t0;
  r.assumptions.push_back(
      "hub palette S(x0) = [1, m^2]: any cyclically-interval coloring can be rotated "
      "c -> (c mod t0) + 1 until this holds, and rotation preserves validity");
  r.assumptions.push_back(
      "x~ exists: every two grid vertices of G(m) share a pair-vertex neighbour");
  r.interpretations.push_back(
      "union bound 4m-2 = deg(y') + deg(x~) + deg(y'') - 2: the edges x~y' and x~y'' each "
      "contribute a color already counted at x~");

  // S1
  {
    AuditStep s{"S1", "m^2 + k0 - 4m + 4 > 4m - 2", right > left,
                {{"lhs", right}, {"rhs", left}}, {}};
    r.steps.push_back(s);
  }
  // S2
  {
    const bool lower = 4 * m - 1 <= h;
    const bool upper = h <= t0 - 4 * m + 3;
    AuditStep s{"S2", "4m - 1 <= floor(m^2/2) <= m^2 + k0 - 4m + 3", lower && upper,
                {{"lower", 4 * m - 1},
                 {"floor_m2_half", h},
                 {"upper", t0 - 4 * m + 3},
                 {"lower_holds", lower},
                 {"upper_holds", upper}},
                {}};
    if (!lower) s.note = "lower bound fails for every k0; depends on m alone";
    r.steps.push_back(s);
  }

  const CyclicIntervalSpec open1{1, left, right, t0, false};
  const CyclicIntervalSpec closed2{2, left, right, t0, true};
  const bool endpoints_valid = open1.valid();

  // S3
  {
    AuditStep s{"S3", "floor(m^2/2) in intcyc1((4m-2, t0-4m+4), t0)", false,
                {{"floor_m2_half", h}, {"i1", left}, {"i2", right}, {"t0", t0}}, {}};
    if (endpoints_valid)
      s.holds = open1.contains(h);
    else
      s.note = "endpoints outside [1, t0]; the set is undefined";
    r.steps.push_back(s);
  }
  // S4
  const std::int64_t bound =
      gm_grid_degree(m) + gm_pair_degree(m) + gm_grid_degree(m) - 2;
  {
    AuditStep s{"S4",
                "|S(y') ∪ S(x~) ∪ S(y'')| <= deg(y') + deg(x~) + deg(y'') - 2 = 4m - 2 < t0",
                bound == 4 * m - 2 && bound < t0,
                {{"deg_y", gm_grid_degree(m)},
                 {"deg_x_pair", gm_pair_degree(m)},
                 {"union_bound", bound},
                 {"t0", t0}},
                "the union is then a proper arc of the color cycle containing color 1"};
    r.steps.push_back(s);
  }
  // S5
  {
    AuditStep s{"S5",
                "every t0-cyclic interval of size <= 4m - 2 containing 1 lies in "
                "intcyc2[(4m-2, t0-4m+4), t0]",
                false,
                {{"max_arc", bound},
                 {"forward_reach", std::min(bound, t0)},
                 {"backward_reach", t0 - std::min(bound, t0) + 2},
                 {"i1", left},
                 {"i2", right}},
                {}};
    if (endpoints_valid)
      s.holds = arcs_through_one_within(t0, bound, closed2);
    else
      s.note = "endpoints outside [1, t0]; the set is undefined";
    r.steps.push_back(s);
  }
  // S6
  {
    const bool s3 = r.step("S3").holds, s4 = r.step("S4").holds, s5 = r.step("S5").holds;
    const bool h_outside = endpoints_valid && !closed2.contains(h);
    AuditStep s{"S6",
                "floor(m^2/2) in S(y'') ⊆ intcyc2[(4m-2, t0-4m+4), t0] contradicts S3",
                s3 && s4 && s5 && h_outside,
                {{"floor_m2_half", h}, {"h_in_intcyc2", endpoints_valid && closed2.contains(h)}},
                {}};
    r.steps.push_back(s);
  }

  r.pass = std::all_of(r.steps.begin(), r.steps.end(), [](const AuditStep& s) { return s.holds; });
  for (const auto& s : r.steps) {
    if (!s.holds) {
      r.first_failure = s.id;
      break;
    }
  }
  if (r.step("S2").witness("lower_holds") == 0)
    r.limiting_step = "S2";
  else
    r.limiting_step = r.first_failure;
  return r;
}

struct AuditRangeEntry {
  std::int64_t m = 0;
  AuditReport at_min;  // k0 = 0
  AuditReport at_max;  // k0 = m^3 - m^2
  bool exhaustive = false;
  std::uint64_t cases = 0;
  std::uint64_t failing_cases = 0;  // exhaustive sweeps only
  bool all_pass = false;
  /// S1 and the upper half of S2 do not get worse from k0 = 0 to the top of
  /// the range, and (when swept) the endpoint conclusion matches the sweep.
  bool monotone = true;
};

struct AuditRangeSummary {
  std::vector<AuditRangeEntry> entries;
  bool all_pass() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const AuditRangeEntry& e) { return e.all_pass; });
  }
};

inline constexpr std::int64_t kExhaustiveAuditLimit = 12;

/// Audits both k0 endpoints for each m; for m <= exhaustive_limit every k0
/// is audited as well.
inline AuditRangeSummary audit_range(std::int64_t m_lo, std::int64_t m_hi,
                                     std::int64_t exhaustive_limit = kExhaustiveAuditLimit) {
  if (m_lo < 2 || m_lo > m_hi || m_hi > kMaxAuditM)
    throw error(errc::range_error, "m range [" + std::to_string(m_lo) + "," +
                                       std::to_string(m_hi) + "]");
  AuditRangeSummary summary;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    AuditRangeEntry e;
    e.m = m;
    e.at_min = audit({m, 0});
    e.at_max = audit({m, AuditParams::max_k0(m)});
    e.cases = 2;
    const bool endpoints_pass = e.at_min.pass && e.at_max.pass;

    auto implies = [](bool a, bool b) { return !a || b; };
    e.monotone = implies(e.at_min.step("S1").holds, e.at_max.step("S1").holds) &&
                 implies(e.at_min.step("S2").witness("upper_holds") == 1,
                         e.at_max.step("S2").witness("upper_holds") == 1);

    if (m <= exhaustive_limit) {
      e.exhaustive = true;
      e.cases = 0;
      for (std::int64_t k0 = 0; k0 <= AuditParams::max_k0(m); ++k0) {
        ++e.cases;
        if (!audit({m, k0}).pass) ++e.failing_cases;
      }
      e.all_pass = e.failing_cases == 0;
      e.monotone = e.monotone && (e.all_pass == endpoints_pass);
    } else {
      e.all_pass = endpoints_pass;
    }
    summary.entries.push_back(std::move(e));
  }
  return summary;
}

}  // namespace cic
