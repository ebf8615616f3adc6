#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "cic/coloring.hpp"
#include "cic/cyclic_interval.hpp"
#include "cic/error.hpp"
#include "cic/graph.hpp"

namespace cic {

enum class EdgeOrder { degree_sum_descending, input_order };

struct SolverConfig {
  bool symmetry_breaking = true;
  std::optional<std::uint64_t> node_budget;
  std::optional<std::chrono::milliseconds> time_budget;
  EdgeOrder edge_order = EdgeOrder::degree_sum_descending;
  /// Search for a proper surjective t-coloring only; palettes unconstrained.
  bool properness_only = false;

  void validate() const {
    if (node_budget && *node_budget == 0)
      throw error(errc::invalid_argument, "node budget must be positive");
    if (time_budget && time_budget->count() <= 0)
      throw error(errc::invalid_argument, "time budget must be positive");
  }
};

enum class Status { colorable, not_colorable, budget_exceeded };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::colorable: return "Colorable";
    case Status::not_colorable: return "NotColorable";
    case Status::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

struct Decision {
  Status status = Status::not_colorable;
  std::optional<Coloring> certificate;
  std::string reason;
  std::uint64_t nodes = 0;
};

/// Order in which the search assigns edges. Degree-sum order is stable:
/// ties keep input order.
inline std::vector<edge_id> edge_order(const Graph& g, EdgeOrder order) {
  std::vector<edge_id> ids(g.edge_count());
  std::iota(ids.begin(), ids.end(), 0);
  if (order == EdgeOrder::degree_sum_descending) {
    auto weight = [&](edge_id e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
    std::stable_sort(ids.begin(), ids.end(),
                     [&](edge_id a, edge_id b) { return weight(a) > weight(b); });
  }
  return ids;
}

/// Partial assignment with the three pruning predicates of the search:
/// a repeated color at a vertex, a vertex palette whose cyclic span exceeds
/// the vertex degree, and fewer unassigned edges than unused colors.
class SearchState {
 public:
  SearchState(const Graph& g, int t, bool properness_only = false)
      : g_(&g),
        t_(t),
        properness_only_(properness_only),
        colors_(g.edge_count(), 0),
        use_count_(static_cast<std::size_t>(t) + 1, 0),
        unassigned_(static_cast<int>(g.edge_count())),
        unused_(t) {
    palettes_.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) palettes_.emplace_back(t);
  }

  int t() const noexcept { return t_; }
  int color(edge_id e) const { return colors_.at(static_cast<std::size_t>(e)); }
  const std::vector<int>& colors() const noexcept { return colors_; }
  int unassigned() const noexcept { return unassigned_; }
  int unused_colors() const noexcept { return unused_; }

  /// True iff assigning c to the unassigned edge e survives every prune.
  /// Leaves the state unchanged.
  bool admissible(edge_id e, int c) {
    const auto& edge = g_->edge(e);
    auto& pu = palettes_[edge.u];
    auto& pv = palettes_[edge.v];
    if (pu.contains(c) || pv.contains(c)) return false;
    const int unused_after = unused_ - (use_count_[c] == 0 ? 1 : 0);
    if (unassigned_ - 1 < unused_after) return false;
    if (!properness_only_) {
      if (!span_fits(pu, c, g_->degree(edge.u))) return false;
      if (!span_fits(pv, c, g_->degree(edge.v))) return false;
    }
    return true;
  }

  void assign(edge_id e, int c) {
    const auto& edge = g_->edge(e);
    colors_[e] = c;
    palettes_[edge.u].insert(c);
    palettes_[edge.v].insert(c);
    if (use_count_[c]++ == 0) --unused_;
    --unassigned_;
  }

  void unassign(edge_id e) {
    const auto& edge = g_->edge(e);
    const int c = colors_[e];
    palettes_[edge.u].erase(c);
    palettes_[edge.v].erase(c);
    if (--use_count_[c] == 0) ++unused_;
    ++unassigned_;
    colors_[e] = 0;
  }

 private:
  static bool span_fits(ColorSet& p, int c, int degree) {
    p.insert(c);
    const bool ok = cyclic_span(p) <= degree;
    p.erase(c);
    return ok;
  }

  const Graph* g_;
  int t_;
  bool properness_only_;
  std::vector<int> colors_;
  std::vector<ColorSet> palettes_;
  std::vector<int> use_count_;
  int unassigned_;
  int unused_;
};

namespace detail {

class Search {
 public:
  Search(const Graph& g, int t, const SolverConfig& cfg)
      : g_(g),
        t_(t),
        cfg_(cfg),
        order_(edge_order(g, cfg.edge_order)),
        state_(g, t, cfg.properness_only),
        start_(std::chrono::steady_clock::now()) {}

  Decision run() {
    Decision d;
    const bool found = dfs(0);
    d.nodes = nodes_;
    if (found) {
      d.status = Status::colorable;
      d.certificate = Coloring{t_, state_.colors()};
    } else if (out_of_budget_) {
      d.status = Status::budget_exceeded;
      d.reason = "search budget exhausted after " + std::to_string(nodes_) + " nodes";
    } else {
      d.status = Status::not_colorable;
      d.reason = "exhaustive search found no coloring";
    }
    return d;
  }

 private:
  bool budget_hit() {
    if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) return true;
    if (cfg_.time_budget && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ >= *cfg_.time_budget)
      return true;
    return false;
  }

  bool dfs(std::size_t pos) {
    if (pos == order_.size()) {
      const Coloring c{t_, state_.colors()};
      return cfg_.properness_only ? check_proper(g_, c).ok : check_cyclically_interval(g_, c).ok;
    }
    const edge_id e = order_[pos];
    const int last = (pos == 0 && cfg_.symmetry_breaking) ? 1 : t_;
    for (int c = 1; c <= last; ++c) {
      if (!state_.admissible(e, c)) continue;
      if (budget_hit()) {
        out_of_budget_ = true;
        return false;
      }
      ++nodes_;
      state_.assign(e, c);
      if (dfs(pos + 1)) return true;
      state_.unassign(e);
      if (out_of_budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  int t_;
  const SolverConfig& cfg_;
  std::vector<edge_id> order_;
  SearchState state_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

/// Answers outside [max degree, |E|] without search. Decision when the range
/// check alone settles the question.
inline std::optional<Decision> trivial_decision(const Graph& g, int t) {
  if (t < 1) throw error(errc::range_error, "t=" + std::to_string(t));
  require_connected(g);
  const auto e = static_cast<std::int64_t>(g.edge_count());
  if (t > e) {
    return Decision{Status::not_colorable, std::nullopt,
                    "t=" + std::to_string(t) + " exceeds |E|=" + std::to_string(e) +
                        ", so some color stays unused",
                    0};
  }
  const int delta = max_degree(g);
  if (t < delta) {
    return Decision{Status::not_colorable, std::nullopt,
                    "t=" + std::to_string(t) + " is below the maximum degree " +
                        std::to_string(delta) + ", so no proper coloring exists",
                    0};
  }
  return std::nullopt;
}

}  // namespace detail

/// Does g admit a cyclically-interval t-coloring (or, with properness_only,
/// a proper surjective t-coloring)? NotColorable from search is exhaustive.
inline Decision decide(const Graph& g, int t, const SolverConfig& cfg = {}) {
  cfg.validate();
  if (auto d = detail::trivial_decision(g, t)) return *d;
  return detail::Search(g, t, cfg).run();
}

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000'000;

namespace detail {
/// t^|E|, saturating at one past `cap`.
inline std::uint64_t assignment_count(int t, std::size_t edges, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < edges; ++k) {
    if (total > cap / static_cast<std::uint64_t>(t)) return cap + 1;
    total *= static_cast<std::uint64_t>(t);
  }
  return total;
}

/// Calls visit(colors) for every valid coloring in odometer order until it
/// returns false.
template <class Visit>
void enumerate_all(const Graph& g, int t, std::uint64_t cap, Visit&& visit) {
  if (assignment_count(t, g.edge_count(), cap) > cap)
    throw error(errc::too_large, std::to_string(t) + "^" + std::to_string(g.edge_count()) +
                                     " assignments exceed the cap of " + std::to_string(cap));
  const FastCyclicCheck valid(g, t);
  std::vector<int> colors(g.edge_count(), 1);
  while (true) {
    if (valid(colors) && !visit(colors)) return;
    std::size_t k = 0;
    while (k < colors.size() && colors[k] == t) colors[k++] = 1;
    if (k == colors.size()) return;
    ++colors[k];
  }
}
}  // namespace detail

/// Exhaustive oracle: tries every one of the t^|E| assignments.
inline Decision brute_force_decide(const Graph& g, int t,
                                   std::uint64_t cap = kDefaultBruteForceCap) {
  if (t < 1) throw error(errc::range_error, "t=" + std::to_string(t));
  require_connected(g);
  if (static_cast<std::size_t>(t) > g.edge_count())
    return {Status::not_colorable, std::nullopt, "t exceeds |E|", 0};
  Decision d{Status::not_colorable, std::nullopt, "no assignment passes the checker", 0};
  detail::enumerate_all(g, t, cap, [&](const std::vector<int>& colors) {
    d.status = Status::colorable;
    d.certificate = Coloring{t, colors};
    d.reason.clear();
    return false;
  });
  return d;
}

/// Number of cyclically-interval t-colorings, by exhaustive enumeration.
inline std::uint64_t brute_force_count(const Graph& g, int t,
                                       std::uint64_t cap = kDefaultBruteForceCap) {
  if (t < 1) throw error(errc::range_error, "t=" + std::to_string(t));
  require_connected(g);
  if (static_cast<std::size_t>(t) > g.edge_count()) return 0;
  std::uint64_t n = 0;
  detail::enumerate_all(g, t, cap, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

inline constexpr std::size_t kChromaticIndexEdgeLimit = 256;

/// Exact chromatic index. Bipartite graphs return the maximum degree;
/// otherwise a proper max-degree coloring is searched for and the answer is
/// the maximum degree or one more.
inline int chromatic_index(const Graph& g, const SolverConfig& cfg = {},
                           std::size_t edge_limit = kChromaticIndexEdgeLimit) {
  require_connected(g);
  if (g.edge_count() == 0) throw error(errc::invalid_argument, "graph has no edges");
  const int delta = max_degree(g);
  if (std::holds_alternative<Bipartition>(bipartition(g))) return delta;
  if (g.edge_count() > edge_limit)
    throw error(errc::search_budget_exceeded,
                "non-bipartite graph with " + std::to_string(g.edge_count()) +
                    " edges exceeds the chromatic index search limit of " +
                    std::to_string(edge_limit));
  SolverConfig proper = cfg;
  proper.properness_only = true;
  const auto d = decide(g, delta, proper);
  switch (d.status) {
    case Status::colorable: return delta;
    case Status::not_colorable: return delta + 1;
    case Status::budget_exceeded: break;
  }
  throw error(errc::search_budget_exceeded, "chromatic index search: " + d.reason);
}

struct SpectrumEntry {
  int t;
  Decision decision;
};

struct SpectrumResult {
  std::string graph_id;
  int chromatic_index = 0;
  int t_min = 0;  // examined range; empty when t_min > t_max
  int t_max = 0;
  std::vector<SpectrumEntry> outcomes;  // ascending t
  std::vector<std::string> warnings;

  std::vector<int> members() const {
    std::vector<int> out;
    for (const auto& o : outcomes)
      if (o.decision.status == Status::colorable) out.push_back(o.t);
    return out;
  }

  bool any_budget_exceeded() const {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const SpectrumEntry& o) {
      return o.decision.status == Status::budget_exceeded;
    });
  }
};

struct SpectrumRange {
  std::optional<int> t_min;
  std::optional<int> t_max;
};

/// Decides every t in the requested range, clamped to [chromatic index, |E|].
/// Distinct t run independently; `jobs` > 1 spreads them over threads.
inline SpectrumResult spectrum(const Graph& g, const SpectrumRange& range = {},
                               const SolverConfig& cfg = {}, unsigned jobs = 1,
                               std::string graph_id = {}) {
  cfg.validate();
  SpectrumResult result;
  result.graph_id = std::move(graph_id);
  result.chromatic_index = chromatic_index(g, cfg);
  const int edges = static_cast<int>(g.edge_count());
  int lo = range.t_min.value_or(result.chromatic_index);
  int hi = range.t_max.value_or(edges);
  if (lo < result.chromatic_index) {
    result.warnings.push_back("t-min " + std::to_string(lo) + " raised to chromatic index " +
                              std::to_string(result.chromatic_index));
    lo = result.chromatic_index;
  }
  if (hi > edges) {
    result.warnings.push_back("t-max " + std::to_string(hi) + " lowered to |E| = " +
                              std::to_string(edges));
    hi = edges;
  }
  result.t_min = lo;
  result.t_max = hi;
  if (lo > hi) {
    result.warnings.push_back("empty t range");
    return result;
  }

  result.outcomes.resize(static_cast<std::size_t>(hi - lo + 1));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int k = next++; k <= hi - lo; k = next++)
      result.outcomes[static_cast<std::size_t>(k)] = {lo + k, decide(g, lo + k, cfg)};
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(hi - lo + 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return result;
}

}  // namespace cic
