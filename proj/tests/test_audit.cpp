#include <catch2/catch_amalgamated.hpp>

#include "cic/audit.hpp"
#include "cic/cyclic_interval.hpp"
#include "support/oracles.hpp"

using namespace cic;

TEST_CASE("audit at m=8, k0=0", "[audit]") {
  const auto r = audit({8, 0});
  CHECK(r.pass);
  CHECK(r.t0 == 64);
  CHECK_FALSE(r.first_failure);
  CHECK_FALSE(r.limiting_step);
  REQUIRE(r.steps.size() == 6);
  CHECK(r.step("S3").witness("floor_m2_half") == 32);
  CHECK(r.step("S3").witness("i1") == 30);
  CHECK(r.step("S3").witness("i2") == 36);
  CHECK(r.step("S1").witness("lhs") == 36);
  CHECK(r.step("S1").witness("rhs") == 30);
  CHECK(r.step("S2").witness("lower") == 31);
  CHECK(r.step("S2").witness("upper") == 35);
  CHECK(r.step("S4").witness("union_bound") == 30);
  CHECK_FALSE(r.assumptions.empty());
  CHECK_FALSE(r.interpretations.empty());
}

TEST_CASE("audit at m=7 fails at S2", "[audit]") {
  const auto r = audit({7, 0});
  CHECK_FALSE(r.pass);
  CHECK(r.limiting_step == "S2");
  CHECK_FALSE(r.step("S2").holds);
  CHECK(r.step("S2").witness("lower") == 27);
  CHECK(r.step("S2").witness("floor_m2_half") == 24);
  CHECK(r.step("S2").witness("lower_holds") == 0);
}

TEST_CASE("audit at the top of the k0 range", "[audit]") {
  const auto r = audit({8, 448});
  CHECK(r.t0 == 512);
  CHECK(r.pass);
}

TEST_CASE("audit parameter validation", "[audit]") {
  for (auto p : {AuditParams{1, 0}, AuditParams{8, -1}, AuditParams{8, 449}}) {
    try {
      audit(p);
      FAIL("expected ParamsOutOfRange");
    } catch (const error& e) {
      CHECK(e.code() == errc::params_out_of_range);
    }
  }
  CHECK_THROWS_AS(audit_range(1, 5), error);
  CHECK_THROWS_AS(audit_range(9, 8), error);
}

TEST_CASE("audit_range summaries", "[audit]") {
  const auto hi = audit_range(8, 100);
  CHECK(hi.all_pass());
  CHECK(hi.entries.size() == 93);
  for (const auto& e : hi.entries) CHECK(e.monotone);

  const auto lo = audit_range(2, 7);
  CHECK_FALSE(lo.all_pass());
  for (const auto& e : lo.entries) {
    INFO("m=" << e.m);
    CHECK_FALSE(e.all_pass);
    CHECK(e.at_min.limiting_step == "S2");
    CHECK(e.at_max.limiting_step == "S2");
    CHECK(e.exhaustive);
    CHECK(e.failing_cases == e.cases);
  }

  const auto eight = audit_range(8, 8);
  REQUIRE(eight.entries.size() == 1);
  CHECK(eight.entries[0].exhaustive);
  CHECK(eight.entries[0].cases == 449);
  CHECK(eight.entries[0].failing_cases == 0);
  CHECK(eight.all_pass());
}

TEST_CASE("the argument holds for m in [8,1000] at both k0 endpoints", "[audit][property]") {
  for (std::int64_t m = 8; m <= 1000; ++m) {
    INFO("m=" << m);
    CHECK(audit({m, 0}).pass);
    CHECK(audit({m, AuditParams::max_k0(m)}).pass);
  }
}

TEST_CASE("below m=8 the lower half of S2 fails for every k0", "[audit][exhaustive]") {
  for (std::int64_t m = 2; m <= 7; ++m)
    for (std::int64_t k0 = 0; k0 <= AuditParams::max_k0(m); ++k0) {
      const auto r = audit({m, k0});
      INFO("m=" << m << " k0=" << k0);
      CHECK_FALSE(r.pass);
      CHECK(r.step("S2").witness("lower_holds") == 0);
      CHECK(r.limiting_step == "S2");
    }
}

TEST_CASE("symbolic arc containment agrees with enumeration", "[audit][exhaustive]") {
  // Every (t, L, i1, i2) with t <= 14.
  for (int t = 1; t <= 14; ++t)
    for (int len = 1; len <= t; ++len)
      for (int i1 = 1; i1 <= t; ++i1)
        for (int i2 = 1; i2 <= t; ++i2) {
          const CyclicIntervalSpec target{2, i1, i2, t, true};
          const auto set = intcyc(target);
          bool all_inside = true;
          for (int l = 1; l <= len && all_inside; ++l)
            for (int s = 1; s <= t; ++s) {
              const auto a = cyclic_arc(t, s, l);
              if (a.contains(1) && !a.is_subset_of(set)) {
                all_inside = false;
                break;
              }
            }
          INFO("t=" << t << " L=" << len << " i1=" << i1 << " i2=" << i2);
          CHECK(arcs_through_one_within(t, len, target) == all_inside);
        }
}

TEST_CASE("S5 agrees with enumeration on scaled instances", "[audit][exhaustive]") {
  std::size_t instances = 0;
  for (std::int64_t m : {2, 3})
    for (std::int64_t k0 = 0; k0 <= AuditParams::max_k0(m); ++k0) {
      const auto r = audit({m, k0});
      const auto t0 = static_cast<int>(r.t0);
      if (t0 > 40) continue;
      const int left = static_cast<int>(4 * m - 2), right = static_cast<int>(t0 - 4 * m + 4);
      bool brute = false;
      if (left >= 1 && left <= t0 && right >= 1 && right <= t0) {
        const auto target = intcyc({2, left, right, t0, true});
        brute = true;
        for (int l = 1; l <= left; ++l)
          for (int s = 1; s <= t0; ++s) {
            const auto a = cyclic_arc(t0, s, std::min(l, t0));
            if (a.contains(1) && !a.is_subset_of(target)) brute = false;
          }
      }
      INFO("m=" << m << " k0=" << k0);
      CHECK(r.step("S5").holds == brute);
      ++instances;
    }
  CHECK(instances > 10);
}

TEST_CASE("S3 uses the cyclic-interval module", "[audit]") {
  // m=8, k0=0: open interval (30,36) over [1,64].
  const auto set = intcyc({1, 30, 36, 64, false});
  CHECK(set == ColorSet::range(64, 31, 35));
  CHECK(set.contains(32));
  CHECK_FALSE(intcyc({2, 30, 36, 64, true}).contains(32));
}
