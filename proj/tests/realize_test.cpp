#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "charseq/corpus.hpp"
#include "charseq/error.hpp"
#include "charseq/json_io.hpp"
#include "charseq/realize.hpp"
#include "oracles.hpp"

using namespace charseq;

namespace {

std::vector<std::vector<int>> admissible_sequences(int d, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(static_cast<std::size_t>(d));
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      out.push_back(n);
      return;
    }
    const int lo = i == 0 ? 0 : n[static_cast<std::size_t>(i - 1)];
    const int hi = i == 0 ? top : n[static_cast<std::size_t>(i - 1)] + 1;
    for (int v = std::max(lo, i); v <= std::min(hi, top); ++v) {
      n[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

RelCharSeq over_plane(std::vector<int> n) {
  const int d = static_cast<int>(n.size());
  return RelCharSeq{std::move(n), plane_curve_charseq(d)};
}

}  // namespace

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(std::vector<int>{2, 3, 3, 4}));
  EXPECT_TRUE(is_admissible(std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(is_admissible(std::vector<int>{2, 4}));
  EXPECT_FALSE(is_admissible(std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(is_admissible(std::vector<int>{3, 2}));
}

TEST(AddCase, RaisesLastEntryAtLevel) {
  EXPECT_EQ(add_case(over_plane({2, 3, 3, 4}), 4).entries, (std::vector<int>{2, 3, 4, 4}));
  EXPECT_EQ(add_case(over_plane({2, 3, 3, 4}), 3).entries, (std::vector<int>{3, 3, 3, 4}));
  EXPECT_THROW(add_case(over_plane({2, 3, 3, 4}), 5), Error);
  EXPECT_THROW(add_case(over_plane({2, 3, 3, 4}), 7), Error);
}

TEST(AddCase, DegreeGrowsByOne) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& n : admissible_sequences(d, 7))
      for (int level = 1; level <= 8; ++level) {
        try {
          const RelCharSeq next = add_case(over_plane(n), level);
          EXPECT_TRUE(is_admissible(next.entries));
          EXPECT_EQ(rel_degree(next), rel_degree(over_plane(n)) + 1);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::InadmissibleAddition);
        }
      }
}

TEST(AdditionPlan, ReplaysToTarget) {
  for (int d = 1; d <= 6; ++d)
    for (const auto& n : admissible_sequences(d, 8)) {
      const AdditionPlan plan = addition_plan(n);
      std::vector<int> cur;
      for (int i = 0; i < d; ++i) cur.push_back(plan.base + i);
      RelCharSeq rel = over_plane(cur);
      for (int level : plan.levels) rel = add_case(rel, level);
      EXPECT_EQ(rel.entries, n);
    }
}

TEST(Diagram, CountsBoxes) {
  const CaseDiagram diagram{over_plane({2, 3, 3, 4})};
  EXPECT_EQ(diagram.degree(), 6);
  EXPECT_EQ(diagram.height(), 4);
  const std::string text = diagram.render();
  EXPECT_EQ(std::count(text.begin(), text.end(), '#'), 6);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
  EXPECT_EQ(text, "4 ...#\n3 .##o\n2 ##oo\n1 #ooo\n");
}

TEST(Filtration, NestedAndContainsY) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 4);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const PointGroup y = random_points_on_curve(x, 5 + seed, seed);
    std::vector<ProjPoint> prev = filtration_points(x, y, -1);
    EXPECT_EQ(prev, rational_points(x));
    for (int t = 0; t <= 6; ++t) {
      const auto cur = filtration_points(x, y, t);
      EXPECT_TRUE(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      for (const auto& q : y.points) EXPECT_TRUE(std::binary_search(cur.begin(), cur.end(), q));
      prev = cur;
    }
  }
}

TEST(Filtration, WitnessesPerformTheAddition) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 4);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const PointGroup y = random_points_on_curve(x, 4 + seed, seed);
    const RelCharSeq rel = measure_rcs(x, y);
    for (int level = 1; level <= rel.entries.back() + 1; ++level) {
      bool legal = true;
      RelCharSeq want;
      try {
        want = add_case(rel, level);
      } catch (const Error&) {
        legal = false;
      }
      const auto wit = addition_witnesses(x, y, level);
      if (!legal) {
        EXPECT_TRUE(wit.empty());
        continue;
      }
      for (std::size_t i = 0; i < wit.size(); i += 7) {
        PointGroup bigger = y;
        bigger.points.push_back(wit[i]);
        std::sort(bigger.points.begin(), bigger.points.end());
        EXPECT_EQ(measure_rcs(x, bigger).entries, want.entries);
        ++checked;
      }
      const auto first = can_add_at_level(x, y, level);
      EXPECT_EQ(first.has_value(), !wit.empty());
      if (first) {
        EXPECT_EQ(*first, wit.front());
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Filtration, LargeFieldNeedsCandidates) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 4);
  const PointGroup y = random_points_on_curve(x, 5, 1);
  try {
    filtration_points(x, y, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScanInfeasible);
  }
  std::mt19937_64 rng(3);
  const auto cands = sample_curve_points(x, 50, rng);
  EXPECT_NO_THROW(filtration_points(x, y, 1, &cands));
}

TEST(Realize, TargetsOnQuartic) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 4);
  for (const auto& target : std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 2, 3, 4}, {3, 3, 4, 5}, {4, 4, 4, 4}, {2, 3, 3, 3}}) {
    const PointGroup y = realize(x, target, 1);
    EXPECT_EQ(measure_rcs(x, y).entries, target);
    for (const auto& q : y.points) EXPECT_TRUE(on_curve(x, q));
  }
  try {
    realize(x, std::vector<int>{1, 3, 4, 5}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InadmissibleTarget);
  }
}

TEST(Realize, Deterministic) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 5);
  const std::vector<int> target{3, 3, 4, 5, 5};
  EXPECT_EQ(realize(x, target, 7).points, realize(x, target, 7).points);
}

TEST(Structured, DistinctPointsOnCurve) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 5);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t count = 1 + rng() % 15;
    const PointGroup y = structured_points(x, count, 2, rng);
    EXPECT_EQ(y.size(), count);
    EXPECT_NO_THROW(check_distinct(y));
    for (const auto& q : y.points) EXPECT_TRUE(on_curve(x, q));
  }
}

TEST(Conjecture, ScanReportsNoViolations) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 5);
  const auto report = conjecture_scan(x, 2, 15, 4);
  EXPECT_EQ(report.trials, 15);
  EXPECT_EQ(report.violations, 0);
  ASSERT_EQ(report.records.size(), 15u);
  for (const auto& t : report.records) {
    EXPECT_TRUE(t.dominated);
    EXPECT_TRUE(t.connex);
    for (std::size_t l = 0; l < t.phi_y.size(); ++l) EXPECT_GE(t.phi_y[l], t.phi_section[l]);
  }
}

TEST(Sextic, ConfigurationsMeasureAlike) {
  const PrimeField k(10007);
  const SexticConfigs cfg = build_sextic_configs(k, 1);
  const std::vector<int> want{3, 3, 4, 4, 5, 5};
  EXPECT_EQ(measure_rcs(cfg.x, cfg.aligned).entries, want);
  EXPECT_EQ(measure_rcs(cfg.x, cfg.conic).entries, want);
}
