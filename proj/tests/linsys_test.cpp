#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "charseq/corpus.hpp"
#include "charseq/error.hpp"
#include "charseq/json_io.hpp"
#include "charseq/linsys.hpp"
#include "charseq/realize.hpp"
#include "oracles.hpp"

using namespace charseq;

TEST(RAlpha, SplitAndCompleteSystems) {
  EXPECT_EQ(split_alpha(6, 13).s, 3);
  EXPECT_EQ(split_alpha(6, 13).r, 5);
  EXPECT_EQ(split_alpha(6, 12).r, 0);
  for (int d = 4; d <= 9; ++d)
    for (int s = 1; s <= d - 3; ++s)
      EXPECT_EQ(r_alpha(d, s * d), oracle::count_monomials(3, s) - 1) << d << " " << s;
}

TEST(RAlpha, RiemannRochRegime) {
  for (int d = 3; d <= 8; ++d) {
    const int g = (d - 1) * (d - 2) / 2;
    for (int alpha = (d - 2) * d; alpha <= (d - 2) * d + 3 * d; ++alpha) {
      if (split_alpha(d, alpha).s < d - 2) continue;
      EXPECT_EQ(r_alpha(d, alpha), alpha - g);
    }
  }
}

TEST(RAlpha, BoundsRandomPointGroups) {
  const PrimeField k(10007);
  std::mt19937_64 rng(31);
  for (int d = 4; d <= 6; ++d) {
    const PlaneCurve x = fermat_curve(k, d);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t count = 1 + rng() % (3 * static_cast<std::size_t>(d));
      const PointGroup y = structured_points(x, count, d - 3, rng);
      EXPECT_LE(dim_linear_system(x, y), r_alpha(d, static_cast<std::int64_t>(y.size())));
    }
  }
}

TEST(EqualPhi, Range) {
  EXPECT_EQ(equal_phi_range(6, 12), (std::pair<int, int>{2, 5}));
  EXPECT_EQ(equal_phi_range(6, 13), (std::pair<int, int>{3, 5}));
}

TEST(EqualPhi, MinimalSequenceAgreesEverywhere) {
  for (int d = 3; d <= 7; ++d)
    for (int alpha = d; alpha <= 3 * d; ++alpha) {
      const RelCharSeq delta = minimal_delta_seq(d, alpha);
      const auto [lo, hi] = equal_phi_range(d, alpha);
      for (int i = lo; i <= hi; ++i) {
        const auto v = classify_equal_phi(delta, d, alpha, i);
        EXPECT_TRUE(v.head_agrees && v.tail_agrees);
        EXPECT_TRUE(v.holds());
      }
    }
}

TEST(EqualPhi, CaseBoundaries) {
  const RelCharSeq delta = minimal_delta_seq(6, 13);  // s = 3, r = 5
  EXPECT_EQ(classify_equal_phi(delta, 6, 13, 3).predicted, EqualPhiCase::Tail);
  const RelCharSeq d2 = minimal_delta_seq(6, 9);  // s = 2, r = 3
  EXPECT_EQ(classify_equal_phi(d2, 6, 9, 2).predicted, EqualPhiCase::Head);
  EXPECT_EQ(classify_equal_phi(d2, 6, 9, 3).predicted, EqualPhiCase::Either);
  EXPECT_EQ(classify_equal_phi(d2, 6, 9, 4).predicted, EqualPhiCase::Tail);
  EXPECT_THROW(classify_equal_phi(d2, 6, 9, 5), Error);
}

TEST(EqualPhi, HypothesisFails) {
  RelCharSeq rel{{2, 3, 4, 6}, plane_curve_charseq(4)};  // alpha = 9 = 3*4 - 3
  try {
    classify_equal_phi(rel, 4, 9, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::HypothesisFails);
  }
}

TEST(EqualPhi, PredictionHoldsForAllAdmissibleSequences) {
  // every admissible sequence is realizable, so the classification must hold
  for (int d = 3; d <= 6; ++d) {
    std::vector<int> n(static_cast<std::size_t>(d));
    std::function<void(int)> rec = [&](int i) {
      if (i == d) {
        RelCharSeq rel{n, plane_curve_charseq(d)};
        const auto alpha = rel_degree(rel);
        if (alpha < d) return;
        const auto [lo, hi] = equal_phi_range(d, alpha);
        for (int t = lo; t <= hi; ++t) {
          if (phi_rel(rel, t) != phi_rel(minimal_delta_seq(d, alpha), t)) continue;
          EXPECT_TRUE(classify_equal_phi(rel, d, alpha, t).holds()) << join(n) << " i=" << t;
        }
        return;
      }
      for (int v = (i == 0 ? 1 : n[static_cast<std::size_t>(i - 1)]);
           v <= (i == 0 ? 4 : n[static_cast<std::size_t>(i - 1)] + 1); ++v) {
        if (v < i) continue;
        n[static_cast<std::size_t>(i)] = v;
        rec(i + 1);
      }
    };
    rec(0);
  }
}

TEST(Maximal, ResidualOfSection) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 6);
  std::mt19937_64 rng(2);
  const Section sec = transverse_section(x, 2, rng);
  PointGroup y{k, {sec.points.begin() + 1, sec.points.end()}};  // s = 2, r = 1
  const auto v = classify_maximal(x, y);
  EXPECT_EQ(v.dim, r_alpha(6, 11));
  EXPECT_EQ(v.case_tag, kTagResidual);
  EXPECT_TRUE(v.verified);
  EXPECT_TRUE(v.certificate.n0_equals_s);
  EXPECT_TRUE(v.certificate.degree_s_form);
  // the rank certificate: |Y| - phi_Y(d - 3) recomputed independently
  EXPECT_EQ(static_cast<std::int64_t>(y.size()) - oracle::phi_points(y, 3), v.dim);
}

TEST(Maximal, ContainsLowerSection) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 6);
  std::mt19937_64 rng(3);
  const Section line = transverse_section(x, 1, rng);
  std::vector<ProjPoint> pts = line.points;
  for (const auto& q : sample_curve_points(x, 40, rng)) {
    if (pts.size() == 8) break;
    if (eval_form(k, line.h, q) != 0) pts.push_back(q);
  }
  std::sort(pts.begin(), pts.end());
  const PointGroup y{k, pts};  // alpha = 8: s = 2, r = 4
  const auto v = classify_maximal(x, y);
  EXPECT_EQ(v.case_tag, kTagContains);
  EXPECT_TRUE(v.verified);
  ASSERT_TRUE(v.certificate.contained_section);
  EXPECT_EQ(*v.certificate.contained_section, line.points);
  EXPECT_EQ(static_cast<std::int64_t>(y.size()) - oracle::phi_points(y, 3), v.dim);
}

TEST(Maximal, NotMaximalAndLargeDegree) {
  const PrimeField k(10007);
  const PlaneCurve x6 = fermat_curve(k, 6);
  try {
    classify_maximal(x6, random_points_on_curve(x6, 11, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMaximal);
  }
  const PlaneCurve x4 = fermat_curve(k, 4);
  const auto v = classify_maximal(x4, random_points_on_curve(x4, 8, 5));
  EXPECT_EQ(v.case_tag, kTagLarge);
  EXPECT_EQ(v.dim, 8 - 3);
}

TEST(Maximal, FindContainedSectionEmptyForGeneric) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 5);
  EXPECT_FALSE(find_contained_section(x, random_points_on_curve(x, 7, 1), 1));
  EXPECT_EQ(find_contained_section(x, random_points_on_curve(x, 7, 1), 0)->size(), 0u);
}
