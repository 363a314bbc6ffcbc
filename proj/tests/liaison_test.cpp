#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "charseq/error.hpp"
#include "charseq/liaison.hpp"
#include "oracles.hpp"

using namespace charseq;

namespace {

// Every sorted n with n_i >= i, n_i <= top, for a plane curve of degree d.
void for_each_rel(int d, int top, const std::function<void(const RelCharSeq&)>& fn) {
  RelCharSeq rel;
  rel.ambient = plane_curve_charseq(d);
  rel.entries.assign(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == d) {
      fn(rel);
      return;
    }
    for (int v = std::max(lo, i); v <= top; ++v) {
      rel.entries[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, 0);
}

// phi_Y(l) = phi_X(l) - dim (I_Y/I_X)_l, with each free summand R_1[-n]
// contributing l - n + 1 in degree l.
std::int64_t phi_y_oracle(const RelCharSeq& rel, int l) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < rel.entries.size(); ++i) {
    v += std::max(0, l - rel.ambient.entries[i] + 1);
    v -= std::max(0, l - rel.entries[i] + 1);
  }
  return v;
}

}  // namespace

TEST(RelCharSeq, AbsoluteSequenceMatchesHilbertFunction) {
  for (int d = 1; d <= 5; ++d)
    for_each_rel(d, 7, [&](const RelCharSeq& rel) {
      const CharSeq abs_y = abs_from_rel(rel);
      EXPECT_EQ(static_cast<std::int64_t>(abs_y.degree()), rel_degree(rel));
      EXPECT_EQ(abs_y.cone_dim, 1);
      EXPECT_EQ(abs_y.codim, 2);
      for (int l = 0; l <= 9; ++l) {
        EXPECT_EQ(phi_from_charseq(abs_y, l), phi_y_oracle(rel, l));
        EXPECT_EQ(phi_rel(rel, l), phi_y_oracle(rel, l));
      }
    });
}

TEST(RelCharSeq, RoundTripThroughAbsolute) {
  for (int d = 1; d <= 5; ++d)
    for_each_rel(d, 7, [&](const RelCharSeq& rel) {
      const CharSeq abs_y = abs_from_rel(rel);
      if (validate_abs(abs_y).ok()) {
        EXPECT_EQ(rel_from_abs(rel.ambient, abs_y), rel);
        return;
      }
      // sequences that are not Hilbert functions may still invert
      try {
        EXPECT_EQ(rel_from_abs(rel.ambient, abs_y), rel);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InconsistentPair);
      }
    });
}

TEST(RelCharSeq, InconsistentPairRejected) {
  const CharSeq amb = plane_curve_charseq(1);
  try {
    rel_from_abs(amb, CharSeq{{0, 1, 1}, 1, 2});  // two points in degree 1 on a line
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InconsistentPair);
  }
}

TEST(RelCharSeq, CheckRel) {
  EXPECT_THROW(check_rel(RelCharSeq{{0, 0}, plane_curve_charseq(2)}), Error);
  EXPECT_THROW(check_rel(RelCharSeq{{2, 1}, plane_curve_charseq(2)}), Error);
  EXPECT_THROW(check_rel(RelCharSeq{{2}, plane_curve_charseq(2)}), Error);
  EXPECT_NO_THROW(check_rel(RelCharSeq{{1, 2}, plane_curve_charseq(2)}));
}

TEST(Link, SelfLinkedCompleteIntersection) {
  const RelCharSeq rel{{2, 2, 3, 3}, CharSeq{{0, 1, 2, 3}, 2, 1}};
  EXPECT_EQ(link(rel, 2).entries, (std::vector<int>{2, 2, 3, 3}));
}

TEST(Link, InvolutionAndBoxCount) {
  for (int d = 1; d <= 5; ++d)
    for_each_rel(d, 7, [&](const RelCharSeq& rel) {
      for (int s = 1; s <= 4; ++s) {
        bool fits = true;
        for (int i = 0; i < d; ++i) fits &= rel.entries[static_cast<std::size_t>(d - 1 - i)] <= d - 1 + s - i;
        if (!fits) {
          EXPECT_THROW(link(rel, s), Error);
          continue;
        }
        const RelCharSeq linked = link(rel, s);
        EXPECT_EQ(link(linked, s), rel);
        EXPECT_EQ(rel_degree(rel) + rel_degree(linked), static_cast<std::int64_t>(s) * d);
        // Delta h_Z(l) = Delta h_Y(l) + Delta h_Y'(s + d - 2 - l) for Z = X cap S, summed up
        const std::int64_t deg_linked = rel_degree(linked);
        for (int l = 0; l <= s + d + 2; ++l) {
          const std::int64_t h_z = oracle::count_monomials(3, l) - oracle::count_monomials(3, l - d) -
                                   oracle::count_monomials(3, l - s) + oracle::count_monomials(3, l - d - s);
          const int dual = s + d - 3 - l;
          const std::int64_t h_linked = dual < 0 ? 0 : phi_y_oracle(linked, dual);
          EXPECT_EQ(phi_y_oracle(rel, l) + deg_linked - h_linked, h_z) << "d=" << d << " s=" << s << " l=" << l;
        }
      }
    });
}

TEST(Link, NeedsGorensteinAmbient) {
  const RelCharSeq rel{{1, 2, 2}, CharSeq{{0, 1, 1}, 1, 2}};
  EXPECT_THROW(link(rel, 2), Error);
}

TEST(AddSection, ShiftsEntries) {
  const RelCharSeq rel{{1, 2, 4}, plane_curve_charseq(3)};
  EXPECT_EQ(add_section(rel, 2).entries, (std::vector<int>{3, 4, 6}));
  EXPECT_EQ(rel_degree(add_section(rel, 2)), rel_degree(rel) + 6);
  EXPECT_THROW(add_section(rel, 0), Error);
}

TEST(Split, DegreesAddUp) {
  int seen = 0;
  for (int d = 2; d <= 5; ++d)
    for_each_rel(d, 8, [&](const RelCharSeq& rel) {
      const auto split = split_on_gap(rel);
      bool has_gap = false;
      for (std::size_t i = 1; i < rel.entries.size(); ++i) has_gap |= rel.entries[i] > rel.entries[i - 1] + 1;
      ASSERT_EQ(split.has_value(), has_gap);
      if (!split) return;
      ++seen;
      EXPECT_EQ(split->s, d - static_cast<int>(split->gap_index));
      if (split->inner.status == SplitPartStatus::BelowAmbient ||
          split->outer.status == SplitPartStatus::BelowAmbient)
        return;
      EXPECT_EQ(rel_degree(split->inner.rel) + rel_degree(split->outer.rel), rel_degree(rel));
    });
  EXPECT_GT(seen, 0);
}

TEST(Split, Example) {
  const RelCharSeq rel{{1, 3, 4}, plane_curve_charseq(3)};
  const auto split = split_on_gap(rel);
  ASSERT_TRUE(split);
  EXPECT_EQ(split->gap_index, 1u);
  EXPECT_EQ(split->s, 2);
  EXPECT_EQ(split->inner.rel.entries, (std::vector<int>{3, 4}));
  EXPECT_EQ(split->outer.rel.entries, (std::vector<int>{-1}));
  EXPECT_EQ(split->outer.status, SplitPartStatus::BelowAmbient);
  EXPECT_EQ(to_string(SplitPartStatus::Empty), "empty");
}

TEST(Minimal, WorkedExample) {
  EXPECT_EQ(minimal_delta_seq(6, 13).entries, (std::vector<int>{3, 3, 4, 5, 6, 7}));
  EXPECT_EQ(minimal_delta_seq(4, 8).entries, (std::vector<int>{2, 3, 4, 5}));
}

TEST(Minimal, DegreeIsAlpha) {
  for (int d = 1; d <= 8; ++d)
    for (int alpha = 1; alpha <= 5 * d; ++alpha) EXPECT_EQ(rel_degree(minimal_delta_seq(d, alpha)), alpha);
}

TEST(Genus, KnownCurves) {
  // plane curve of degree d: its hyperplane section is d collinear points
  for (int d = 1; d <= 9; ++d) {
    CharSeq collinear{{}, 1, 2};
    for (int i = 0; i < d; ++i) collinear.entries.push_back(i);
    EXPECT_EQ(genus_acm_curve(collinear, d), (d - 1) * (d - 2) / 2);
  }
  // complete intersection of type (a, b) in P^3
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b) {
      const std::vector<int> degs{a, b};
      EXPECT_EQ(genus_acm_curve(ci_charseq(degs, 1), a * b), 1 + a * b * (a + b - 4) / 2);
    }
}

TEST(Genus, HalphenFromMinimalSequence) {
  for (int d = 3; d <= 8; ++d) {
    EXPECT_EQ(halphen_bound(d, d), (d - 1) * (d - 2) / 2);
    for (int alpha = d; alpha <= 4 * d; ++alpha)
      EXPECT_EQ(genus_acm_curve(minimal_delta_seq(d, alpha), alpha), halphen_bound(alpha, d));
  }
}
