#pragma once

// Dimension bounds for complete linear systems on a plane curve and the
// classification of the systems reaching them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charseq/liaison.hpp"
#include "charseq/pointlab.hpp"

namespace charseq {

/// alpha = s d - r with 0 <= r < d.
struct AlphaSplit {
  std::int64_t s = 0;
  std::int64_t r = 0;
};

AlphaSplit split_alpha(int d, std::int64_t alpha);

/// Largest dimension of a linear system of degree alpha on an irreducible
/// plane curve of degree d. For s >= d-2 every system has alpha - g.
std::int64_t r_alpha(int d, std::int64_t alpha);

enum class EqualPhiCase {
  Tail,   // n_t agrees with Delta for t >= d-r
  Head,   // n_t agrees with Delta for t <= d-r-1
  Either  // at least one of the two
};

std::string_view to_string(EqualPhiCase c);

struct EqualPhiVerdict {
  EqualPhiCase predicted = EqualPhiCase::Either;
  std::int64_t s = 0;
  std::int64_t r = 0;
  int i = 0;
  RelCharSeq delta;
  bool head_agrees = false;
  bool tail_agrees = false;

  /// The agreement predicted for this i is present in the sequence.
  bool holds() const;
};

/// Valid degrees i for the comparison with Delta: [s, s+d-3] when r = 0,
/// [s, s+d-4] when r >= 1.
std::pair<int, int> equal_phi_range(int d, std::int64_t alpha);

/// Requires phi_Y(i) = phi_Delta(i), else Error(HypothesisFails); i outside
/// equal_phi_range is Error(Domain).
EqualPhiVerdict classify_equal_phi(const RelCharSeq& rel_y, int d, std::int64_t alpha, int i);

inline constexpr std::string_view kTagResidual = "residual-of-r-points-in-degree-s-section";
inline constexpr std::string_view kTagContains = "contains-degree-(s-1)-section";
inline constexpr std::string_view kTagEither = "either-boundary-case";
inline constexpr std::string_view kTagLarge = "large-degree-regime";

struct MaxSysCertificate {
  bool n0_equals_s = false;        // n_0 = s
  bool degree_s_form = false;      // some degree-s form vanishes on Y
  bool head_agrees = false;        // n_t = s+t for t <= d-r-1
  bool tail_agrees = false;        // n_t = s+t-1 for t >= d-r
  std::optional<std::vector<ProjPoint>> contained_section;  // when searched
  bool searched = false;
};

struct MaxSysVerdict {
  std::int64_t alpha = 0;
  std::int64_t s = 0;
  std::int64_t r = 0;
  int d = 0;
  std::int64_t dim = 0;
  std::string case_tag;
  std::optional<RelCharSeq> rel;
  MaxSysCertificate certificate;
  bool verified = false;
};

/// Needs dim |Y| = r_alpha(d, |Y|), else Error(NotMaximal). For s >= d-2 the
/// verdict is large-degree-regime without a certificate. The exhaustive
/// contained-section search runs when d <= search_max_degree.
MaxSysVerdict classify_maximal(const PlaneCurve& x, const PointGroup& y, int search_max_degree = 6);

/// Points of Y cut out by a degree-k curve meeting X only inside Y (k d of
/// them), found by trying the curves through subsets of C(k+2, 2) - 1
/// points. k = 0 yields the empty section.
std::optional<std::vector<ProjPoint>> find_contained_section(const PlaneCurve& x, const PointGroup& y,
                                                             int k);

}  // namespace charseq
