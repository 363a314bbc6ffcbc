#pragma once

// Building point groups with prescribed relative sequences on a plane curve,
// one point (one box of the case diagram) at a time.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "charseq/liaison.hpp"
#include "charseq/pointlab.hpp"

namespace charseq {

/// n_i >= i and n_i <= n_{i+1} <= n_i + 1.
bool is_admissible(std::span<const int> seq);

/// Boxes of a relative sequence over a plane curve: column i spans the
/// levels i+1 .. n_i.
struct CaseDiagram {
  RelCharSeq rel;

  std::int64_t degree() const;
  int height() const;
  /// One text row per level, top level first; '#' marks a box of Y and 'o'
  /// a level below the ambient entry.
  std::string render() const;
};

/// The last entry equal to level - 1 becomes level. Error(InadmissibleAddition)
/// when there is no such entry or the result breaks admissibility.
RelCharSeq add_case(const RelCharSeq& seq, int level);

/// Sequence of (level) additions leading from the staircase (n_0, n_0+1, ...)
/// to target, obtained by repeatedly lowering the first plateau entry.
struct AdditionPlan {
  int base = 0;             // n_0 of the staircase
  std::vector<int> levels;  // in the order the boxes are added
};

AdditionPlan addition_plan(std::span<const int> target);

/// Candidate points for filtration scans: all rational points of X when
/// p <= 101, otherwise the supplied list. Error(ScanInfeasible) when neither
/// is available.
std::vector<ProjPoint> scan_candidates(const PlaneCurve& x, const std::vector<ProjPoint>* supplied);

/// Y_t: candidates q (together with Y) where every degree-t form vanishing
/// on Y also vanishes. t < 0 gives every candidate.
std::vector<ProjPoint> filtration_points(const PlaneCurve& x, const PointGroup& y, int t,
                                         const std::vector<ProjPoint>* candidates = nullptr);

/// Y_{level-2} \ Y_{level-1}: adding any of these points to Y performs
/// add_case(rel, level).
std::vector<ProjPoint> addition_witnesses(const PlaneCurve& x, const PointGroup& y, int level,
                                          const std::vector<ProjPoint>* candidates = nullptr);

/// Smallest witness in canonical order, if any.
std::optional<ProjPoint> can_add_at_level(const PlaneCurve& x, const PointGroup& y, int level,
                                          const std::vector<ProjPoint>* candidates = nullptr);

struct RealizeOptions {
  int attempts = 8;            // fresh bases before giving up
  int branch = 4;              // witnesses tried per addition
  std::size_t pool_size = 5000;  // sampled candidates when p > 101
};

/// A point group on X with measured relative sequence target.
/// Error(InadmissibleTarget) or Error(SearchExhausted).
PointGroup realize(const PlaneCurve& x, std::span<const int> target, std::uint64_t seed,
                   const RealizeOptions& options = {});

/// Random point group of the given size mixing generic points, partial line
/// sections and partial transverse sections of degree <= max_section.
PointGroup structured_points(const PlaneCurve& x, std::size_t count, int max_section,
                             std::mt19937_64& rng);

struct ConjectureTrial {
  std::vector<int> rel;
  std::vector<std::int64_t> phi_y;
  std::vector<std::int64_t> phi_section;
  bool dominated = true;
  bool connex = true;
};

struct ConjectureReport {
  int d = 0;
  int s = 0;
  int trials = 0;
  int violations = 0;
  std::vector<ConjectureTrial> records;
};

/// For random Y of degree s d: phi_Y >= phi of a degree-s section pointwise,
/// and the degrees where they differ form an interval.
ConjectureReport conjecture_scan(const PlaneCurve& x, int s, int trials, std::uint64_t seed);

}  // namespace charseq
