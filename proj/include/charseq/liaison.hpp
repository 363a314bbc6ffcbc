#pragma once

// Relative characteristic sequences: I_{Y/X} ~ (+) R_{m-1}[-n_i] for a
// hypersurface Y of the ACM scheme X with sequence (m_i).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charseq/seqcalc.hpp"

namespace charseq {

struct RelCharSeq {
  std::vector<int> entries;  // n_0 <= ... <= n_{d-1}
  CharSeq ambient;           // sequence of X, same length

  std::size_t degree() const { return entries.size(); }
  friend bool operator==(const RelCharSeq&, const RelCharSeq&) = default;
};

/// Plane curve of degree d: entries (0, 1, ..., d-1), cone_dim 2, codim 1.
CharSeq plane_curve_charseq(int d);

/// Throws Error(Domain) on length mismatch, unsorted entries or n_i < m_i.
void check_rel(const RelCharSeq& rel);

/// sum_i (n_i - m_i).
std::int64_t rel_degree(const RelCharSeq& rel);

/// Sorted union of the intervals [m_i, n_i - 1]; cone_dim drops by one and
/// codim grows by one.
CharSeq abs_from_rel(const RelCharSeq& rel);

/// Inverse of abs_from_rel: d_i = c_i - l'_i and n_j = min{i : d_i > j}.
/// Throws Error(InconsistentPair) when no relative sequence over ambient
/// reproduces absY.
RelCharSeq rel_from_abs(const CharSeq& ambient, const CharSeq& absY);

/// n'_i = m_{d-1} + s - n_{d-1-i}. The ambient must be Gorenstein symmetric;
/// throws Error(InvalidLiaisonDegree) when some n'_i < m_i.
RelCharSeq link(const RelCharSeq& rel, int s);

/// n_i + s for s >= 1.
RelCharSeq add_section(const RelCharSeq& rel, int s);

enum class SplitPartStatus {
  Valid,
  Empty,        // entries equal the ambient: no points
  BelowAmbient  // some entry below the ambient minimum
};

std::string_view to_string(SplitPartStatus status);

struct SplitPart {
  RelCharSeq rel;
  SplitPartStatus status = SplitPartStatus::Valid;
};

struct GapSplit {
  std::size_t gap_index = 0;  // first i with n_i > n_{i-1} + 1
  int s = 0;                  // d - i
  SplitPart inner;            // Y'' over a degree d-i ambient
  SplitPart outer;            // Y' over a degree i ambient
};

/// Splits along the first gap. Ambients of the parts are plane curve
/// sequences (0, ..., k-1) of the right degree.
std::optional<GapSplit> split_on_gap(const RelCharSeq& rel);

/// alpha = s d - r, 0 <= r < d: (s, s+1, ..., s+d-1) with the last r entries
/// lowered by one, over a plane curve of degree d.
RelCharSeq minimal_delta_seq(int d, std::int64_t alpha);

/// phi_Y(l) of the point group with this relative sequence.
std::int64_t phi_rel(const RelCharSeq& rel, int l);

/// sum_{l >= 1} (alpha - phi(l)) for the point group with sequence section.
std::int64_t genus_acm_curve(const CharSeq& section, std::int64_t alpha);
std::int64_t genus_acm_curve(const RelCharSeq& section, std::int64_t alpha);

/// 1 + s d (s+d-4)/2 - r (2s+2d-r-5)/2 for alpha = s d - r, 0 <= r < d.
std::int64_t halphen_bound(std::int64_t alpha, int d);

}  // namespace charseq
