#pragma once

// Absolute characteristic sequences of ACM schemes and their Hilbert functions.
//
// An ACM cone of Krull dimension m+1 has coordinate ring free over a linear
// polynomial subring R_m, with basis degrees 0 = m_0 <= ... <= m_{d-1}. The
// Hilbert function is then phi(l) = sum_i C(m + l - m_i, m), and the widths
// l_j = #{i : m_i = j} are recovered as the (m+1)-th difference of phi.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace charseq {

std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Checked C(n, k) in 64 bits; zero outside 0 <= k <= n.
std::int64_t binom64(std::int64_t n, std::int64_t k);

struct CharSeq {
  std::vector<int> entries;  // m_0 <= ... <= m_{d-1}
  int cone_dim = 1;          // projective dimension + 1
  int codim = 1;             // ambient codimension p

  std::size_t degree() const { return entries.size(); }
  int projective_dim() const { return cone_dim - 1; }
  /// l_j for j = 0 .. max entry (empty for the empty scheme).
  std::vector<std::int64_t> widths() const;

  friend bool operator==(const CharSeq&, const CharSeq&) = default;
};

/// Widths of an arbitrary sorted list of degrees.
std::vector<std::int64_t> widths_of(std::span<const int> entries);

/// Sorted entry list with the given widths.
std::vector<int> entries_from_widths(std::span<const std::int64_t> widths);

struct HilbertFn {
  std::vector<std::int64_t> values;  // phi(0), phi(1), ...
  int cone_dim = 1;
  std::optional<CharSeq> canonical;
};

std::int64_t phi_from_charseq(const CharSeq& seq, int l);

/// Prefix phi(0..length-1) with the canonical form attached.
HilbertFn hilbert_fn(const CharSeq& seq, int length);

/// Inverse of phi_from_charseq. The prefix must run at least two degrees past
/// the last nonzero width. Throws Error(NotAcmConsistent) otherwise or when a
/// width is negative. codim defaults to max(1, l_1).
CharSeq charseq_from_phi(const HilbertFn& fn, std::optional<int> codim = std::nullopt);

enum class CheckStatus { Passed, Failed, Flagged };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  /// No check failed (flags are allowed).
  bool ok() const;
  bool degenerate() const;
  const Check* find(std::string_view name) const;
};

/// Runs every structural constraint on an absolute sequence independently:
/// m_0 = 0, monotonicity, l_0 = 1, l_1 = p (flagged as degenerate when
/// l_1 < p), connexity of the width support, 0-sequence growth of the widths
/// and, for projective dimension >= 1, l_i = 1 and l_{i+1} != 0 => l_{i+1} >= p.
ValidationReport validate_abs(const CharSeq& seq);

/// m_{d-1} <= floor((2d-1)/3). Requires projective dim >= 1 and codim >= 2.
bool bound_codim2(const CharSeq& seq);

/// r + floor((2d-2r-1)/3) for a point group of degree d with at most r
/// aligned points; 1 <= r <= d.
int aligned_bound(int d, int r);

/// e(X) = m_{d-1} - 2 for a non-empty point group.
int separation_index(const CharSeq& seq);

/// Exponent sums of the monomial box [0,d_1) x ... x [0,d_p), sorted.
CharSeq ci_charseq(std::span<const int> degrees, int cone_dim);

bool is_gorenstein_symmetric(const CharSeq& seq);

/// Width-wise inclusion l'_j <= l_j. Both sequences must share cone_dim.
bool seq_included(const CharSeq& sub, const CharSeq& super);

/// min{j : l_j < C(p-1+j, j)}, the least degree of a hypersurface through X.
int min_hypersurface_degree(const CharSeq& seq);

}  // namespace charseq
