#pragma once

// Macaulay binomial representations and the 0-sequence growth test.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace charseq {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// One summand C(top, bottom) of a Macaulay representation.
struct MacaulayTerm {
  std::int64_t top = 0;
  std::int64_t bottom = 0;
  friend bool operator==(const MacaulayTerm&, const MacaulayTerm&) = default;
};

/// c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_delta, delta) with
/// k_d > k_{d-1} > ... > k_delta >= delta > 0. Terms are stored from index d
/// downwards.
struct MacaulayRep {
  BigInt value;
  std::int64_t index = 0;
  std::vector<MacaulayTerm> terms;

  BigInt sum() const;
  /// Strict decrease of tops and bottoms, and top >= bottom >= 1.
  bool well_formed() const;
};

/// Greedy d-th representation of c. Throws Error(Domain) unless c >= 1, d >= 1.
MacaulayRep macaulay_rep(const BigInt& c, std::int64_t d);

/// c^<d>: every term C(k_j, j) of the representation shifted to C(k_j+1, j+1).
BigInt macaulay_next(const BigInt& c, std::int64_t d);

struct ZeroSequenceOptions {
  /// At degree 0 require a_0 <= 1 (the Hilbert function of a cone is 1 there).
  bool unit_at_degree_zero = true;
};

struct ZeroSequenceResult {
  bool ok = true;
  /// Position in the input of the first entry breaking the growth bound.
  std::optional<std::size_t> first_violation;
};

/// Macaulay growth check a_{l+1} <= a_l^<l>, where a[0] sits at start_degree.
/// Steps leaving a degree l <= 0 carry no bound except that zeros persist.
/// Throws Error(Domain) on an empty list or a negative entry.
ZeroSequenceResult is_zero_sequence(std::span<const std::int64_t> a, int start_degree,
                                    ZeroSequenceOptions options = {});

}  // namespace charseq
