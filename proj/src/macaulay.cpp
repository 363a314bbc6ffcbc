#include "charseq/macaulay.hpp"

#include <string>

#include "charseq/error.hpp"

namespace charseq {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt MacaulayRep::sum() const {
  BigInt total = 0;
  for (const auto& t : terms) total += binomial(t.top, t.bottom);
  return total;
}

bool MacaulayRep::well_formed() const {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.bottom < 1 || t.top < t.bottom) return false;
    if (t.bottom != index - static_cast<std::int64_t>(i)) return false;
    if (i > 0 && terms[i - 1].top <= t.top) return false;
  }
  return true;
}

namespace {

// Largest k >= j with C(k, j) <= c, for c >= 1.
std::int64_t largest_top(const BigInt& c, std::int64_t j) {
  std::int64_t lo = j;  // C(j, j) = 1 <= c
  std::int64_t step = 1;
  while (binomial(lo + step, j) <= c) {
    lo += step;
    step *= 2;
  }
  // Answer lies in [lo, lo + step).
  std::int64_t hi = lo + step;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (binomial(mid, j) <= c)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

MacaulayRep macaulay_rep(const BigInt& c, std::int64_t d) {
  require(c >= 1, ErrorKind::Domain, "macaulay_rep needs c >= 1");
  require(d >= 1, ErrorKind::Domain, "macaulay_rep needs d >= 1");
  MacaulayRep rep;
  rep.value = c;
  rep.index = d;
  BigInt rest = c;
  for (std::int64_t j = d; j >= 1 && rest > 0; --j) {
    std::int64_t k = largest_top(rest, j);
    rep.terms.push_back({k, j});
    rest -= binomial(k, j);
  }
  return rep;
}

BigInt macaulay_next(const BigInt& c, std::int64_t d) {
  BigInt result = 0;
  for (const auto& t : macaulay_rep(c, d).terms) result += binomial(t.top + 1, t.bottom + 1);
  return result;
}

ZeroSequenceResult is_zero_sequence(std::span<const std::int64_t> a, int start_degree,
                                    ZeroSequenceOptions options) {
  require(!a.empty(), ErrorKind::Domain, "is_zero_sequence needs a non-empty list");
  for (auto v : a) require(v >= 0, ErrorKind::Domain, "is_zero_sequence entries must be >= 0");

  if (options.unit_at_degree_zero && start_degree == 0 && a[0] > 1) return {false, 0};

  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const std::int64_t degree = start_degree + static_cast<std::int64_t>(i);
    if (a[i] == 0) {
      if (a[i + 1] != 0) return {false, i + 1};
      continue;
    }
    if (degree <= 0) continue;
    if (BigInt(a[i + 1]) > macaulay_next(a[i], degree)) return {false, i + 1};
  }
  return {};
}

}  // namespace charseq
