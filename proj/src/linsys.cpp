#include "charseq/linsys.hpp"

#include <algorithm>

#include "charseq/error.hpp"

namespace charseq {

AlphaSplit split_alpha(int d, std::int64_t alpha) {
  require(d >= 1 && alpha >= 1, ErrorKind::Domain, "need d >= 1 and alpha >= 1");
  AlphaSplit out;
  out.s = (alpha + d - 1) / d;
  out.r = out.s * d - alpha;
  return out;
}

std::int64_t r_alpha(int d, std::int64_t alpha) {
  const auto [s, r] = split_alpha(d, alpha);
  if (s >= d - 2) return alpha - static_cast<std::int64_t>(d - 1) * (d - 2) / 2;
  if (r <= s + 1) return s * (s + 3) / 2 - r;
  return (s - 1) * (s + 2) / 2;
}

std::string_view to_string(EqualPhiCase c) {
  switch (c) {
    case EqualPhiCase::Tail: return "tail";
    case EqualPhiCase::Head: return "head";
    case EqualPhiCase::Either: return "either";
  }
  return "?";
}

bool EqualPhiVerdict::holds() const {
  switch (predicted) {
    case EqualPhiCase::Tail: return tail_agrees;
    case EqualPhiCase::Head: return head_agrees;
    case EqualPhiCase::Either: return head_agrees || tail_agrees;
  }
  return false;
}

std::pair<int, int> equal_phi_range(int d, std::int64_t alpha) {
  const auto [s, r] = split_alpha(d, alpha);
  return {static_cast<int>(s), static_cast<int>(s + d - (r == 0 ? 3 : 4))};
}

namespace {

// Delta_t = s+t for t <= d-r-1 and s+t-1 afterwards.
bool head_matches(const std::vector<int>& n, std::int64_t s, std::int64_t r) {
  const auto d = static_cast<std::int64_t>(n.size());
  for (std::int64_t t = 0; t <= d - r - 1; ++t)
    if (n[static_cast<std::size_t>(t)] != s + t) return false;
  return true;
}

bool tail_matches(const std::vector<int>& n, std::int64_t s, std::int64_t r) {
  const auto d = static_cast<std::int64_t>(n.size());
  for (std::int64_t t = d - r; t < d; ++t)
    if (n[static_cast<std::size_t>(t)] != s + t - 1) return false;
  return true;
}

}  // namespace

EqualPhiVerdict classify_equal_phi(const RelCharSeq& rel_y, int d, std::int64_t alpha, int i) {
  require(rel_y.ambient == plane_curve_charseq(d), ErrorKind::Domain,
          "relative sequence must sit over a plane curve of degree d");
  require(rel_degree(rel_y) == alpha, ErrorKind::Domain, "relative sequence has degree != alpha");
  const auto [lo, hi] = equal_phi_range(d, alpha);
  require(i >= lo && i <= hi, ErrorKind::Domain,
          "i = " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  EqualPhiVerdict v;
  const auto [s, r] = split_alpha(d, alpha);
  v.s = s;
  v.r = r;
  v.i = i;
  v.delta = minimal_delta_seq(d, alpha);
  const std::int64_t phi_y = phi_rel(rel_y, i);
  const std::int64_t phi_d = phi_rel(v.delta, i);
  if (phi_y != phi_d)
    fail(ErrorKind::HypothesisFails, "phi_Y(" + std::to_string(i) + ") = " + std::to_string(phi_y) +
                                         " but phi_Delta(" + std::to_string(i) + ") = " +
                                         std::to_string(phi_d));
  if (i >= s + d - r - 1)
    v.predicted = EqualPhiCase::Tail;
  else if (i <= s + d - r - 3)
    v.predicted = EqualPhiCase::Head;
  else
    v.predicted = EqualPhiCase::Either;
  v.head_agrees = head_matches(rel_y.entries, s, r);
  v.tail_agrees = tail_matches(rel_y.entries, s, r);
  return v;
}

std::optional<std::vector<ProjPoint>> find_contained_section(const PlaneCurve& x, const PointGroup& y,
                                                             int k) {
  require(k >= 0 && k < x.degree(), ErrorKind::Domain, "section degree must lie in [0, d)");
  if (k == 0) return std::vector<ProjPoint>{};
  const PrimeField& f = x.field;
  const std::size_t need = static_cast<std::size_t>(k) * static_cast<std::size_t>(x.degree());
  const std::size_t n = y.size();
  const std::size_t m = monomial_count(k) - 1;
  if (n < need || n < m) return std::nullopt;

  std::vector<Row> rows;
  for (const auto& q : y.points) rows.push_back(evaluation_row(f, q, k));
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    Matrix sub;
    for (auto i : pick) sub.push_back(rows[i]);
    const auto ker = kernel(f, sub, monomial_count(k));
    if (ker.size() == 1) {
      std::vector<ProjPoint> on;
      for (std::size_t j = 0; j < n; ++j) {
        Elem acc = 0;
        for (std::size_t t = 0; t < rows[j].size(); ++t) acc = f.add(acc, f.mul(ker[0][t], rows[j][t]));
        if (acc == 0) on.push_back(y.points[j]);
      }
      if (on.size() == need) {
        std::sort(on.begin(), on.end());
        return on;
      }
    }
    // Next m-subset in lexicographic order.
    std::size_t pos = m;
    while (pos > 0 && pick[pos - 1] == n - m + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t j = pos; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

MaxSysVerdict classify_maximal(const PlaneCurve& x, const PointGroup& y, int search_max_degree) {
  require(!y.points.empty(), ErrorKind::Domain, "point group must be non-empty");
  MaxSysVerdict v;
  v.d = x.degree();
  v.alpha = static_cast<std::int64_t>(y.size());
  const auto [s, r] = split_alpha(v.d, v.alpha);
  v.s = s;
  v.r = r;
  v.dim = dim_linear_system(x, y);
  const std::int64_t bound = r_alpha(v.d, v.alpha);
  if (v.dim != bound)
    fail(ErrorKind::NotMaximal, "dim |Y| = " + std::to_string(v.dim) + " but r(alpha) = " +
                                    std::to_string(bound));
  if (s >= v.d - 2) {
    v.case_tag = kTagLarge;
    v.verified = true;
    return v;
  }
  v.rel = measure_rcs(x, y);
  const auto& n = v.rel->entries;
  auto& cert = v.certificate;
  cert.n0_equals_s = n.front() == s;
  cert.degree_s_form = phi_points(y, static_cast<int>(s)) < static_cast<std::int64_t>(monomial_count(static_cast<int>(s)));
  cert.head_agrees = head_matches(n, s, r);
  cert.tail_agrees = tail_matches(n, s, r);
  const bool residual_ok = cert.n0_equals_s && cert.degree_s_form && cert.head_agrees;
  bool contains_ok = cert.tail_agrees;
  if (r >= s + 1 && v.d <= search_max_degree) {
    cert.searched = true;
    cert.contained_section = find_contained_section(x, y, static_cast<int>(s - 1));
    if (r >= s + 2) contains_ok = contains_ok && cert.contained_section.has_value();
  }
  if (r <= s) {
    v.case_tag = kTagResidual;
    v.verified = residual_ok;
  } else if (r >= s + 2) {
    v.case_tag = kTagContains;
    v.verified = contains_ok;
  } else {
    v.case_tag = kTagEither;
    v.verified = residual_ok || contains_ok;
  }
  return v;
}

}  // namespace charseq
