#include "charseq/liaison.hpp"

#include <algorithm>

#include "charseq/error.hpp"
#include "charseq/macaulay.hpp"

namespace charseq {

CharSeq plane_curve_charseq(int d) {
  require(d >= 1, ErrorKind::Domain, "plane curve degree must be >= 1");
  CharSeq seq;
  for (int i = 0; i < d; ++i) seq.entries.push_back(i);
  seq.cone_dim = 2;
  seq.codim = 1;
  return seq;
}

void check_rel(const RelCharSeq& rel) {
  const auto& n = rel.entries;
  const auto& m = rel.ambient.entries;
  require(n.size() == m.size(), ErrorKind::Domain,
          "relative sequence and ambient must have the same length");
  require(std::is_sorted(n.begin(), n.end()), ErrorKind::Domain,
          "relative sequence must be non-decreasing");
  for (std::size_t i = 0; i < n.size(); ++i)
    require(n[i] >= m[i], ErrorKind::Domain,
            "n_" + std::to_string(i) + " = " + std::to_string(n[i]) + " is below m_" +
                std::to_string(i) + " = " + std::to_string(m[i]));
}

std::int64_t rel_degree(const RelCharSeq& rel) {
  check_rel(rel);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < rel.entries.size(); ++i)
    total += rel.entries[i] - rel.ambient.entries[i];
  return total;
}

CharSeq abs_from_rel(const RelCharSeq& rel) {
  check_rel(rel);
  CharSeq out;
  for (std::size_t i = 0; i < rel.entries.size(); ++i)
    for (int v = rel.ambient.entries[i]; v < rel.entries[i]; ++v) out.entries.push_back(v);
  std::sort(out.entries.begin(), out.entries.end());
  out.cone_dim = std::max(0, rel.ambient.cone_dim - 1);
  out.codim = rel.ambient.codim + 1;
  return out;
}

RelCharSeq rel_from_abs(const CharSeq& ambient, const CharSeq& absY) {
  const auto& m = ambient.entries;
  require(std::is_sorted(m.begin(), m.end()), ErrorKind::Domain,
          "ambient sequence must be non-decreasing");
  const std::size_t d = m.size();
  RelCharSeq rel;
  rel.ambient = ambient;
  if (absY.entries.empty()) {
    rel.entries = m;
    return rel;
  }
  const auto lw = absY.widths();
  if (std::any_of(absY.entries.begin(), absY.entries.end(), [](int v) { return v < 0; }))
    fail(ErrorKind::InconsistentPair, "absolute sequence has negative entries");
  if (!is_zero_sequence(lw, 0).ok)
    fail(ErrorKind::InconsistentPair, "widths of the absolute sequence are not a 0-sequence");

  const int top = std::max(m.empty() ? 0 : m.back(), static_cast<int>(lw.size()) - 1) + 1;
  // d_i = #{j : n_j <= i}; n_j is the first i with d_i > j.
  std::size_t next = 0;
  std::int64_t prev_d = 0;
  for (int i = 0; i <= top; ++i) {
    const auto c = static_cast<std::int64_t>(std::upper_bound(m.begin(), m.end(), i) - m.begin());
    const std::int64_t l = static_cast<std::size_t>(i) < lw.size() ? lw[static_cast<std::size_t>(i)] : 0;
    const std::int64_t di = c - l;
    if (di < prev_d || di < 0 || di > static_cast<std::int64_t>(d))
      fail(ErrorKind::InconsistentPair, "no relative sequence reproduces the widths at degree " +
                                            std::to_string(i));
    while (static_cast<std::int64_t>(next) < di) {
      rel.entries.push_back(i);
      ++next;
    }
    prev_d = di;
  }
  if (rel.entries.size() != d)
    fail(ErrorKind::InconsistentPair, "absolute sequence does not fit inside the ambient");
  for (std::size_t i = 0; i < d; ++i)
    if (rel.entries[i] < m[i]) fail(ErrorKind::InconsistentPair, "reconstructed n_i falls below m_i");
  if (abs_from_rel(rel).entries != absY.entries)
    fail(ErrorKind::InconsistentPair, "absolute sequence is not an interval union over the ambient");
  return rel;
}

RelCharSeq link(const RelCharSeq& rel, int s) {
  check_rel(rel);
  require(s >= 1, ErrorKind::Domain, "liaison degree must be >= 1");
  require(is_gorenstein_symmetric(rel.ambient), ErrorKind::Domain,
          "liaison needs a Gorenstein-symmetric ambient");
  const auto& n = rel.entries;
  const auto& m = rel.ambient.entries;
  const std::size_t d = n.size();
  RelCharSeq out;
  out.ambient = rel.ambient;
  if (d == 0) return out;
  for (std::size_t i = 0; i < d; ++i) {
    int v = m[d - 1] + s - n[d - 1 - i];
    if (v < m[i])
      fail(ErrorKind::InvalidLiaisonDegree,
           "n'_" + std::to_string(i) + " = " + std::to_string(v) + " < m_" + std::to_string(i) +
               "; no residual in a section of degree " + std::to_string(s));
    out.entries.push_back(v);
  }
  return out;
}

RelCharSeq add_section(const RelCharSeq& rel, int s) {
  check_rel(rel);
  require(s >= 1, ErrorKind::Domain, "section degree must be >= 1");
  RelCharSeq out = rel;
  for (int& v : out.entries) v += s;
  return out;
}

std::string_view to_string(SplitPartStatus status) {
  switch (status) {
    case SplitPartStatus::Valid: return "valid";
    case SplitPartStatus::Empty: return "empty";
    case SplitPartStatus::BelowAmbient: return "below-ambient";
  }
  return "?";
}

namespace {

SplitPart make_part(std::vector<int> entries, const CharSeq& like) {
  SplitPart part;
  part.rel.ambient = plane_curve_charseq(static_cast<int>(entries.size()));
  part.rel.ambient.cone_dim = like.cone_dim;
  part.rel.ambient.codim = like.codim;
  part.rel.entries = std::move(entries);
  const auto& n = part.rel.entries;
  const auto& m = part.rel.ambient.entries;
  bool below = false;
  for (std::size_t i = 0; i < n.size(); ++i) below = below || n[i] < m[i];
  if (below)
    part.status = SplitPartStatus::BelowAmbient;
  else if (n == m)
    part.status = SplitPartStatus::Empty;
  return part;
}

}  // namespace

std::optional<GapSplit> split_on_gap(const RelCharSeq& rel) {
  check_rel(rel);
  const auto& n = rel.entries;
  const std::size_t d = n.size();
  for (std::size_t i = 1; i < d; ++i) {
    if (n[i] <= n[i - 1] + 1) continue;
    GapSplit split;
    split.gap_index = i;
    split.s = static_cast<int>(d - i);
    split.inner = make_part({n.begin() + static_cast<std::ptrdiff_t>(i), n.end()}, rel.ambient);
    std::vector<int> outer;
    for (std::size_t j = 0; j < i; ++j) outer.push_back(n[j] - split.s);
    split.outer = make_part(std::move(outer), rel.ambient);
    return split;
  }
  return std::nullopt;
}

RelCharSeq minimal_delta_seq(int d, std::int64_t alpha) {
  require(d >= 1, ErrorKind::Domain, "degree d must be >= 1");
  require(alpha >= 1, ErrorKind::Domain, "alpha must be >= 1");
  const std::int64_t s = (alpha + d - 1) / d;
  const std::int64_t r = s * d - alpha;
  RelCharSeq rel;
  rel.ambient = plane_curve_charseq(d);
  for (int i = 0; i < d; ++i) {
    std::int64_t v = s + i - (i >= d - r ? 1 : 0);
    rel.entries.push_back(static_cast<int>(v));
  }
  return rel;
}

std::int64_t phi_rel(const RelCharSeq& rel, int l) {
  return phi_from_charseq(abs_from_rel(rel), l);
}

std::int64_t genus_acm_curve(const CharSeq& section, std::int64_t alpha) {
  require(static_cast<std::int64_t>(section.degree()) == alpha, ErrorKind::Domain,
          "section sequence must have alpha entries");
  require(section.cone_dim == 1, ErrorKind::Domain, "section must be a point group (cone_dim 1)");
  if (section.entries.empty()) return 0;
  const int top = *std::max_element(section.entries.begin(), section.entries.end());
  std::int64_t total = 0;
  for (int l = 1; l <= top; ++l) total += alpha - phi_from_charseq(section, l);
  return total;
}

std::int64_t genus_acm_curve(const RelCharSeq& section, std::int64_t alpha) {
  return genus_acm_curve(abs_from_rel(section), alpha);
}

std::int64_t halphen_bound(std::int64_t alpha, int d) {
  require(d >= 1 && alpha >= 1, ErrorKind::Domain, "halphen_bound needs alpha >= 1 and d >= 1");
  const std::int64_t s = (alpha + d - 1) / d;
  const std::int64_t r = s * d - alpha;
  const std::int64_t twice = 2 + s * d * (s + d - 4) - r * (2 * s + 2 * d - r - 5);
  if (twice % 2 != 0)
    fail(ErrorKind::NonIntegralBound, "G(" + std::to_string(alpha) + ", " + std::to_string(d) +
                                          ") is not an integer");
  return twice / 2;
}

}  // namespace charseq
