#include "charseq/verify.hpp"

#include <functional>

#include "charseq/corpus.hpp"
#include "charseq/error.hpp"
#include "charseq/json_io.hpp"
#include "charseq/linsys.hpp"
#include "charseq/macaulay.hpp"
#include "charseq/realize.hpp"

namespace charseq {

namespace {

// Every non-decreasing sequence starting at 0 with d entries <= top.
void sequences(int d, int top, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cur{0};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == d) {
      visit(cur);
      return;
    }
    for (int v = cur.back(); v <= top; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  if (d >= 1) rec();
}

// Admissible plane sequences of length d with degree <= max_degree.
std::vector<std::vector<int>> admissible(int d, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int budget) {
    const int i = static_cast<int>(cur.size());
    if (i == d) {
      out.push_back(cur);
      return;
    }
    const int lo = i == 0 ? 0 : cur.back();
    const int hi = i == 0 ? max_degree : cur.back() + 1;
    for (int v = std::max(lo, i); v <= hi; ++v) {
      if (v - i > budget) break;
      cur.push_back(v);
      rec(budget - (v - i));
      cur.pop_back();
    }
  };
  rec(max_degree);
  return out;
}

std::string check_macaulay() {
  for (std::int64_t d = 1; d <= 8; ++d)
    for (std::int64_t c = 1; c <= 500; ++c) {
      const auto rep = macaulay_rep(c, d);
      if (rep.sum() != c || !rep.well_formed()) return "rep(" + std::to_string(c) + "," + std::to_string(d) + ")";
      if (c > 1 && macaulay_next(c, d) < macaulay_next(c - 1, d)) return "next not monotone";
    }
  return {};
}

std::string check_round_trip() {
  for (int cone = 0; cone <= 3; ++cone)
    for (int d = 1; d <= 6; ++d) {
      std::string err;
      sequences(d, 6, [&](const std::vector<int>& e) {
        if (!err.empty()) return;
        CharSeq seq{e, cone, 1};
        auto back = charseq_from_phi(hilbert_fn(seq, e.back() + 3), 1);
        if (back.entries != e) err = "(" + join(e) + ") cone_dim " + std::to_string(cone);
      });
      if (!err.empty()) return err;
    }
  return {};
}

std::string check_ci() {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = 1; c <= 3; ++c) {
        const std::vector<int> degs{a, b, c};
        if (!is_gorenstein_symmetric(ci_charseq(degs, 1))) return "ci(" + join(degs) + ")";
      }
  return {};
}

std::string check_liaison_calculus() {
  for (int d = 1; d <= 5; ++d)
    for (const auto& n : admissible(d, 8)) {
      const RelCharSeq rel{n, plane_curve_charseq(d)};
      if (rel_from_abs(rel.ambient, abs_from_rel(rel)) != rel) return "rel/abs (" + join(n) + ")";
      for (int s = 1; s <= 4; ++s) {
        RelCharSeq linked;
        try {
          linked = link(rel, s);
        } catch (const Error&) {
          continue;
        }
        if (link(linked, s) != rel) return "involution (" + join(n) + ")";
        if (rel_degree(rel) + rel_degree(linked) != static_cast<std::int64_t>(s) * d) return "box count";
      }
    }
  return {};
}

std::string check_halphen() {
  for (int d = 3; d <= 8; ++d)
    for (int alpha = d; alpha <= 4 * d; ++alpha)
      if (genus_acm_curve(minimal_delta_seq(d, alpha), alpha) != halphen_bound(alpha, d))
        return "G(" + std::to_string(alpha) + "," + std::to_string(d) + ")";
  return {};
}

std::string check_plane_groups(const PrimeField& k, std::mt19937_64& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto mix = static_cast<PlaneMix>(trial % 4);
    const auto y = random_plane_group(k, 1 + uniform_below(rng, 12), mix, rng);
    const auto report = validate_abs(measure_abs(y));
    if (!report.ok()) return "trial " + std::to_string(trial);
  }
  return {};
}

std::string check_curve_measures(const PrimeField& k, std::mt19937_64& rng) {
  const PlaneCurve x = fermat_curve(k, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto y = structured_points(x, 1 + uniform_below(rng, 10), 2, rng);
    const auto rel = measure_rcs(x, y);
    if (abs_from_rel(rel) != measure_abs(y)) return "abs/rel mismatch";
    const auto d = static_cast<std::int64_t>(rel.entries.size());
    for (std::int64_t i = 0; i < d; ++i) {
      if (rel.entries[i] < i) return "n_i < i";
      if (i + 1 < d && rel.entries[i + 1] > rel.entries[i] + 1) return "gap in irreducible ambient";
    }
    const auto delta = minimal_delta_seq(x.degree(), static_cast<std::int64_t>(y.size()));
    for (int l = 0; l < 12; ++l)
      if (phi_rel(rel, l) < phi_rel(delta, l)) return "phi below minimal sequence";
  }
  return {};
}

std::string check_sections(const PrimeField& k, std::mt19937_64& rng) {
  const PlaneCurve x = fermat_curve(k, 5);
  for (int s = 1; s <= 2; ++s) {
    const Section sec = transverse_section(x, s, rng);
    const PointGroup full{k, sec.points};
    const auto rel = measure_rcs(x, full);
    if (rel != add_section(RelCharSeq{plane_curve_charseq(5).entries, plane_curve_charseq(5)}, s))
      return "section sequence";
    if (dim_linear_system(x, full) != r_alpha(5, 5 * s)) return "section dimension";
    PointGroup y{k, {}}, rest{k, {}};
    for (std::size_t i = 0; i < full.size(); ++i) (i % 3 == 0 ? y : rest).points.push_back(full.points[i]);
    if (link(measure_rcs(x, y), s) != measure_rcs(x, rest)) return "liaison closure";
    const Section other = transverse_section(x, 1, rng, sec.points);
    PointGroup both = rest;
    both.points.insert(both.points.end(), other.points.begin(), other.points.end());
    if (measure_rcs(x, both) != add_section(measure_rcs(x, rest), 1)) return "section shift";
  }
  return {};
}

std::string check_realize(std::mt19937_64& rng) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 4);
  const auto targets = admissible(4, 5);
  for (std::size_t i = 0; i < targets.size(); i += 3) {
    const auto y = realize(x, targets[i], rng());
    if (measure_rcs(x, y).entries != targets[i]) return "(" + join(targets[i]) + ")";
  }
  return {};
}

std::string check_conjecture(const PrimeField& k, std::uint64_t seed) {
  const auto report = conjecture_scan(fermat_curve(k, 5), 2, 20, seed);
  if (report.violations != 0) return std::to_string(report.violations) + " violations";
  return {};
}

}  // namespace

std::vector<VerifyRow> run_invariant_corpus(std::uint32_t modulus, std::uint64_t seed) {
  const PrimeField k(modulus);
  std::mt19937_64 rng(seed);
  const std::vector<std::pair<std::string, std::function<std::string()>>> checks{
      {"macaulay-representation", [] { return check_macaulay(); }},
      {"hilbert-round-trip", [] { return check_round_trip(); }},
      {"ci-gorenstein-symmetry", [] { return check_ci(); }},
      {"liaison-calculus", [] { return check_liaison_calculus(); }},
      {"halphen-genus", [] { return check_halphen(); }},
      {"plane-group-widths", [&] { return check_plane_groups(k, rng); }},
      {"curve-measurements", [&] { return check_curve_measures(k, rng); }},
      {"sections-liaison-shift", [&] { return check_sections(k, rng); }},
      {"realization", [&] { return check_realize(rng); }},
      {"conjecture-scan", [&] { return check_conjecture(k, seed); }},
  };
  std::vector<VerifyRow> rows;
  for (const auto& [name, run] : checks) {
    VerifyRow row{name, false, {}};
    try {
      row.detail = run();
      row.passed = row.detail.empty();
    } catch (const Error& e) {
      row.detail = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace charseq
