#include "charseq/realize.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "charseq/error.hpp"

namespace charseq {

bool is_admissible(std::span<const int> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < static_cast<int>(i)) return false;
    if (i + 1 < seq.size() && (seq[i + 1] < seq[i] || seq[i + 1] > seq[i] + 1)) return false;
  }
  return true;
}

std::int64_t CaseDiagram::degree() const { return rel_degree(rel); }

int CaseDiagram::height() const {
  return rel.entries.empty() ? 0 : *std::max_element(rel.entries.begin(), rel.entries.end());
}

std::string CaseDiagram::render() const {
  std::ostringstream os;
  const int h = height();
  const int label = static_cast<int>(std::to_string(std::max(h, 1)).size());
  for (int level = h; level >= 1; --level) {
    std::string num = std::to_string(level);
    os << std::string(static_cast<std::size_t>(label) - num.size(), ' ') << num << ' ';
    for (std::size_t i = 0; i < rel.entries.size(); ++i) {
      char c = '.';
      if (level <= rel.ambient.entries[i])
        c = 'o';
      else if (level <= rel.entries[i])
        c = '#';
      os << c;
    }
    os << '\n';
  }
  return os.str();
}

RelCharSeq add_case(const RelCharSeq& seq, int level) {
  check_rel(seq);
  const auto& n = seq.entries;
  std::ptrdiff_t at = -1;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == level - 1) at = static_cast<std::ptrdiff_t>(i);
  if (at < 0)
    fail(ErrorKind::InadmissibleAddition, "no entry equals level - 1 = " + std::to_string(level - 1));
  RelCharSeq out = seq;
  ++out.entries[static_cast<std::size_t>(at)];
  const auto& e = out.entries;
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i + 1] > e[i] + 1)
      fail(ErrorKind::InadmissibleAddition,
           "adding at level " + std::to_string(level) + " opens a gap after index " + std::to_string(i));
  return out;
}

AdditionPlan addition_plan(std::span<const int> target) {
  require(is_admissible(target), ErrorKind::InadmissibleTarget, "target is not admissible");
  std::vector<int> seq(target.begin(), target.end());
  AdditionPlan plan;
  while (true) {
    std::size_t j = 0;
    while (j + 1 < seq.size() && seq[j + 1] != seq[j]) ++j;
    if (j + 1 >= seq.size()) break;
    plan.levels.push_back(seq[j]);
    --seq[j];
  }
  plan.base = seq.empty() ? 0 : seq.front();
  std::reverse(plan.levels.begin(), plan.levels.end());
  return plan;
}

std::vector<ProjPoint> scan_candidates(const PlaneCurve& x, const std::vector<ProjPoint>* supplied) {
  if (supplied != nullptr) {
    std::vector<ProjPoint> out;
    for (const auto& q : *supplied)
      if (on_curve(x, q)) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (x.field.modulus() <= 101) return rational_points(x);
  fail(ErrorKind::ScanInfeasible, "p = " + std::to_string(x.field.modulus()) +
                                      " is too large for an exhaustive scan; supply candidate points");
}

std::vector<ProjPoint> filtration_points(const PlaneCurve& x, const PointGroup& y, int t,
                                         const std::vector<ProjPoint>* candidates) {
  require(x.field == y.field, ErrorKind::Domain, "curve and points live over different fields");
  check_distinct(y);
  for (const auto& q : y.points) require(on_curve(x, q), ErrorKind::Domain, "point is not on the curve");
  std::vector<ProjPoint> cands = scan_candidates(x, candidates);
  cands.insert(cands.end(), y.points.begin(), y.points.end());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  if (t < 0) return cands;
  if (y.points.empty()) return {};
  RowSpace span(x.field, monomial_count(t));
  for (const auto& q : y.points) span.insert(evaluation_row(x.field, q, t));
  if (span.dim() == monomial_count(t)) return cands;
  std::vector<ProjPoint> out;
  for (const auto& q : cands)
    if (y.contains(q) || span.contains(evaluation_row(x.field, q, t))) out.push_back(q);
  return out;
}

std::vector<ProjPoint> addition_witnesses(const PlaneCurve& x, const PointGroup& y, int level,
                                          const std::vector<ProjPoint>* candidates) {
  const auto wide = filtration_points(x, y, level - 2, candidates);
  const auto narrow = filtration_points(x, y, level - 1, candidates);
  std::vector<ProjPoint> out;
  std::set_difference(wide.begin(), wide.end(), narrow.begin(), narrow.end(), std::back_inserter(out));
  std::erase_if(out, [&](const ProjPoint& q) { return y.contains(q); });
  return out;
}

std::optional<ProjPoint> can_add_at_level(const PlaneCurve& x, const PointGroup& y, int level,
                                          const std::vector<ProjPoint>* candidates) {
  const auto w = addition_witnesses(x, y, level, candidates);
  if (w.empty()) return std::nullopt;
  return w.front();
}

namespace {

struct Search {
  const PlaneCurve& x;
  const std::vector<int>& target;
  const std::vector<int>& levels;
  const std::vector<ProjPoint>* candidates;
  std::mt19937_64& rng;
  int branch;
  int nodes_left;

  bool run(PointGroup& y, std::size_t step) {
    if (step == levels.size()) return measure_rcs(x, y).entries == target;
    if (--nodes_left < 0) return false;
    auto w = addition_witnesses(x, y, levels[step], candidates);
    std::erase_if(w, [&](const ProjPoint& q) { return is_singular_point(x, q); });
    seeded_shuffle(w, rng);
    const std::size_t tries = std::min<std::size_t>(w.size(), static_cast<std::size_t>(branch));
    for (std::size_t i = 0; i < tries; ++i) {
      y.points.push_back(w[i]);
      if (run(y, step + 1)) return true;
      y.points.pop_back();
    }
    return false;
  }
};

}  // namespace

PointGroup realize(const PlaneCurve& x, std::span<const int> target, std::uint64_t seed,
                   const RealizeOptions& options) {
  const int d = x.degree();
  if (static_cast<int>(target.size()) != d || !is_admissible(target))
    fail(ErrorKind::InadmissibleTarget, "target must be an admissible sequence of length " + std::to_string(d));
  const AdditionPlan plan = addition_plan(target);
  const std::vector<int> goal(target.begin(), target.end());
  std::mt19937_64 rng(seed);
  std::vector<ProjPoint> exhaustive;
  const bool small = x.field.modulus() <= 101;
  if (small) exhaustive = rational_points(x);

  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    PointGroup y{x.field, {}};
    if (plan.base > 0) {
      try {
        y.points = transverse_section(x, plan.base, rng).points;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NonTransverse) throw;
        continue;
      }
    }
    std::vector<ProjPoint> pool;
    if (small) {
      pool = exhaustive;
    } else {
      pool = sample_curve_points(x, options.pool_size, rng);
      pool.insert(pool.end(), y.points.begin(), y.points.end());
    }
    Search search{x, goal, plan.levels, &pool, rng, options.branch, 2000};
    if (search.run(y, 0)) {
      std::sort(y.points.begin(), y.points.end());
      return y;
    }
  }
  fail(ErrorKind::SearchExhausted, "no realization found after " + std::to_string(options.attempts) +
                                       " attempts; try another seed or a larger modulus");
}

PointGroup structured_points(const PlaneCurve& x, std::size_t count, int max_section,
                             std::mt19937_64& rng) {
  PointGroup y{x.field, {}};
  std::set<ProjPoint> seen;
  int stalls = 0;
  while (y.size() < count) {
    require(++stalls < 100000, ErrorKind::InsufficientPoints, "could not assemble a point group");
    std::vector<ProjPoint> block;
    switch (uniform_below(rng, 3)) {
      case 0:
        block.push_back(random_curve_point(x, rng));
        break;
      case 1:
        for (int attempt = 0; attempt < 64 && block.empty(); ++attempt) {
          const ProjPoint a = random_curve_point(x, rng);
          const ProjPoint b = random_curve_point(x, rng);
          if (a == b) continue;
          if (auto pts = split_line_section(x, a, b)) block = *pts;
        }
        break;
      default: {
        const int t = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::max(1, max_section))));
        try {
          block = transverse_section(x, t, rng).points;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::NonTransverse) throw;
        }
        break;
      }
    }
    std::erase_if(block, [&](const ProjPoint& q) { return seen.count(q) > 0 || is_singular_point(x, q); });
    if (block.empty()) continue;
    seeded_shuffle(block, rng);
    const std::size_t room = std::min(block.size(), count - y.size());
    const std::size_t take = 1 + static_cast<std::size_t>(uniform_below(rng, room));
    for (std::size_t i = 0; i < take; ++i) {
      seen.insert(block[i]);
      y.points.push_back(block[i]);
    }
  }
  return y;
}

ConjectureReport conjecture_scan(const PlaneCurve& x, int s, int trials, std::uint64_t seed) {
  require(s >= 1 && trials >= 0, ErrorKind::Domain, "need s >= 1 and trials >= 0");
  ConjectureReport report;
  report.d = x.degree();
  report.s = s;
  report.trials = trials;
  const std::int64_t alpha = static_cast<std::int64_t>(s) * report.d;
  const RelCharSeq delta = minimal_delta_seq(report.d, alpha);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const PointGroup y = structured_points(x, static_cast<std::size_t>(alpha), s, rng);
    ConjectureTrial rec;
    rec.rel = measure_rcs(x, y).entries;
    const int last = report.d + static_cast<int>(alpha) + 2;
    rec.phi_y = hilbert_function_points(y, last);
    int first_diff = -1, last_diff = -1, diffs = 0;
    for (int l = 0; l <= last; ++l) {
      const std::int64_t pd = phi_rel(delta, l);
      rec.phi_section.push_back(pd);
      const std::int64_t py = rec.phi_y[static_cast<std::size_t>(l)];
      if (py < pd) rec.dominated = false;
      if (py != pd) {
        if (first_diff < 0) first_diff = l;
        last_diff = l;
        ++diffs;
      }
    }
    rec.connex = diffs == 0 || diffs == last_diff - first_diff + 1;
    if (!rec.dominated || !rec.connex) ++report.violations;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace charseq
