#include "charseq/seqcalc.hpp"

#include <algorithm>
#include <sstream>

#include "charseq/error.hpp"
#include "charseq/macaulay.hpp"

namespace charseq {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t binom64(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // result * (n-k+i) / i stays integral at every step.
    std::int64_t num;
    if (__builtin_mul_overflow(result, n - k + i, &num))
      throw std::overflow_error("binomial overflow");
    result = num / i;
  }
  return result;
}

std::vector<std::int64_t> widths_of(std::span<const int> entries) {
  if (entries.empty()) return {};
  int top = *std::max_element(entries.begin(), entries.end());
  std::vector<std::int64_t> w(static_cast<std::size_t>(std::max(top, 0)) + 1, 0);
  for (int e : entries)
    if (e >= 0) ++w[static_cast<std::size_t>(e)];
  return w;
}

std::vector<int> entries_from_widths(std::span<const std::int64_t> widths) {
  std::vector<int> out;
  for (std::size_t j = 0; j < widths.size(); ++j)
    for (std::int64_t k = 0; k < widths[j]; ++k) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<std::int64_t> CharSeq::widths() const { return widths_of(entries); }

std::int64_t phi_from_charseq(const CharSeq& seq, int l) {
  const int m = seq.cone_dim - 1;
  std::int64_t total = 0;
  for (int mi : seq.entries) {
    if (l < mi) continue;
    if (m < 0) {
      // Zero-dimensional cone: A_X is finite dimensional, one basis vector per entry.
      if (l == mi) ++total;
      continue;
    }
    total += binom64(m + l - mi, m);
  }
  return total;
}

HilbertFn hilbert_fn(const CharSeq& seq, int length) {
  HilbertFn fn;
  fn.cone_dim = seq.cone_dim;
  fn.canonical = seq;
  for (int l = 0; l < length; ++l) fn.values.push_back(phi_from_charseq(seq, l));
  return fn;
}

CharSeq charseq_from_phi(const HilbertFn& fn, std::optional<int> codim) {
  require(fn.cone_dim >= 0, ErrorKind::Domain, "cone_dim must be >= 0");
  // Delta^{cone_dim} with phi(l) = 0 for l < 0.
  std::vector<std::int64_t> diff = fn.values;
  for (int k = 0; k < fn.cone_dim; ++k) {
    std::int64_t prev = 0;
    for (auto& v : diff) {
      std::int64_t cur = v;
      v = cur - prev;
      prev = cur;
    }
  }
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] < 0) {
      std::ostringstream os;
      os << "negative width " << diff[i] << " at degree " << i;
      fail(ErrorKind::NotAcmConsistent, os.str());
    }
  }
  std::ptrdiff_t last_nonzero = -1;
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (diff[i] != 0) last_nonzero = static_cast<std::ptrdiff_t>(i);
  if (static_cast<std::ptrdiff_t>(diff.size()) < last_nonzero + 3)
    fail(ErrorKind::NotAcmConsistent,
         "Hilbert function prefix too short to witness stabilization");

  diff.resize(static_cast<std::size_t>(last_nonzero + 1));
  CharSeq seq;
  seq.entries = entries_from_widths(diff);
  seq.cone_dim = fn.cone_dim;
  seq.codim = codim.value_or(std::max<int>(1, diff.size() > 1 ? static_cast<int>(diff[1]) : 1));
  return seq;
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Failed; });
}

bool ValidationReport::degenerate() const {
  const Check* c = find("l1_equals_codim");
  return c != nullptr && c->status == CheckStatus::Flagged;
}

const Check* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed ? CheckStatus::Passed : CheckStatus::Failed, std::move(detail)};
}

}  // namespace

ValidationReport validate_abs(const CharSeq& seq) {
  ValidationReport report;
  const auto& e = seq.entries;
  const auto w = seq.widths();
  auto width = [&](std::size_t j) -> std::int64_t { return j < w.size() ? w[j] : 0; };

  report.checks.push_back(make_check("m0_zero", !e.empty() && e.front() == 0));

  bool sorted = std::is_sorted(e.begin(), e.end()) &&
                std::all_of(e.begin(), e.end(), [](int v) { return v >= 0; });
  report.checks.push_back(make_check("non_decreasing", sorted));

  report.checks.push_back(
      make_check("l0_one", width(0) == 1, "l_0 = " + std::to_string(width(0))));

  {
    Check c{"l1_equals_codim", CheckStatus::Passed,
            "l_1 = " + std::to_string(width(1)) + ", p = " + std::to_string(seq.codim)};
    if (width(1) < seq.codim) {
      c.status = CheckStatus::Flagged;
      c.detail += " (degenerate)";
    } else if (width(1) > seq.codim) {
      c.status = CheckStatus::Failed;
    }
    report.checks.push_back(c);
  }

  {
    bool connex = true;
    std::size_t at = 0;
    bool seen_zero = false;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0) {
        seen_zero = true;
      } else if (seen_zero) {
        connex = false;
        at = j;
        break;
      }
    }
    report.checks.push_back(
        make_check("connex", connex, connex ? "" : "width resumes at " + std::to_string(at)));
  }

  if (!w.empty() && sorted) {
    auto zs = is_zero_sequence(w, 0);
    report.checks.push_back(make_check(
        "zero_sequence", zs.ok,
        zs.ok ? "" : "growth bound broken at index " + std::to_string(*zs.first_violation)));
  } else {
    report.checks.push_back(make_check("zero_sequence", false, "no widths"));
  }

  if (seq.projective_dim() >= 1) {
    bool ok = true;
    std::string detail;
    for (std::size_t i = 1; i + 1 < w.size() + 1; ++i) {
      if (width(i) == 1 && width(i + 1) != 0 && width(i + 1) < seq.codim) {
        ok = false;
        detail = "l_" + std::to_string(i) + " = 1 but l_" + std::to_string(i + 1) + " = " +
                 std::to_string(width(i + 1)) + " < p";
        break;
      }
    }
    report.checks.push_back(make_check("unit_width_growth", ok, detail));
  }
  return report;
}

bool bound_codim2(const CharSeq& seq) {
  require(seq.projective_dim() >= 1 && seq.codim >= 2, ErrorKind::Domain,
          "bound_codim2 needs projective dimension >= 1 and codimension >= 2");
  require(!seq.entries.empty(), ErrorKind::Domain, "bound_codim2 needs a non-empty sequence");
  const auto d = static_cast<std::int64_t>(seq.degree());
  return seq.entries.back() <= floor_div(2 * d - 1, 3);
}

int aligned_bound(int d, int r) {
  require(r >= 1 && r <= d, ErrorKind::Domain, "aligned_bound needs 1 <= r <= d");
  return r + static_cast<int>(floor_div(2LL * d - 2LL * r - 1, 3));
}

int separation_index(const CharSeq& seq) {
  require(seq.cone_dim == 1, ErrorKind::Domain, "separation_index needs a point group (cone_dim 1)");
  require(!seq.entries.empty(), ErrorKind::Domain, "separation_index needs a non-empty group");
  return seq.entries.back() - 2;
}

CharSeq ci_charseq(std::span<const int> degrees, int cone_dim) {
  require(!degrees.empty(), ErrorKind::Domain, "ci_charseq needs at least one degree");
  std::vector<int> sums{0};
  for (int dj : degrees) {
    require(dj >= 1, ErrorKind::Domain, "complete intersection degrees must be >= 1");
    std::vector<int> next;
    next.reserve(sums.size() * static_cast<std::size_t>(dj));
    for (int s : sums)
      for (int i = 0; i < dj; ++i) next.push_back(s + i);
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  return {std::move(sums), cone_dim, static_cast<int>(degrees.size())};
}

bool is_gorenstein_symmetric(const CharSeq& seq) {
  const auto& e = seq.entries;
  if (e.empty()) return true;
  const std::size_t d = e.size();
  for (std::size_t i = 0; i < d; ++i)
    if (e[i] + e[d - 1 - i] != e[d - 1]) return false;
  return true;
}

bool seq_included(const CharSeq& sub, const CharSeq& super) {
  require(sub.cone_dim == super.cone_dim, ErrorKind::Domain,
          "seq_included compares sequences of equal cone dimension");
  const auto a = sub.widths();
  const auto b = super.widths();
  for (std::size_t j = 0; j < a.size(); ++j) {
    std::int64_t bj = j < b.size() ? b[j] : 0;
    if (a[j] > bj) return false;
  }
  return true;
}

int min_hypersurface_degree(const CharSeq& seq) {
  const auto w = seq.widths();
  for (int j = 0;; ++j) {
    std::int64_t lj = static_cast<std::size_t>(j) < w.size() ? w[static_cast<std::size_t>(j)] : 0;
    if (lj < binom64(seq.codim - 1 + j, j)) return j;
  }
}

}  // namespace charseq
