#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "charseq/corpus.hpp"
#include "charseq/error.hpp"
#include "charseq/json_io.hpp"
#include "charseq/linsys.hpp"
#include "charseq/realize.hpp"
#include "charseq/verify.hpp"

namespace charseq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  // global
  std::uint32_t modulus = PrimeField::kDefaultModulus;
  std::uint64_t seed = 1;
  int max_scan = -1;
  std::string format = "json";

  // values shared by several subcommands
  std::string c, seq, rel, ambient, points, curve, section, target, out, candidates;
  std::string zero_seq, from_phi, aligned, included_in, degrees, from_abs, check, diagram;
  int d = 0, s = 0, i = 0, l = 0, t = 0, level = 0, length = 0, fermat = 0, trials = 100;
  int start_degree = 0, random_count = 0, phi_curve = 0, monomials = 0, phi_points = 0;
  int cone_dim = -1, codim = -1, add_case = 0;
  std::int64_t alpha = 0;
  bool next = false, raw = false, validate = false, bound_codim2 = false, separation = false;
  bool gorenstein = false, min_hypersurface = false, degree_flag = false, abs_flag = false;
  bool measure_abs = false, transverse = false;
  int phi = 0;
};

class Runner {
 public:
  Runner(CLI::App* sub, const Args& a, std::ostream& out, bool modulus_set)
      : sub_(sub), a_(a), out_(out), modulus_set_(modulus_set) {}

  bool has(const std::string& flag) const { return sub_->count(flag) > 0; }

  void need(std::initializer_list<const char*> flags) const {
    for (const char* f : flags)
      if (!has(f)) throw UsageError(std::string("missing ") + f);
  }

  std::vector<int> list(const std::string& flag, const std::string& text) const {
    try {
      return parse_int_list(text);
    } catch (const Error&) {
      throw UsageError(flag + " expects comma-separated integers");
    }
  }

  bool table() const { return a_.format == "table"; }

  void emit(const Json& j, const std::string& text) {
    if (table())
      out_ << text << '\n';
    else
      out_ << j.dump() << '\n';
  }

  CharSeq charseq_arg(int default_cone) const {
    need({"--seq"});
    CharSeq seq;
    seq.entries = list("--seq", a_.seq);
    seq.cone_dim = has("--cone-dim") ? a_.cone_dim : default_cone;
    seq.codim = has("--codim") ? a_.codim : 1;
    return seq;
  }

  CharSeq ambient_arg(std::size_t length) const {
    if (!has("--ambient")) return plane_curve_charseq(static_cast<int>(length));
    CharSeq amb;
    amb.entries = list("--ambient", a_.ambient);
    amb.cone_dim = has("--cone-dim") ? a_.cone_dim : 2;
    amb.codim = has("--codim") ? a_.codim : 1;
    return amb;
  }

  RelCharSeq rel_arg() const {
    need({"--rel"});
    RelCharSeq rel;
    rel.entries = list("--rel", a_.rel);
    if (rel.entries.empty()) throw UsageError("--rel must not be empty");
    rel.ambient = ambient_arg(rel.entries.size());
    return rel;
  }

  bool has_curve() const { return has("--curve") || has("--fermat"); }

  PlaneCurve curve_arg() const {
    if (has("--curve") && has("--fermat")) throw UsageError("give either --curve or --fermat");
    if (has("--fermat")) return fermat_curve(PrimeField(a_.modulus), a_.fermat);
    if (!has("--curve")) throw UsageError("missing --curve or --fermat");
    PlaneCurve x = load_curve(a_.curve);
    if (modulus_set_ && x.field.modulus() != a_.modulus)
      fail(ErrorKind::Domain, "curve file is over F_" + std::to_string(x.field.modulus()) +
                                  " but the modulus is " + std::to_string(a_.modulus));
    return x;
  }

  PointGroup points_arg() const {
    need({"--points"});
    return load_points(a_.points);
  }

  std::optional<int> window() const {
    if (a_.max_scan < 0) return std::nullopt;
    return a_.max_scan;
  }

  int modes(std::initializer_list<const char*> flags) const {
    int n = 0;
    for (const char* f : flags) n += has(f) ? 1 : 0;
    if (n > 1) throw UsageError("options are mutually exclusive");
    return n;
  }

  std::ostream& out() { return out_; }
  const Args& args() const { return a_; }

 private:
  CLI::App* sub_;
  const Args& a_;
  std::ostream& out_;
  bool modulus_set_;
};

std::string bool_text(bool v) { return v ? "true" : "false"; }

Json points_json(const std::vector<ProjPoint>& pts) {
  Json j = Json::array();
  for (const auto& q : pts) j.push_back(q.c);
  return j;
}

std::string points_text(const std::vector<ProjPoint>& pts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << '\n';
    os << pts[i].c[0] << ' ' << pts[i].c[1] << ' ' << pts[i].c[2];
  }
  return os.str();
}

void cmd_macaulay(Runner& r) {
  const Args& a = r.args();
  r.modes({"--next", "--zero-seq"});
  if (r.has("--zero-seq")) {
    std::vector<std::int64_t> v;
    try {
      v = parse_int64_list(a.zero_seq);
    } catch (const Error&) {
      throw UsageError("--zero-seq expects comma-separated integers");
    }
    const auto res = is_zero_sequence(v, a.start_degree, ZeroSequenceOptions{!a.raw});
    Json j{{"ok", res.ok}, {"first_violation", nullptr}};
    if (res.first_violation) j["first_violation"] = *res.first_violation;
    r.emit(j, res.ok ? "true" : "false at index " + std::to_string(*res.first_violation));
    return;
  }
  r.need({"--c", "--d"});
  BigInt c;
  try {
    c = BigInt(a.c);
  } catch (const std::exception&) {
    throw UsageError("--c expects an integer");
  }
  if (a.next) {
    const BigInt v = macaulay_next(c, a.d);
    r.emit(to_json(v), v.str());
    return;
  }
  const auto rep = macaulay_rep(c, a.d);
  std::string text;
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    if (i) text += " + ";
    text += "C(" + std::to_string(rep.terms[i].top) + "," + std::to_string(rep.terms[i].bottom) + ")";
  }
  r.emit(to_json(rep), text);
}

std::string report_text(const ValidationReport& report) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    const char* status = c.status == CheckStatus::Passed ? "passed"
                         : c.status == CheckStatus::Failed ? "failed"
                                                           : "flagged";
    if (i) os << '\n';
    os << std::left << std::setw(static_cast<int>(width) + 2) << c.name << status;
    if (!c.detail.empty()) os << "  " << c.detail;
  }
  return os.str();
}

void cmd_charseq(Runner& r) {
  const Args& a = r.args();
  r.modes({"--validate", "--phi", "--from-phi", "--bound-codim2", "--aligned", "--separation-index",
           "--gorenstein", "--included-in", "--min-hypersurface"});
  if (r.has("--aligned")) {
    const auto v = r.list("--aligned", a.aligned);
    if (v.size() != 2) throw UsageError("--aligned expects d,r");
    const int b = aligned_bound(v[0], v[1]);
    r.emit(Json(b), std::to_string(b));
    return;
  }
  if (r.has("--from-phi")) {
    HilbertFn fn;
    try {
      fn.values = parse_int64_list(a.from_phi);
    } catch (const Error&) {
      throw UsageError("--from-phi expects comma-separated integers");
    }
    fn.cone_dim = r.has("--cone-dim") ? a.cone_dim : 1;
    const CharSeq seq = charseq_from_phi(fn, r.has("--codim") ? std::optional<int>(a.codim) : std::nullopt);
    r.emit(to_json(seq), join(seq.entries));
    return;
  }
  const CharSeq seq = r.charseq_arg(1);
  if (r.has("--phi")) {
    if (r.has("--length")) {
      const HilbertFn fn = hilbert_fn(seq, a.length);
      r.emit(to_json(fn), join(fn.values));
    } else {
      const auto v = phi_from_charseq(seq, a.phi);
      r.emit(Json(v), std::to_string(v));
    }
  } else if (r.has("--bound-codim2")) {
    const bool v = bound_codim2(seq);
    r.emit(Json(v), bool_text(v));
  } else if (r.has("--separation-index")) {
    const int v = separation_index(seq);
    r.emit(Json(v), std::to_string(v));
  } else if (r.has("--gorenstein")) {
    const bool v = is_gorenstein_symmetric(seq);
    r.emit(Json(v), bool_text(v));
  } else if (r.has("--included-in")) {
    CharSeq super = seq;
    super.entries = r.list("--included-in", a.included_in);
    const bool v = seq_included(seq, super);
    r.emit(Json(v), bool_text(v));
  } else if (r.has("--min-hypersurface")) {
    const int v = min_hypersurface_degree(seq);
    r.emit(Json(v), std::to_string(v));
  } else {
    const auto report = validate_abs(seq);
    r.emit(to_json(report), report_text(report));
  }
}

void cmd_ci(Runner& r) {
  r.need({"--degrees"});
  const auto degs = r.list("--degrees", r.args().degrees);
  const CharSeq seq = ci_charseq(degs, r.has("--cone-dim") ? r.args().cone_dim : 1);
  r.emit(to_json(seq), join(seq.entries));
}

void cmd_rcs(Runner& r) {
  const Args& a = r.args();
  r.modes({"--monomials", "--phi-curve", "--phi-points", "--measure-abs", "--from-abs", "--degree", "--abs",
           "--phi"});
  if (r.has("--monomials")) {
    Json j = Json::array();
    std::string text;
    for (const auto& e : monomial_basis(a.monomials)) {
      j.push_back(e);
      if (!text.empty()) text += ' ';
      text += "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
    }
    r.emit(j, text);
    return;
  }
  if (r.has("--phi-curve")) {
    r.need({"--d"});
    const auto v = phi_plane_curve(a.d, a.phi_curve);
    r.emit(Json(v), std::to_string(v));
    return;
  }
  if (r.has("--phi-points")) {
    const auto v = phi_points(r.points_arg(), a.phi_points);
    r.emit(Json(v), std::to_string(v));
    return;
  }
  if (r.has("--measure-abs")) {
    const CharSeq seq = measure_abs(r.points_arg(), r.window());
    r.emit(to_json(seq), join(seq.entries));
    return;
  }
  if (r.has_curve()) {
    const RelCharSeq rel = measure_rcs(r.curve_arg(), r.points_arg(), r.window());
    r.emit(to_json(rel), join(rel.entries));
    return;
  }
  if (r.has("--from-abs")) {
    r.need({"--ambient"});
    CharSeq abs_y;
    abs_y.entries = r.list("--from-abs", a.from_abs);
    const CharSeq amb = r.ambient_arg(0);
    abs_y.cone_dim = std::max(0, amb.cone_dim - 1);
    abs_y.codim = amb.codim + 1;
    const RelCharSeq rel = rel_from_abs(amb, abs_y);
    r.emit(to_json(rel), join(rel.entries));
    return;
  }
  const RelCharSeq rel = r.rel_arg();
  if (r.has("--degree")) {
    const auto v = rel_degree(rel);
    r.emit(Json(v), std::to_string(v));
  } else if (r.has("--phi")) {
    const auto v = phi_rel(rel, a.phi);
    r.emit(Json(v), std::to_string(v));
  } else if (r.has("--abs")) {
    const CharSeq seq = abs_from_rel(rel);
    r.emit(to_json(seq), join(seq.entries));
  } else {
    throw UsageError("rcs needs one of --degree, --abs, --phi, --from-abs, --points, --monomials, --phi-curve");
  }
}

void cmd_link(Runner& r) {
  r.need({"--s"});
  const RelCharSeq out = link(r.rel_arg(), r.args().s);
  r.emit(to_json(out), join(out.entries));
}

void cmd_add_section(Runner& r) {
  const Args& a = r.args();
  if (r.has("--section")) {
    const PlaneCurve x = r.curve_arg();
    const PlaneCurve h = load_curve(a.section);
    if (!(h.field == x.field)) fail(ErrorKind::Domain, "section and curve live over different fields");
    const PointGroup pts = section_points(x, h.f, a.transverse);
    r.emit(to_json(pts), points_text(pts.points));
    return;
  }
  r.need({"--s"});
  const RelCharSeq out = add_section(r.rel_arg(), a.s);
  r.emit(to_json(out), join(out.entries));
}

void cmd_split(Runner& r) {
  const auto split = split_on_gap(r.rel_arg());
  if (!split) {
    r.emit(Json(nullptr), "no gap");
    return;
  }
  const std::string text = "gap at " + std::to_string(split->gap_index) + ", s = " + std::to_string(split->s) +
                           "\ninner " + join(split->inner.rel.entries) + " (" +
                           std::string(to_string(split->inner.status)) + ")\nouter " +
                           join(split->outer.rel.entries) + " (" + std::string(to_string(split->outer.status)) +
                           ")";
  r.emit(to_json(*split), text);
}

void cmd_minimal(Runner& r) {
  r.need({"--d", "--alpha"});
  const RelCharSeq rel = minimal_delta_seq(r.args().d, r.args().alpha);
  r.emit(to_json(rel), join(rel.entries));
}

void cmd_genus(Runner& r) {
  r.need({"--alpha"});
  std::int64_t g = 0;
  if (r.has("--section")) {
    CharSeq sec;
    sec.entries = r.list("--section", r.args().section);
    sec.cone_dim = 1;
    sec.codim = 2;
    g = genus_acm_curve(sec, r.args().alpha);
  } else {
    g = genus_acm_curve(r.rel_arg(), r.args().alpha);
  }
  r.emit(Json(g), std::to_string(g));
}

void cmd_halphen(Runner& r) {
  r.need({"--alpha", "--d"});
  const auto g = halphen_bound(r.args().alpha, r.args().d);
  r.emit(Json(g), std::to_string(g));
}

void cmd_dim(Runner& r) {
  if (r.has_curve()) {
    const auto v = dim_linear_system(r.curve_arg(), r.points_arg());
    r.emit(Json(v), std::to_string(v));
    return;
  }
  r.need({"--d", "--alpha"});
  const auto v = r_alpha(r.args().d, r.args().alpha);
  r.emit(Json(v), std::to_string(v));
}

void cmd_classify(Runner& r) {
  const Args& a = r.args();
  if (r.has_curve()) {
    const auto v = classify_maximal(r.curve_arg(), r.points_arg());
    std::string text = v.case_tag + " (alpha " + std::to_string(v.alpha) + ", s " + std::to_string(v.s) +
                       ", r " + std::to_string(v.r) + ", dim " + std::to_string(v.dim) + ", verified " +
                       bool_text(v.verified) + ")";
    r.emit(to_json(v), text);
    return;
  }
  r.need({"--i"});
  const RelCharSeq rel = r.rel_arg();
  const int d = r.has("--d") ? a.d : static_cast<int>(rel.entries.size());
  const std::int64_t alpha = r.has("--alpha") ? a.alpha : rel_degree(rel);
  const auto v = classify_equal_phi(rel, d, alpha, a.i);
  r.emit(to_json(v), std::string(to_string(v.predicted)) + " (head " + bool_text(v.head_agrees) + ", tail " +
                         bool_text(v.tail_agrees) + ", holds " + bool_text(v.holds()) + ")");
}

void write_out(const std::string& path, const PointGroup& y) {
  std::ofstream f(path);
  if (!f) fail(ErrorKind::Parse, "cannot write " + path);
  write_points(f, y);
}

void cmd_realize(Runner& r) {
  const Args& a = r.args();
  r.modes({"--check", "--add-case", "--random", "--target", "--diagram"});
  if (r.has("--check")) {
    const bool v = is_admissible(r.list("--check", a.check));
    r.emit(Json(v), bool_text(v));
    return;
  }
  if (r.has("--diagram")) {
    CaseDiagram diagram{RelCharSeq{r.list("--diagram", a.diagram), {}}};
    diagram.rel.ambient = plane_curve_charseq(static_cast<int>(diagram.rel.entries.size()));
    std::string text = diagram.render();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    r.emit(Json{{"rel", diagram.rel.entries}, {"degree", diagram.degree()}, {"rows", text}}, text);
    return;
  }
  if (r.has("--add-case")) {
    const RelCharSeq out = add_case(r.rel_arg(), a.add_case);
    r.emit(to_json(out), join(out.entries));
    return;
  }
  const PlaneCurve x = r.curve_arg();
  PointGroup y{x.field, {}};
  Json extra;
  if (r.has("--random")) {
    if (a.random_count < 0) throw UsageError("--random expects a non-negative count");
    y = random_points_on_curve(x, static_cast<std::size_t>(a.random_count), a.seed);
  } else if (r.has("--target")) {
    y = realize(x, r.list("--target", a.target), a.seed);
  } else {
    throw UsageError("realize needs one of --target, --random, --check, --add-case, --diagram");
  }
  if (r.has("--out")) write_out(a.out, y);
  Json j = to_json(y);
  if (r.has("--target")) j["rel"] = measure_rcs(x, y).entries;
  std::ostringstream text;
  write_points(text, y);
  std::string t = text.str();
  t.pop_back();
  r.emit(j, t);
}

void cmd_filtration(Runner& r) {
  const Args& a = r.args();
  if (r.modes({"--t", "--level"}) != 1) throw UsageError("filtration needs --t or --level");
  const PlaneCurve x = r.curve_arg();
  const PointGroup y = r.points_arg();
  std::vector<ProjPoint> cands;
  const std::vector<ProjPoint>* pool = nullptr;
  if (r.has("--candidates")) {
    cands = load_points(a.candidates).points;
    pool = &cands;
  }
  if (r.has("--t")) {
    const auto pts = filtration_points(x, y, a.t, pool);
    r.emit(Json{{"t", a.t}, {"points", points_json(pts)}}, points_text(pts));
    return;
  }
  const auto w = can_add_at_level(x, y, a.level, pool);
  if (!w) {
    r.emit(Json{{"level", a.level}, {"witness", nullptr}}, "none");
    return;
  }
  r.emit(Json{{"level", a.level}, {"witness", w->c}}, points_text({*w}));
}

void cmd_conjecture(Runner& r) {
  r.need({"--s"});
  const auto report = conjecture_scan(r.curve_arg(), r.args().s, r.args().trials, r.args().seed);
  r.emit(to_json(report), "trials " + std::to_string(report.trials) + ", violations " +
                              std::to_string(report.violations));
}

int cmd_verify(Runner& r) {
  const auto rows = run_invariant_corpus(r.args().modulus, r.args().seed);
  Json j = Json::array();
  std::ostringstream text;
  std::size_t width = 0;
  bool all = true;
  for (const auto& row : rows) width = std::max(width, row.name.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    all = all && row.passed;
    Json item{{"name", row.name}, {"passed", row.passed}};
    if (!row.detail.empty()) item["detail"] = row.detail;
    j.push_back(item);
    if (i) text << '\n';
    text << std::left << std::setw(static_cast<int>(width) + 2) << row.name << (row.passed ? "PASS" : "FAIL");
    if (!row.detail.empty()) text << "  " << row.detail;
  }
  r.emit(j, text.str());
  return all ? 0 : 1;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{
      "macaulay", "charseq", "ci",    "rcs",      "link",     "add-section",     "split",  "minimal",
      "genus",    "halphen", "dim",   "classify", "realize", "filtration", "conjecture-scan", "verify"};
  return names;
}

const std::vector<OperationRoute>& operation_routes() {
  static const std::vector<OperationRoute> routes{
      {"macaulay_rep", "macaulay", "--c --d"},
      {"macaulay_next", "macaulay", "--c --d --next"},
      {"is_zero_sequence", "macaulay", "--zero-seq"},
      {"phi_from_charseq", "charseq", "--seq --phi"},
      {"charseq_from_phi", "charseq", "--from-phi"},
      {"validate_abs", "charseq", "--seq [--validate]"},
      {"bound_codim2", "charseq", "--seq --bound-codim2"},
      {"aligned_bound", "charseq", "--aligned"},
      {"separation_index", "charseq", "--seq --separation-index"},
      {"is_gorenstein_symmetric", "charseq", "--seq --gorenstein"},
      {"seq_included", "charseq", "--seq --included-in"},
      {"min_hypersurface_degree", "charseq", "--seq --min-hypersurface"},
      {"ci_charseq", "ci", "--degrees"},
      {"rel_degree", "rcs", "--rel --degree"},
      {"abs_from_rel", "rcs", "--rel --abs"},
      {"rel_from_abs", "rcs", "--from-abs --ambient"},
      {"phi_rel", "rcs", "--rel --phi"},
      {"monomial_basis", "rcs", "--monomials"},
      {"phi_points", "rcs", "--points --phi-points"},
      {"phi_plane_curve", "rcs", "--phi-curve --d"},
      {"measure_rcs", "rcs", "--curve --points"},
      {"measure_abs", "rcs", "--points --measure-abs"},
      {"link", "link", "--rel --s"},
      {"add_section", "add-section", "--rel --s"},
      {"section_points", "add-section", "--curve --section"},
      {"split_on_gap", "split", "--rel"},
      {"minimal_delta_seq", "minimal", "--d --alpha"},
      {"genus_acm_curve", "genus", "--section --alpha"},
      {"halphen_bound", "halphen", "--alpha --d"},
      {"dim_linear_system", "dim", "--curve --points"},
      {"r_alpha", "dim", "--d --alpha"},
      {"classify_equal_phi", "classify", "--rel --i"},
      {"classify_maximal", "classify", "--curve --points"},
      {"is_admissible", "realize", "--check"},
      {"add_case", "realize", "--rel --add-case"},
      {"random_points_on_curve", "realize", "--curve --random"},
      {"realize", "realize", "--curve --target"},
      {"filtration_points", "filtration", "--curve --points --t"},
      {"can_add_at_level", "filtration", "--curve --points --level"},
      {"conjecture_scan", "conjecture-scan", "--curve --s"},
      {"run_invariant_corpus", "verify", ""},
  };
  return routes;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Characteristic sequences of ACM schemes and point groups on plane curves", "charseq"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--modulus", a.modulus, "prime modulus (env CHARSEQ_MODULUS overrides)");
  app.add_option("--seed", a.seed, "random seed");
  app.add_option("--max-degree-scan", a.max_scan, "degree window for sequence measurement");
  app.add_option("--format", a.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::map<std::string, CLI::App*> subs;
  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    subs[name] = s;
    return s;
  };
  auto rel_opts = [&](CLI::App* s) {
    s->add_option("--rel", a.rel, "relative sequence n_0,...,n_{d-1}");
    s->add_option("--ambient", a.ambient, "ambient sequence (default 0,1,...,d-1)");
    s->add_option("--cone-dim", a.cone_dim, "ambient cone dimension (default 2)");
    s->add_option("--codim", a.codim, "ambient codimension (default 1)");
  };
  auto curve_opts = [&](CLI::App* s) {
    s->add_option("--curve", a.curve, "curve file");
    s->add_option("--fermat", a.fermat, "use x^d + y^d + z^d over F_modulus");
  };

  CLI::App* s = sub("macaulay", "Macaulay representation, c^<d>, 0-sequence test");
  s->add_option("--c", a.c);
  s->add_option("--d", a.d);
  s->add_flag("--next", a.next, "print c^<d>");
  s->add_option("--zero-seq", a.zero_seq, "test a comma-separated sequence");
  s->add_option("--start-degree", a.start_degree);
  s->add_flag("--raw", a.raw, "no a_0 <= 1 condition at degree 0");

  s = sub("charseq", "absolute characteristic sequences");
  s->add_option("--seq", a.seq);
  s->add_option("--cone-dim", a.cone_dim);
  s->add_option("--codim", a.codim);
  s->add_flag("--validate", a.validate);
  s->add_option("--phi", a.phi, "phi(l)");
  s->add_option("--length", a.length, "with --phi: print phi(0..length-1)");
  s->add_option("--from-phi", a.from_phi, "Hilbert function prefix");
  s->add_flag("--bound-codim2", a.bound_codim2);
  s->add_option("--aligned", a.aligned, "d,r");
  s->add_flag("--separation-index", a.separation);
  s->add_flag("--gorenstein", a.gorenstein);
  s->add_option("--included-in", a.included_in);
  s->add_flag("--min-hypersurface", a.min_hypersurface);

  s = sub("ci", "complete intersection sequence");
  s->add_option("--degrees", a.degrees);
  s->add_option("--cone-dim", a.cone_dim);

  s = sub("rcs", "relative sequences and measurements");
  rel_opts(s);
  curve_opts(s);
  s->add_option("--points", a.points, "point file");
  s->add_flag("--degree", a.degree_flag);
  s->add_flag("--abs", a.abs_flag);
  s->add_option("--phi", a.phi);
  s->add_option("--from-abs", a.from_abs);
  s->add_option("--monomials", a.monomials);
  s->add_option("--phi-points", a.phi_points);
  s->add_option("--phi-curve", a.phi_curve);
  s->add_option("--d", a.d);
  s->add_flag("--measure-abs", a.measure_abs);

  s = sub("link", "liaison by a section of degree s");
  rel_opts(s);
  s->add_option("--s", a.s);

  s = sub("add-section", "add a section of degree s, or list section points");
  rel_opts(s);
  curve_opts(s);
  s->add_option("--s", a.s);
  s->add_option("--section", a.section, "curve file of the section");
  s->add_flag("--transverse", a.transverse);

  s = sub("split", "split along the first gap");
  rel_opts(s);

  s = sub("minimal", "minimal sequence of degree alpha");
  s->add_option("--d", a.d);
  s->add_option("--alpha", a.alpha);

  s = sub("genus", "arithmetic genus from a hyperplane section sequence");
  rel_opts(s);
  s->add_option("--section", a.section, "absolute sequence of the section");
  s->add_option("--alpha", a.alpha);

  s = sub("halphen", "Halphen bound G(alpha, d)");
  s->add_option("--alpha", a.alpha);
  s->add_option("--d", a.d);

  s = sub("dim", "dimension of |Y|, or r(alpha)");
  curve_opts(s);
  s->add_option("--points", a.points);
  s->add_option("--d", a.d);
  s->add_option("--alpha", a.alpha);

  s = sub("classify", "equality cases and maximal linear systems");
  rel_opts(s);
  curve_opts(s);
  s->add_option("--points", a.points);
  s->add_option("--i", a.i);
  s->add_option("--d", a.d);
  s->add_option("--alpha", a.alpha);

  s = sub("realize", "build point groups with a given sequence");
  rel_opts(s);
  curve_opts(s);
  s->add_option("--target", a.target);
  s->add_option("--out", a.out);
  s->add_option("--check", a.check);
  s->add_option("--add-case", a.add_case);
  s->add_option("--random", a.random_count);
  s->add_option("--diagram", a.diagram);

  s = sub("filtration", "filtration points and case additions");
  curve_opts(s);
  s->add_option("--points", a.points);
  s->add_option("--t", a.t);
  s->add_option("--level", a.level);
  s->add_option("--candidates", a.candidates, "point file of candidates");

  s = sub("conjecture-scan", "domination and connexity scan");
  curve_opts(s);
  s->add_option("--s", a.s);
  s->add_option("--trials", a.trials);

  sub("verify", "run the invariant corpus");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return 2;
  }

  bool modulus_set = app.count("--modulus") > 0;
  if (const char* env = std::getenv("CHARSEQ_MODULUS"); env != nullptr && *env != '\0') {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
      a.modulus = static_cast<std::uint32_t>(v);
      modulus_set = true;
    } catch (const std::exception&) {
      err << "usage error: CHARSEQ_MODULUS is not an integer\n";
      return 2;
    }
  }

  CLI::App* chosen = app.get_subcommands().front();
  Runner r(chosen, a, out, modulus_set);
  const std::string name = chosen->get_name();
  try {
    if (name == "macaulay") cmd_macaulay(r);
    else if (name == "charseq") cmd_charseq(r);
    else if (name == "ci") cmd_ci(r);
    else if (name == "rcs") cmd_rcs(r);
    else if (name == "link") cmd_link(r);
    else if (name == "add-section") cmd_add_section(r);
    else if (name == "split") cmd_split(r);
    else if (name == "minimal") cmd_minimal(r);
    else if (name == "genus") cmd_genus(r);
    else if (name == "halphen") cmd_halphen(r);
    else if (name == "dim") cmd_dim(r);
    else if (name == "classify") cmd_classify(r);
    else if (name == "realize") cmd_realize(r);
    else if (name == "filtration") cmd_filtration(r);
    else if (name == "conjecture-scan") cmd_conjecture(r);
    else if (name == "verify") return cmd_verify(r);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << chosen->help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace charseq::cli
