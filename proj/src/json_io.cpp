#include "charseq/json_io.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <sstream>

#include "charseq/error.hpp"

namespace charseq {

namespace {

template <class T>
std::vector<T> parse_list(std::string_view text) {
  std::vector<T> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    T v{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      fail(ErrorKind::Parse, "not an integer list: '" + std::string(text) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
std::string join_list(const std::vector<T>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Next meaningful line, or false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    return true;
  }
  return false;
}

std::uint32_t read_header(std::istream& in, std::string& line, int& lineno) {
  if (!next_line(in, line, lineno) || line.rfind("p=", 0) != 0)
    fail(ErrorKind::Parse, "expected a 'p=<modulus>' header");
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(line.data() + 2, line.data() + line.size(), p);
  if (ec != std::errc{} || ptr != line.data() + line.size())
    fail(ErrorKind::Parse, "bad modulus in header '" + line + "'");
  return p;
}

std::vector<std::int64_t> split_ints(const std::string& line, std::size_t expected, int lineno) {
  std::istringstream is(line);
  std::vector<std::int64_t> out;
  std::string tok;
  while (is >> tok) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  if (out.size() != expected)
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected " + std::to_string(expected) +
                               " integers");
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) { return parse_list<int>(text); }
std::vector<std::int64_t> parse_int64_list(std::string_view text) { return parse_list<std::int64_t>(text); }
std::string join(const std::vector<int>& v, char sep) { return join_list(v, sep); }
std::string join(const std::vector<std::int64_t>& v, char sep) { return join_list(v, sep); }

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

Json to_json(const MacaulayRep& rep) {
  Json terms = Json::array();
  for (const auto& t : rep.terms) terms.push_back(Json::array({t.top, t.bottom}));
  return Json{{"c", to_json(rep.value)}, {"d", rep.index}, {"terms", terms}};
}

Json to_json(const CharSeq& seq) {
  return Json{{"entries", seq.entries}, {"cone_dim", seq.cone_dim}, {"codim", seq.codim}};
}

Json to_json(const HilbertFn& fn) {
  Json j{{"values", fn.values}, {"cone_dim", fn.cone_dim}};
  if (fn.canonical) j["canonical"] = to_json(*fn.canonical);
  return j;
}

Json to_json(const RelCharSeq& rel) {
  return Json{{"entries", rel.entries}, {"ambient", to_json(rel.ambient)}};
}

Json to_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    const char* status = c.status == CheckStatus::Passed ? "passed"
                         : c.status == CheckStatus::Failed ? "failed"
                                                           : "flagged";
    Json item{{"name", c.name}, {"status", status}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  return Json{{"ok", report.ok()}, {"degenerate", report.degenerate()}, {"checks", checks}};
}

Json to_json(const GapSplit& split) {
  auto part = [](const SplitPart& p) {
    return Json{{"rel", to_json(p.rel)}, {"status", std::string(to_string(p.status))}};
  };
  return Json{{"gap_index", split.gap_index}, {"s", split.s}, {"inner", part(split.inner)},
              {"outer", part(split.outer)}};
}

Json to_json(const EqualPhiVerdict& v) {
  return Json{{"i", v.i},
              {"s", v.s},
              {"r", v.r},
              {"predicted", std::string(to_string(v.predicted))},
              {"delta", v.delta.entries},
              {"head_agrees", v.head_agrees},
              {"tail_agrees", v.tail_agrees},
              {"holds", v.holds()}};
}

Json to_json(const MaxSysVerdict& v) {
  Json j{{"alpha", v.alpha}, {"d", v.d},   {"s", v.s},
         {"r", v.r},         {"dim", v.dim}, {"case_tag", v.case_tag}};
  if (v.rel) j["rel"] = v.rel->entries;
  if (v.case_tag != kTagLarge) {
    const auto& c = v.certificate;
    Json cert{{"n0_equals_s", c.n0_equals_s},
              {"degree_s_form", c.degree_s_form},
              {"head_agrees", c.head_agrees},
              {"tail_agrees", c.tail_agrees}};
    if (c.searched) {
      if (c.contained_section) {
        Json pts = Json::array();
        for (const auto& q : *c.contained_section) pts.push_back(q.c);
        cert["contained_section"] = pts;
      } else {
        cert["contained_section"] = nullptr;
      }
    }
    j["certificate"] = cert;
  }
  j["verified"] = v.verified;
  return j;
}

Json to_json(const ConjectureReport& report) {
  Json trials = Json::array();
  for (const auto& t : report.records)
    trials.push_back(Json{{"rel", t.rel},
                          {"phi_y", t.phi_y},
                          {"phi_section", t.phi_section},
                          {"dominated", t.dominated},
                          {"connex", t.connex}});
  return Json{{"d", report.d},           {"s", report.s},           {"trials", report.trials},
              {"violations", report.violations}, {"records", trials}};
}

Json to_json(const PointGroup& y) {
  Json pts = Json::array();
  for (const auto& q : y.points) pts.push_back(q.c);
  return Json{{"p", y.field.modulus()}, {"points", pts}};
}

CharSeq charseq_from_json(const Json& j) {
  try {
    CharSeq seq;
    seq.entries = j.at("entries").get<std::vector<int>>();
    seq.cone_dim = j.value("cone_dim", 1);
    seq.codim = j.value("codim", 1);
    return seq;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad CharSeq JSON: ") + e.what());
  }
}

RelCharSeq rel_from_json(const Json& j) {
  try {
    RelCharSeq rel;
    rel.entries = j.at("entries").get<std::vector<int>>();
    rel.ambient = charseq_from_json(j.at("ambient"));
    return rel;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad RelCharSeq JSON: ") + e.what());
  }
}

PointGroup read_points(std::istream& in) {
  std::string line;
  int lineno = 0;
  const PrimeField k(read_header(in, line, lineno));
  PointGroup y{k, {}};
  while (next_line(in, line, lineno)) {
    const auto v = split_ints(line, 3, lineno);
    y.points.push_back(make_point(k, v[0], v[1], v[2]));
  }
  return y;
}

void write_points(std::ostream& out, const PointGroup& y) {
  out << "p=" << y.field.modulus() << '\n';
  for (const auto& q : y.points) out << q.c[0] << ' ' << q.c[1] << ' ' << q.c[2] << '\n';
}

PlaneCurve read_curve(std::istream& in) {
  std::string line;
  int lineno = 0;
  const PrimeField k(read_header(in, line, lineno));
  bool irreducible = false;
  std::vector<std::pair<Exponent, std::int64_t>> terms;
  int degree = -1;
  while (next_line(in, line, lineno)) {
    if (line.rfind("irreducible=", 0) == 0) {
      const std::string flag = line.substr(12);
      if (flag != "0" && flag != "1") fail(ErrorKind::Parse, "irreducible flag must be 0 or 1");
      irreducible = flag == "1";
      continue;
    }
    const auto v = split_ints(line, 4, lineno);
    if (v[0] < 0 || v[1] < 0 || v[2] < 0)
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": negative exponent");
    const int deg_here = static_cast<int>(v[0] + v[1] + v[2]);
    if (degree >= 0 && deg_here != degree)
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": form is not homogeneous");
    degree = deg_here;
    terms.push_back({Exponent{static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])}, v[3]});
  }
  if (degree < 1) fail(ErrorKind::Parse, "curve file has no monomials of positive degree");
  Form f = zero_form(degree);
  for (const auto& [e, c] : terms) {
    auto& slot = f.coeffs[monomial_index(e)];
    slot = k.add(slot, k.from_int(c));
  }
  return make_curve(k, std::move(f), irreducible);
}

void write_curve(std::ostream& out, const PlaneCurve& x) {
  out << "p=" << x.field.modulus() << '\n';
  out << "irreducible=" << (x.irreducible ? 1 : 0) << '\n';
  const auto basis = monomial_basis(x.degree());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (x.f.coeffs[i] != 0)
      out << basis[i][0] << ' ' << basis[i][1] << ' ' << basis[i][2] << ' ' << x.f.coeffs[i] << '\n';
}

PointGroup load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open point file " + path);
  return read_points(in);
}

PlaneCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open curve file " + path);
  return read_curve(in);
}

}  // namespace charseq
