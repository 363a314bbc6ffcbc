#include "charseq/pointlab.hpp"

#include <algorithm>
#include <set>

#include "charseq/error.hpp"

namespace charseq {

namespace {

constexpr int kLineBudget = 4096;

std::vector<Elem> powers(const PrimeField& k, Elem v, int n) {
  std::vector<Elem> out(static_cast<std::size_t>(std::max(n, 0)) + 1, 1 % k.modulus());
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] = k.mul(out[static_cast<std::size_t>(i - 1)], v);
  return out;
}

// f(a, y, 1) as a polynomial in y.
UPoly affine_slice(const PrimeField& k, const Form& f, Elem a) {
  const auto pa = powers(k, a, f.degree);
  UPoly g(static_cast<std::size_t>(f.degree) + 1, 0);
  const auto basis = monomial_basis(f.degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.coeffs[i] == 0) continue;
    auto& slot = g[static_cast<std::size_t>(basis[i][1])];
    slot = k.add(slot, k.mul(f.coeffs[i], pa[static_cast<std::size_t>(basis[i][0])]));
  }
  trim(g);
  return g;
}

// f(x, 1, 0) as a polynomial in x.
UPoly infinity_slice(const Form& f) {
  UPoly g(static_cast<std::size_t>(f.degree) + 1, 0);
  const auto basis = monomial_basis(f.degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i][2] == 0) g[static_cast<std::size_t>(basis[i][0])] = f.coeffs[i];
  trim(g);
  return g;
}

std::vector<Elem> all_elements(const PrimeField& k) {
  std::vector<Elem> v(k.modulus());
  for (Elem i = 0; i < k.modulus(); ++i) v[i] = i;
  return v;
}

void check_same_field(const PrimeField& a, const PrimeField& b) {
  require(a == b, ErrorKind::Domain, "curve and points live over different fields");
}

void check_on_curve(const PlaneCurve& x, const PointGroup& y) {
  check_same_field(x.field, y.field);
  check_distinct(y);
  for (const auto& q : y.points)
    require(on_curve(x, q), ErrorKind::Domain, "point is not on the curve");
}

Row coords_row(const PrimeField& k, const std::array<Elem, 3>& c, int l) {
  if (l < 0) return {};
  const auto px = powers(k, c[0], l);
  const auto py = powers(k, c[1], l);
  const auto pz = powers(k, c[2], l);
  Row row;
  row.reserve(monomial_count(l));
  for (const auto& e : monomial_basis(l))
    row.push_back(k.mul(k.mul(px[static_cast<std::size_t>(e[0])], py[static_cast<std::size_t>(e[1])]),
                        pz[static_cast<std::size_t>(e[2])]));
  return row;
}

Elem eval_coords(const PrimeField& k, const Form& f, const std::array<Elem, 3>& c) {
  const auto row = coords_row(k, c, f.degree);
  Elem acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) acc = k.add(acc, k.mul(f.coeffs[i], row[i]));
  return acc;
}

bool proportional(const PrimeField& k, const Form& a, const Form& b) {
  if (a.degree != b.degree) return false;
  // a_j b_i == a_i b_j for all i, j reduces to comparison against one pivot.
  std::size_t piv = 0;
  while (piv < a.coeffs.size() && a.coeffs[piv] == 0) ++piv;
  if (piv == a.coeffs.size()) return b.is_zero();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (k.mul(a.coeffs[i], b.coeffs[piv]) != k.mul(b.coeffs[i], a.coeffs[piv])) return false;
  return true;
}

}  // namespace

ProjPoint make_point(const PrimeField& k, std::int64_t x, std::int64_t y, std::int64_t z) {
  std::array<Elem, 3> c{k.from_int(x), k.from_int(y), k.from_int(z)};
  int last = 2;
  while (last >= 0 && c[static_cast<std::size_t>(last)] == 0) --last;
  require(last >= 0, ErrorKind::Domain, "(0, 0, 0) is not a projective point");
  const Elem inv = k.inv(c[static_cast<std::size_t>(last)]);
  for (auto& v : c) v = k.mul(v, inv);
  return ProjPoint{c};
}

bool PointGroup::contains(const ProjPoint& q) const {
  return std::find(points.begin(), points.end(), q) != points.end();
}

void check_distinct(const PointGroup& y) {
  std::vector<ProjPoint> sorted = y.points;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorKind::Domain,
          "point group has repeated points");
}

std::vector<Exponent> monomial_basis(int l) {
  std::vector<Exponent> out;
  if (l < 0) return out;
  for (int a = l; a >= 0; --a)
    for (int b = l - a; b >= 0; --b) out.push_back({a, b, l - a - b});
  return out;
}

std::size_t monomial_count(int l) {
  return l < 0 ? 0 : static_cast<std::size_t>((l + 1) * (l + 2) / 2);
}

std::size_t monomial_index(const Exponent& e) {
  const int l = e[0] + e[1] + e[2];
  return static_cast<std::size_t>((l - e[0]) * (l - e[0] + 1) / 2 + (l - e[0] - e[1]));
}

bool Form::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Elem c) { return c == 0; });
}

Form zero_form(int degree) {
  require(degree >= 0, ErrorKind::Domain, "form degree must be >= 0");
  return Form{degree, std::vector<Elem>(monomial_count(degree), 0)};
}

Elem eval_form(const PrimeField& k, const Form& f, const ProjPoint& q) {
  return eval_coords(k, f, q.c);
}

Form form_mul(const PrimeField& k, const Form& a, const Form& b) {
  Form out = zero_form(a.degree + b.degree);
  const auto ba = monomial_basis(a.degree);
  const auto bb = monomial_basis(b.degree);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coeffs[j] == 0) continue;
      const Exponent e{ba[i][0] + bb[j][0], ba[i][1] + bb[j][1], ba[i][2] + bb[j][2]};
      auto& slot = out.coeffs[monomial_index(e)];
      slot = k.add(slot, k.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return out;
}

Form form_partial(const PrimeField& k, const Form& f, int var) {
  Form out = zero_form(std::max(0, f.degree - 1));
  if (f.degree == 0) return out;
  const auto basis = monomial_basis(f.degree);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const int e = basis[i][static_cast<std::size_t>(var)];
    if (e == 0 || f.coeffs[i] == 0) continue;
    Exponent lowered = basis[i];
    --lowered[static_cast<std::size_t>(var)];
    auto& slot = out.coeffs[monomial_index(lowered)];
    slot = k.add(slot, k.mul(f.coeffs[i], k.from_int(e)));
  }
  return out;
}

Form line_through(const PrimeField& k, const ProjPoint& a, const ProjPoint& b) {
  require(a != b, ErrorKind::Domain, "a line needs two distinct points");
  const auto& u = a.c;
  const auto& v = b.c;
  Form line = zero_form(1);
  line.coeffs[0] = k.sub(k.mul(u[1], v[2]), k.mul(u[2], v[1]));
  line.coeffs[1] = k.sub(k.mul(u[2], v[0]), k.mul(u[0], v[2]));
  line.coeffs[2] = k.sub(k.mul(u[0], v[1]), k.mul(u[1], v[0]));
  return line;
}

Row evaluation_row(const PrimeField& k, const ProjPoint& q, int l) {
  return coords_row(k, q.c, l);
}

PlaneCurve make_curve(const PrimeField& k, Form f, bool irreducible) {
  require(f.degree >= 1, ErrorKind::Domain, "curve degree must be >= 1");
  require(f.coeffs.size() == monomial_count(f.degree), ErrorKind::Domain,
          "coefficient count does not match the degree");
  for (auto& c : f.coeffs) c %= k.modulus();
  require(!f.is_zero(), ErrorKind::Domain, "curve equation is zero");
  return PlaneCurve{k, std::move(f), irreducible};
}

bool on_curve(const PlaneCurve& x, const ProjPoint& q) { return eval_form(x.field, x.f, q) == 0; }

bool is_singular_point(const PlaneCurve& x, const ProjPoint& q) {
  if (!on_curve(x, q)) return false;
  for (int v = 0; v < 3; ++v)
    if (eval_form(x.field, form_partial(x.field, x.f, v), q) != 0) return false;
  return true;
}

std::int64_t phi_points(const PointGroup& y, int l) {
  if (l < 0 || y.points.empty()) return 0;
  Matrix m;
  for (const auto& q : y.points) m.push_back(evaluation_row(y.field, q, l));
  return static_cast<std::int64_t>(rank(y.field, std::move(m)));
}

std::vector<std::int64_t> hilbert_function_points(const PointGroup& y, int last) {
  std::vector<std::int64_t> out;
  if (last < 0) return out;
  const std::size_t n = y.points.size();
  out.assign(static_cast<std::size_t>(last) + 1, 0);
  if (n == 0) return out;
  const PrimeField& k = y.field;
  RowSpace current(k, n);
  current.insert(Row(n, 1));
  out[0] = 1;
  for (int l = 1; l <= last; ++l) {
    if (current.dim() == n) {
      out[static_cast<std::size_t>(l)] = static_cast<std::int64_t>(n);
      continue;
    }
    RowSpace next(k, n);
    for (const auto& v : current.rows()) {
      for (int var = 0; var < 3 && next.dim() < n; ++var) {
        Row w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = k.mul(v[i], y.points[i].c[static_cast<std::size_t>(var)]);
        next.insert(std::move(w));
      }
    }
    current = std::move(next);
    out[static_cast<std::size_t>(l)] = static_cast<std::int64_t>(current.dim());
  }
  return out;
}

std::int64_t phi_plane_curve(int d, int l) {
  require(d >= 1, ErrorKind::Domain, "curve degree must be >= 1");
  if (l < 0) return 0;
  return binom64(l + 2, 2) - (l >= d ? binom64(l - d + 2, 2) : 0);
}

namespace {

// First l with phi(l) == n, or -1.
int stable_degree(const std::vector<std::int64_t>& phi, std::size_t n) {
  for (std::size_t l = 0; l < phi.size(); ++l)
    if (phi[l] == static_cast<std::int64_t>(n)) return static_cast<int>(l);
  return -1;
}

}  // namespace

RelCharSeq measure_rcs(const PlaneCurve& x, const PointGroup& y, std::optional<int> window) {
  check_on_curve(x, y);
  const int d = x.degree();
  const std::size_t n = y.size();
  const int w = window.value_or(d + static_cast<int>(n) + 2);
  auto phi = hilbert_function_points(y, w);
  const int stable = stable_degree(phi, n);
  if (stable < 0)
    fail(ErrorKind::NonStabilizing, "phi_Y did not reach |Y| = " + std::to_string(n) +
                                        " within degree " + std::to_string(w));
  const int last = std::max(stable, d - 1) + 2;
  auto phi_at = [&](int l) -> std::int64_t {
    if (l < 0) return 0;
    return l <= stable ? phi[static_cast<std::size_t>(l)] : static_cast<std::int64_t>(n);
  };
  auto psi = [&](int l) { return l < 0 ? 0 : phi_plane_curve(d, l) - phi_at(l); };
  std::vector<std::int64_t> widths;
  for (int l = 0; l <= last; ++l) {
    const std::int64_t wl = psi(l) - 2 * psi(l - 1) + psi(l - 2);
    if (wl < 0)
      fail(ErrorKind::NonStabilizing, "negative width at degree " + std::to_string(l));
    widths.push_back(wl);
  }
  RelCharSeq rel;
  rel.ambient = plane_curve_charseq(d);
  rel.entries = entries_from_widths(widths);
  if (rel.entries.size() != static_cast<std::size_t>(d))
    fail(ErrorKind::NonStabilizing, "widths do not sum to the curve degree");
  std::int64_t boxes = 0;
  for (int i = 0; i < d; ++i) boxes += rel.entries[static_cast<std::size_t>(i)] - i;
  if (boxes != static_cast<std::int64_t>(n))
    fail(ErrorKind::NonStabilizing, "box count differs from |Y|");
  return rel;
}

CharSeq measure_abs(const PointGroup& y, std::optional<int> window) {
  check_distinct(y);
  const std::size_t n = y.size();
  const int w = window.value_or(static_cast<int>(n) + 2);
  CharSeq seq;
  seq.cone_dim = 1;
  seq.codim = 2;
  if (n == 0) return seq;
  auto phi = hilbert_function_points(y, w);
  const int stable = stable_degree(phi, n);
  if (stable < 0)
    fail(ErrorKind::NonStabilizing, "phi_Y did not reach |Y| within degree " + std::to_string(w));
  std::vector<std::int64_t> widths;
  for (int l = 0; l <= stable; ++l)
    widths.push_back(phi[static_cast<std::size_t>(l)] - (l > 0 ? phi[static_cast<std::size_t>(l - 1)] : 0));
  seq.entries = entries_from_widths(widths);
  return seq;
}

std::vector<ProjPoint> rational_points(const PlaneCurve& x) {
  const PrimeField& k = x.field;
  std::vector<ProjPoint> out;
  for (Elem a = 0; a < k.modulus(); ++a) {
    const UPoly g = affine_slice(k, x.f, a);
    const auto ys = g.empty() ? all_elements(k) : roots(k, g);
    for (Elem b : ys) out.push_back(ProjPoint{{a, b, 1}});
  }
  const UPoly h = infinity_slice(x.f);
  const auto xs = h.empty() ? all_elements(k) : roots(k, h);
  for (Elem a : xs) out.push_back(ProjPoint{{a, 1, 0}});
  if (on_curve(x, ProjPoint{{1, 0, 0}})) out.push_back(ProjPoint{{1, 0, 0}});
  std::sort(out.begin(), out.end());
  return out;
}

ProjPoint random_curve_point(const PlaneCurve& x, std::mt19937_64& rng) {
  const PrimeField& k = x.field;
  const std::uint64_t budget = std::max<std::uint64_t>(1024, 4ull * k.modulus());
  for (std::uint64_t attempt = 0; attempt < budget; ++attempt) {
    const auto a = static_cast<Elem>(uniform_below(rng, k.modulus()));
    const UPoly g = affine_slice(k, x.f, a);
    if (g.empty()) return ProjPoint{{a, static_cast<Elem>(uniform_below(rng, k.modulus())), 1}};
    const auto ys = roots(k, g);
    if (ys.empty()) continue;
    return ProjPoint{{a, ys[uniform_below(rng, ys.size())], 1}};
  }
  fail(ErrorKind::InsufficientPoints, "no affine rational point found; try a larger modulus");
}

std::vector<ProjPoint> sample_curve_points(const PlaneCurve& x, std::size_t count,
                                           std::mt19937_64& rng, bool avoid_singular) {
  const PrimeField& k = x.field;
  std::vector<ProjPoint> out;
  if (count == 0) return out;
  auto insufficient = [&](std::size_t found) {
    fail(ErrorKind::InsufficientPoints,
         "asked for " + std::to_string(count) + " points, found " + std::to_string(found) +
             " over F_" + std::to_string(k.modulus()) + "; raise the modulus");
  };
  if (k.modulus() <= 101) {
    auto all = rational_points(x);
    if (avoid_singular)
      std::erase_if(all, [&](const ProjPoint& q) { return is_singular_point(x, q); });
    if (all.size() < count) insufficient(all.size());
    seeded_shuffle(all, rng);
    all.resize(count);
    return all;
  }
  std::set<ProjPoint> seen;
  const std::size_t budget = 64 * count + 4096;
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    const ProjPoint q = random_curve_point(x, rng);
    if (avoid_singular && is_singular_point(x, q)) continue;
    if (seen.insert(q).second) out.push_back(q);
  }
  if (out.size() < count) insufficient(out.size());
  return out;
}

PointGroup random_points_on_curve(const PlaneCurve& x, std::size_t count, std::uint64_t seed,
                                  bool avoid_singular) {
  std::mt19937_64 rng(seed);
  return PointGroup{x.field, sample_curve_points(x, count, rng, avoid_singular)};
}

bool transverse_at(const PrimeField& k, const Form& f, const Form& h, const ProjPoint& q) {
  std::array<Elem, 3> gf{}, gh{};
  for (int v = 0; v < 3; ++v) {
    gf[static_cast<std::size_t>(v)] = eval_form(k, form_partial(k, f, v), q);
    gh[static_cast<std::size_t>(v)] = eval_form(k, form_partial(k, h, v), q);
  }
  for (int i = 0; i < 3; ++i) {
    const auto a = static_cast<std::size_t>((i + 1) % 3);
    const auto b = static_cast<std::size_t>((i + 2) % 3);
    if (k.sub(k.mul(gf[a], gh[b]), k.mul(gf[b], gh[a])) != 0) return true;
  }
  return false;
}

PointGroup section_points(const PlaneCurve& x, const Form& h, bool require_transverse) {
  const PrimeField& k = x.field;
  require(h.degree >= 1 && h.coeffs.size() == monomial_count(h.degree) && !h.is_zero(),
          ErrorKind::Domain, "section must be a nonzero form of degree >= 1");
  if (proportional(k, x.f, h))
    fail(ErrorKind::ImproperIntersection, "the section equation is the curve itself");
  const std::int64_t bound = static_cast<std::int64_t>(h.degree) * x.degree();
  PointGroup out{k, {}};
  auto improper = [] {
    fail(ErrorKind::ImproperIntersection, "curve and section share a component");
  };
  auto collect = [&](const UPoly& gf, const UPoly& gh, auto&& make) {
    std::vector<Elem> common;
    if (gf.empty() && gh.empty()) improper();
    if (gf.empty())
      common = roots(k, gh);
    else if (gh.empty())
      common = roots(k, gf);
    else {
      const UPoly g = poly_gcd(k, gf, gh);
      if (deg(g) > 0) common = roots(k, g);
    }
    for (Elem t : common) {
      out.points.push_back(make(t));
      if (static_cast<std::int64_t>(out.points.size()) > bound) improper();
    }
  };
  for (Elem a = 0; a < k.modulus(); ++a)
    collect(affine_slice(k, x.f, a), affine_slice(k, h, a),
            [a](Elem b) { return ProjPoint{{a, b, 1}}; });
  collect(infinity_slice(x.f), infinity_slice(h), [](Elem a) { return ProjPoint{{a, 1, 0}}; });
  const ProjPoint corner{{1, 0, 0}};
  if (on_curve(x, corner) && eval_form(k, h, corner) == 0) out.points.push_back(corner);
  if (static_cast<std::int64_t>(out.points.size()) > bound) improper();
  std::sort(out.points.begin(), out.points.end());
  if (require_transverse) {
    if (static_cast<std::int64_t>(out.points.size()) != bound)
      fail(ErrorKind::NonTransverse, "only " + std::to_string(out.points.size()) + " of " +
                                         std::to_string(bound) +
                                         " intersections are rational and distinct");
    for (const auto& q : out.points)
      if (!transverse_at(k, x.f, h, q))
        fail(ErrorKind::NonTransverse, "section is tangent to the curve or singular at a common point");
  }
  return out;
}

std::optional<std::vector<ProjPoint>> split_line_section(const PlaneCurve& x, const ProjPoint& a,
                                                         const ProjPoint& b) {
  const PrimeField& k = x.field;
  const int d = x.degree();
  require(static_cast<std::int64_t>(k.modulus()) > d, ErrorKind::Domain,
          "line restriction needs p > curve degree");
  require(a != b, ErrorKind::Domain, "a line needs two distinct points");
  auto along = [&](Elem t) {
    return std::array<Elem, 3>{k.add(a.c[0], k.mul(t, b.c[0])), k.add(a.c[1], k.mul(t, b.c[1])),
                               k.add(a.c[2], k.mul(t, b.c[2]))};
  };
  // Raw coordinates: scaling a point would multiply f by a d-th power.
  std::vector<Elem> ts, vals;
  for (int i = 0; i <= d; ++i) {
    const auto t = static_cast<Elem>(i);
    ts.push_back(t);
    vals.push_back(eval_coords(k, x.f, along(t)));
  }
  const UPoly g = interpolate(k, ts, vals);
  if (g.empty()) return std::nullopt;
  const int dg = deg(g);
  if (d - dg > 1) return std::nullopt;
  const auto rts = roots(k, g);
  if (static_cast<int>(rts.size()) != dg) return std::nullopt;
  std::vector<ProjPoint> out;
  for (Elem t : rts) {
    const auto c = along(t);
    out.push_back(make_point(k, c[0], c[1], c[2]));
  }
  if (dg == d - 1) out.push_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

Section transverse_section(const PlaneCurve& x, int s, std::mt19937_64& rng,
                           const std::vector<ProjPoint>& avoid) {
  require(s >= 1, ErrorKind::Domain, "section degree must be >= 1");
  const PrimeField& k = x.field;
  Section sec{zero_form(0), {}};
  sec.h.coeffs[0] = 1;
  std::set<ProjPoint> taken(avoid.begin(), avoid.end());
  for (int j = 0; j < s; ++j) {
    bool placed = false;
    for (int attempt = 0; attempt < kLineBudget && !placed; ++attempt) {
      const ProjPoint a = random_curve_point(x, rng);
      const ProjPoint b = random_curve_point(x, rng);
      if (a == b) continue;
      auto pts = split_line_section(x, a, b);
      if (!pts) continue;
      if (std::any_of(pts->begin(), pts->end(), [&](const ProjPoint& q) { return taken.count(q) > 0; }))
        continue;
      sec.h = form_mul(k, sec.h, line_through(k, a, b));
      for (const auto& q : *pts) {
        taken.insert(q);
        sec.points.push_back(q);
      }
      placed = true;
    }
    if (!placed)
      fail(ErrorKind::NonTransverse, "no line with " + std::to_string(x.degree()) +
                                         " rational simple intersections found");
  }
  std::sort(sec.points.begin(), sec.points.end());
  return sec;
}

std::int64_t dim_linear_system(const PlaneCurve& x, const PointGroup& y) {
  check_on_curve(x, y);
  for (const auto& q : y.points)
    if (is_singular_point(x, q))
      fail(ErrorKind::SingularCollision, "point group meets the singular locus of the curve");
  const int t = x.degree() - 3;
  const std::int64_t phi = t < 0 ? 0 : hilbert_function_points(y, t)[static_cast<std::size_t>(t)];
  return static_cast<std::int64_t>(y.size()) - phi;
}

}  // namespace charseq
