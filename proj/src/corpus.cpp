#include "charseq/corpus.hpp"

#include <algorithm>
#include <set>

#include "charseq/error.hpp"

namespace charseq {

PlaneCurve fermat_curve(const PrimeField& k, int d) {
  Form f = zero_form(d);
  f.coeffs[monomial_index({d, 0, 0})] = 1;
  f.coeffs[monomial_index({0, d, 0})] = 1;
  f.coeffs[monomial_index({0, 0, d})] = 1;
  return make_curve(k, std::move(f), true);
}

PlaneCurve superelliptic_curve(const PrimeField& k, int d, Elem a, Elem b) {
  require(d >= 2, ErrorKind::Domain, "degree must be >= 2");
  require((d - 1) % static_cast<std::int64_t>(k.modulus()) != 0 && d % static_cast<std::int64_t>(k.modulus()) != 0,
          ErrorKind::Domain, "p divides d or d-1");
  // g(x) = x^d + a x + b must be squarefree
  UPoly g(static_cast<std::size_t>(d) + 1, 0);
  g[0] = k.from_int(b);
  g[1] = k.add(g[1], k.from_int(a));
  g[static_cast<std::size_t>(d)] = k.add(g[static_cast<std::size_t>(d)], 1);
  UPoly dg;
  for (std::size_t i = 1; i < g.size(); ++i) dg.push_back(k.mul(k.from_int(static_cast<std::int64_t>(i)), g[i]));
  trim(dg);
  require(deg(poly_gcd(k, g, dg)) == 0, ErrorKind::Domain, "x^d + a x + b has a repeated root");
  Form f = zero_form(d);
  f.coeffs[monomial_index({0, d - 1, 1})] = 1;
  f.coeffs[monomial_index({d, 0, 0})] = k.neg(1);
  f.coeffs[monomial_index({1, 0, d - 1})] = k.sub(f.coeffs[monomial_index({1, 0, d - 1})], k.from_int(a));
  f.coeffs[monomial_index({0, 0, d})] = k.sub(f.coeffs[monomial_index({0, 0, d})], k.from_int(b));
  return make_curve(k, std::move(f), true);
}

namespace {

Elem rand_elem(const PrimeField& k, std::mt19937_64& rng) {
  return static_cast<Elem>(uniform_below(rng, k.modulus()));
}

ProjPoint random_plane_point(const PrimeField& k, std::mt19937_64& rng) {
  while (true) {
    const Elem a = rand_elem(k, rng), b = rand_elem(k, rng), c = rand_elem(k, rng);
    if (a != 0 || b != 0 || c != 0) return make_point(k, a, b, c);
  }
}

// Random invertible 3x3 matrix applied to column vectors.
using Mat3 = std::array<std::array<Elem, 3>, 3>;

Mat3 random_transform(const PrimeField& k, std::mt19937_64& rng) {
  while (true) {
    Mat3 m{};
    for (auto& row : m)
      for (auto& e : row) e = rand_elem(k, rng);
    Matrix rows;
    for (const auto& row : m) rows.emplace_back(row.begin(), row.end());
    if (rank(k, rows) == 3) return m;
  }
}

ProjPoint apply(const PrimeField& k, const Mat3& m, Elem x, Elem y, Elem z) {
  std::array<Elem, 3> v{};
  for (std::size_t i = 0; i < 3; ++i)
    v[i] = k.add(k.add(k.mul(m[i][0], x), k.mul(m[i][1], y)), k.mul(m[i][2], z));
  return make_point(k, v[0], v[1], v[2]);
}

}  // namespace

PointGroup random_plane_group(const PrimeField& k, std::size_t count, PlaneMix mix,
                              std::mt19937_64& rng) {
  PointGroup y{k, {}};
  std::set<ProjPoint> seen;
  const Mat3 line_map = random_transform(k, rng);
  const Mat3 conic_map = random_transform(k, rng);
  const std::size_t room = k.modulus() + 1;
  require(mix == PlaneMix::Generic || mix == PlaneMix::Mixed || count <= room, ErrorKind::Domain,
          "a line or conic over F_p has only p + 1 points");
  std::size_t guard = 0;
  while (y.size() < count) {
    require(++guard < 1000000, ErrorKind::Domain, "could not draw distinct points");
    PlaneMix kind = mix;
    if (mix == PlaneMix::Mixed) kind = static_cast<PlaneMix>(uniform_below(rng, 3));
    ProjPoint q;
    const Elem t = rand_elem(k, rng);
    switch (kind) {
      case PlaneMix::Aligned:
        q = apply(k, line_map, t, 1, 0);  // image of the line z = 0
        break;
      case PlaneMix::Conic:
        q = apply(k, conic_map, k.mul(t, t), t, 1);  // image of xz = y^2
        break;
      default:
        q = random_plane_point(k, rng);
        break;
    }
    if (seen.insert(q).second) y.points.push_back(q);
  }
  return y;
}

SexticConfigs build_sextic_configs(const PrimeField& k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    // Twelve distinct parameters t_i; X restricted to the conic xz = y^2,
    // parametrized by (t^2, t, 1), is prod (t - t_i).
    std::set<Elem> ts_set;
    while (ts_set.size() < 12) ts_set.insert(rand_elem(k, rng));
    std::vector<Elem> ts(ts_set.begin(), ts_set.end());
    UPoly prod{1};
    for (Elem t : ts) prod = poly_mul(k, prod, UPoly{k.neg(t), 1});
    Form f0 = zero_form(6);
    for (int e = 0; e <= 12; ++e) {
      const int a = e / 2, b = e % 2;
      f0.coeffs[monomial_index({a, b, 6 - a - b})] = prod[static_cast<std::size_t>(e)];
    }
    Form conic = zero_form(2);
    conic.coeffs[monomial_index({1, 0, 1})] = 1;
    conic.coeffs[monomial_index({0, 2, 0})] = k.neg(1);
    Form g = zero_form(4);
    for (auto& c : g.coeffs) c = rand_elem(k, rng);
    Form f = form_mul(k, conic, g);
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = k.add(f.coeffs[i], f0.coeffs[i]);
    PlaneCurve x = make_curve(k, std::move(f), true);

    std::vector<ProjPoint> on_conic;
    for (Elem t : ts) on_conic.push_back(make_point(k, k.mul(t, t), t, 1));
    if (std::any_of(on_conic.begin(), on_conic.end(), [&](const ProjPoint& q) {
          return !on_curve(x, q) || is_singular_point(x, q);
        }))
      continue;

    std::optional<std::vector<ProjPoint>> line;
    for (int tries = 0; tries < 4096 && !line; ++tries) {
      const ProjPoint a = random_curve_point(x, rng);
      const ProjPoint b = random_curve_point(x, rng);
      if (a != b) line = split_line_section(x, a, b);
      if (line && std::any_of(line->begin(), line->end(), [&](const ProjPoint& q) {
            return std::find(on_conic.begin(), on_conic.end(), q) != on_conic.end();
          }))
        line.reset();
    }
    if (!line) continue;
    seeded_shuffle(*line, rng);

    SexticConfigs out{x, {k, {}}, {k, {}}, {}, {}};
    const RelCharSeq goal{{3, 3, 4, 4, 5, 5}, plane_curve_charseq(6)};
    std::set<ProjPoint> used(line->begin(), line->end());
    used.insert(on_conic.begin(), on_conic.end());
    auto fresh = [&] {
      while (true) {
        const ProjPoint q = random_curve_point(x, rng);
        if (!used.count(q) && !is_singular_point(x, q)) return q;
      }
    };
    bool ok_a = false, ok_b = false;
    for (int tries = 0; tries < 32 && !ok_a; ++tries) {
      PointGroup y{k, {line->begin(), line->begin() + 5}};
      for (int i = 0; i < 4; ++i) y.points.push_back(fresh());
      if (measure_rcs(x, y) == goal) {
        out.aligned = y;
        out.line_rest = {(*line)[5]};
        ok_a = true;
      }
    }
    std::vector<ProjPoint> shuffled = on_conic;
    seeded_shuffle(shuffled, rng);
    for (int tries = 0; tries < 32 && !ok_b; ++tries) {
      PointGroup y{k, {shuffled.begin(), shuffled.begin() + 8}};
      y.points.push_back(fresh());
      if (measure_rcs(x, y) == goal) {
        out.conic = y;
        out.conic_rest.assign(shuffled.begin() + 8, shuffled.end());
        std::sort(out.conic_rest.begin(), out.conic_rest.end());
        ok_b = true;
      }
    }
    if (ok_a && ok_b) return out;
  }
  fail(ErrorKind::SearchExhausted, "could not build the sextic configurations");
}

}  // namespace charseq
