#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "charseq/corpus.hpp"
#include "charseq/error.hpp"
#include "charseq/json_io.hpp"
#include "charseq/linalg.hpp"
#include "charseq/pointlab.hpp"
#include "oracles.hpp"

using namespace charseq;

namespace {

std::vector<std::pair<std::array<int, 3>, std::uint64_t>> terms_of(const Form& f) {
  std::vector<std::pair<std::array<int, 3>, std::uint64_t>> out;
  const auto basis = monomial_basis(f.degree);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (f.coeffs[i] != 0) out.push_back({basis[i], f.coeffs[i]});
  return out;
}

Form linear(const PrimeField& k, std::int64_t a, std::int64_t b, std::int64_t c) {
  Form f = zero_form(1);
  f.coeffs[monomial_index({1, 0, 0})] = k.from_int(a);
  f.coeffs[monomial_index({0, 1, 0})] = k.from_int(b);
  f.coeffs[monomial_index({0, 0, 1})] = k.from_int(c);
  return f;
}

}  // namespace

TEST(Field, InverseAndPow) {
  const PrimeField k(10007);
  for (Elem a = 1; a < 10007; a += 37) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
  EXPECT_EQ(k.pow(3, 10006), 1u);
  EXPECT_EQ(k.from_int(-1), 10006u);
  EXPECT_THROW(PrimeField(10), Error);
  EXPECT_THROW(k.inv(0), Error);
}

TEST(Field, RootsOfSplitProducts) {
  for (std::uint32_t p : {7u, 61u, 101u, 10007u}) {
    const PrimeField k(p);
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::set<Elem> want;
      UPoly f{1};
      const int n = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < n; ++i) {
        const Elem r = static_cast<Elem>(uniform_below(rng, p));
        want.insert(r);
        f = poly_mul(k, f, UPoly{k.neg(r), 1});
      }
      const auto got = roots(k, f);
      EXPECT_EQ(std::set<Elem>(got.begin(), got.end()), want);
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST(Field, RootsAgreeWithExhaustiveSearch) {
  const PrimeField k(103);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    UPoly f;
    const int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i <= n; ++i) f.push_back(static_cast<Elem>(uniform_below(rng, 103)));
    trim(f);
    if (f.empty()) continue;
    std::vector<Elem> want;
    for (Elem x = 0; x < 103; ++x)
      if (eval(k, f, x) == 0) want.push_back(x);
    EXPECT_EQ(roots(k, f), want);
  }
}

TEST(Field, InterpolationRoundTrip) {
  const PrimeField k(101);
  const UPoly f{3, 0, 7, 1};
  std::vector<Elem> xs{0, 1, 2, 3, 4}, ys;
  for (Elem x : xs) ys.push_back(eval(k, f, x));
  EXPECT_EQ(interpolate(k, xs, ys), f);
}

TEST(LinAlg, RankMatchesGaussJordan) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 5u, 101u}) {
    const PrimeField k(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      Matrix m(rows, Row(cols));
      std::vector<std::vector<std::uint64_t>> o(rows, std::vector<std::uint64_t>(cols));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          // sparse entries keep rank deficiency common
          const Elem v = rng() % 3 == 0 ? static_cast<Elem>(uniform_below(rng, p)) : 0;
          m[i][j] = v;
          o[i][j] = v;
        }
      const std::size_t r = oracle::rank_mod(o, p);
      EXPECT_EQ(rank(k, m), r);
      RowSpace space(k, cols);
      for (const auto& row : m) space.insert(row);
      EXPECT_EQ(space.dim(), r);
      for (const auto& row : m) EXPECT_TRUE(space.contains(row));
      const auto ker = kernel(k, m, cols);
      EXPECT_EQ(ker.size(), cols - r);
      for (const auto& v : ker)
        for (const auto& row : m) {
          Elem acc = 0;
          for (std::size_t j = 0; j < cols; ++j) acc = k.add(acc, k.mul(row[j], v[j]));
          EXPECT_EQ(acc, 0u);
        }
    }
  }
}

TEST(Monomials, BasisAndIndex) {
  for (int l = 0; l <= 8; ++l) {
    const auto basis = monomial_basis(l);
    EXPECT_EQ(basis.size(), static_cast<std::size_t>((l + 1) * (l + 2) / 2));
    EXPECT_EQ(monomial_count(l), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) EXPECT_EQ(monomial_index(basis[i]), i);
  }
  EXPECT_EQ(monomial_basis(1), (std::vector<Exponent>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Points, CanonicalScaling) {
  const PrimeField k(7);
  EXPECT_EQ(make_point(k, 2, 4, 2).c, (std::array<Elem, 3>{1, 2, 1}));
  EXPECT_EQ(make_point(k, 3, 2, 0).c, (std::array<Elem, 3>{5, 1, 0}));
  EXPECT_EQ(make_point(k, 3, 0, 0).c, (std::array<Elem, 3>{1, 0, 0}));
  EXPECT_THROW(make_point(k, 0, 7, 0), Error);
  PointGroup y{k, {make_point(k, 1, 1, 1), make_point(k, 2, 2, 2)}};
  EXPECT_THROW(check_distinct(y), Error);
}

TEST(Forms, ProductAndLineThrough) {
  const PrimeField k(101);
  const ProjPoint a = make_point(k, 1, 2, 1), b = make_point(k, 5, 7, 1);
  const Form l = line_through(k, a, b);
  EXPECT_EQ(eval_form(k, l, a), 0u);
  EXPECT_EQ(eval_form(k, l, b), 0u);
  const Form g = linear(k, 1, 1, 3);
  const Form prod = form_mul(k, l, g);
  for (Elem x = 0; x < 20; ++x) {
    const ProjPoint q = make_point(k, x, 3 * x + 1, 1);
    EXPECT_EQ(eval_form(k, prod, q), k.mul(eval_form(k, l, q), eval_form(k, g, q)));
  }
  // Euler: x f_x + y f_y + z f_z = deg f * f
  const Form f = form_mul(k, prod, g);
  const ProjPoint q = make_point(k, 4, 9, 1);
  Elem euler = 0;
  for (int v = 0; v < 3; ++v)
    euler = k.add(euler, k.mul(q.c[static_cast<std::size_t>(v)], eval_form(k, form_partial(k, f, v), q)));
  EXPECT_EQ(euler, k.mul(3, eval_form(k, f, q)));
}

TEST(Curves, RationalPointsMatchBruteForce) {
  for (std::uint32_t p : {7u, 13u, 31u}) {
    const PrimeField k(p);
    for (int d = 2; d <= 5; ++d) {
      const PlaneCurve x = fermat_curve(k, d);
      EXPECT_EQ(rational_points(x), oracle::brute_points(terms_of(x.f), p)) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Curves, SuperellipticModelIsSmooth) {
  const PrimeField k(101);
  for (int d = 4; d <= 5; ++d) {
    const PlaneCurve x = superelliptic_curve(k, d, 1, 1);
    const auto pts = rational_points(x);
    EXPECT_GT(pts.size(), 50u);
    for (const auto& q : pts) EXPECT_FALSE(is_singular_point(x, q));
  }
  EXPECT_THROW(superelliptic_curve(k, 4, 0, 0), Error);  // x^4 has a repeated root
  EXPECT_THROW(superelliptic_curve(PrimeField(5), 6, 1, 1), Error);
}

TEST(Curves, SingularPoints) {
  const PrimeField k(101);
  // nodal cubic y^2 z = x^3 + x^2 z
  Form f = zero_form(3);
  f.coeffs[monomial_index({0, 2, 1})] = 1;
  f.coeffs[monomial_index({3, 0, 0})] = k.neg(1);
  f.coeffs[monomial_index({2, 0, 1})] = k.neg(1);
  const PlaneCurve x = make_curve(k, f, true);
  EXPECT_TRUE(is_singular_point(x, make_point(k, 0, 0, 1)));
  EXPECT_FALSE(is_singular_point(x, make_point(k, 0, 1, 0)));
  const auto pts = random_points_on_curve(x, 10, 3);
  for (const auto& q : pts.points) EXPECT_FALSE(is_singular_point(x, q));
  EXPECT_THROW(dim_linear_system(x, PointGroup{k, {make_point(k, 0, 0, 1)}}), Error);
}

TEST(HilbertFunction, MatchesRankOracle) {
  const PrimeField k(10007);
  std::mt19937_64 rng(23);
  for (PlaneMix mix : {PlaneMix::Generic, PlaneMix::Aligned, PlaneMix::Conic, PlaneMix::Mixed}) {
    for (int trial = 0; trial < 8; ++trial) {
      const PointGroup y = random_plane_group(k, 1 + rng() % 14, mix, rng);
      const auto hf = hilbert_function_points(y, 8);
      for (int l = 0; l <= 8; ++l) {
        const auto want = oracle::phi_points(y, l);
        EXPECT_EQ(phi_points(y, l), want);
        EXPECT_EQ(hf[static_cast<std::size_t>(l)], want);
      }
    }
  }
}

TEST(Measure, AbsoluteAndRelativeAgree) {
  const PrimeField k(10007);
  const PlaneCurve x = fermat_curve(k, 5);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const PointGroup y = random_points_on_curve(x, 3 + seed, seed);
    const RelCharSeq rel = measure_rcs(x, y);
    EXPECT_EQ(rel_degree(rel), static_cast<std::int64_t>(y.size()));
    EXPECT_EQ(abs_from_rel(rel).entries, measure_abs(y).entries);
    for (int l = 0; l <= 10; ++l) EXPECT_EQ(phi_rel(rel, l), oracle::phi_points(y, l));
  }
}

TEST(Measure, WindowTooSmall) {
  const PrimeField k(10007);
  std::mt19937_64 rng(1);
  const PointGroup y = random_plane_group(k, 10, PlaneMix::Aligned, rng);
  try {
    measure_abs(y, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonStabilizing);
  }
}

TEST(Sections, TransverseSectionShiftsByS) {
  const PrimeField k(10007);
  std::mt19937_64 rng(4);
  for (int d = 3; d <= 5; ++d) {
    const PlaneCurve x = fermat_curve(k, d);
    for (int s = 1; s <= 3; ++s) {
      const Section sec = transverse_section(x, s, rng);
      ASSERT_EQ(sec.points.size(), static_cast<std::size_t>(s * d));
      for (const auto& q : sec.points) {
        EXPECT_TRUE(on_curve(x, q));
        EXPECT_EQ(eval_form(k, sec.h, q), 0u);
        EXPECT_TRUE(transverse_at(k, x.f, sec.h, q));
      }
      const PointGroup y{k, sec.points};
      const RelCharSeq rel = measure_rcs(x, y);
      for (int i = 0; i < d; ++i) EXPECT_EQ(rel.entries[static_cast<std::size_t>(i)], i + s);
      EXPECT_EQ(section_points(x, sec.h, true).points, sec.points);
    }
  }
}

TEST(Sections, ImproperIntersection) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 3);
  try {
    section_points(x, form_mul(k, x.f, linear(k, 1, 0, 0)), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ImproperIntersection);
  }
}

TEST(Sections, LineSplitting) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 3);
  const auto pts = rational_points(x);
  int split = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto res = split_line_section(x, pts[0], pts[i]);
    if (!res) continue;
    ++split;
    EXPECT_EQ(res->size(), 3u);
    const Form l = line_through(k, pts[0], pts[i]);
    for (const auto& q : *res) {
      EXPECT_TRUE(on_curve(x, q));
      EXPECT_EQ(eval_form(k, l, q), 0u);
    }
  }
  EXPECT_GT(split, 0);
}

TEST(Files, PointsAndCurvesRoundTrip) {
  const PrimeField k(101);
  const PlaneCurve x = fermat_curve(k, 4);
  std::ostringstream cs;
  write_curve(cs, x);
  std::istringstream cin(cs.str());
  const PlaneCurve back = read_curve(cin);
  EXPECT_EQ(back.f, x.f);
  EXPECT_EQ(back.field, x.field);
  EXPECT_TRUE(back.irreducible);

  const PointGroup y = random_points_on_curve(x, 7, 9);
  std::ostringstream ps;
  write_points(ps, y);
  std::istringstream pin(ps.str());
  EXPECT_EQ(read_points(pin).points, y.points);

  std::istringstream bad("p=101\n1 2\n");
  EXPECT_THROW(read_curve(bad), Error);
  std::istringstream mixed("p=101\n2 0 0 1\n1 0 0 1\n");
  EXPECT_THROW(read_curve(mixed), Error);
}

TEST(LinearSystems, SectionDimension) {
  const PrimeField k(10007);
  std::mt19937_64 rng(8);
  const PlaneCurve x = fermat_curve(k, 6);
  for (int s = 1; s <= 3; ++s) {
    const Section sec = transverse_section(x, s, rng);
    EXPECT_EQ(dim_linear_system(x, PointGroup{k, sec.points}), (s + 1) * (s + 2) / 2 - 1);
  }
}
