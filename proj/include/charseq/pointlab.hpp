#pragma once

// Points and curves in P^2 over F_p, and the evaluation-matrix ranks that
// measure Hilbert functions and characteristic sequences.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "charseq/field.hpp"
#include "charseq/linalg.hpp"
#include "charseq/liaison.hpp"
#include "charseq/seqcalc.hpp"

namespace charseq {

/// Homogeneous coordinates scaled so the last nonzero one is 1:
/// (x, y, 1), (x, 1, 0) or (1, 0, 0). Ordered lexicographically.
struct ProjPoint {
  std::array<Elem, 3> c{0, 0, 1};
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

/// Throws Error(Domain) when all coordinates vanish.
ProjPoint make_point(const PrimeField& k, std::int64_t x, std::int64_t y, std::int64_t z);

struct PointGroup {
  PrimeField field;
  std::vector<ProjPoint> points;

  std::size_t size() const { return points.size(); }
  bool contains(const ProjPoint& q) const;
};

/// Throws Error(Domain) when two points coincide.
void check_distinct(const PointGroup& y);

using Exponent = std::array<int, 3>;

/// Degree-l exponents in graded lex order with x > y > z.
std::vector<Exponent> monomial_basis(int l);
std::size_t monomial_count(int l);
/// Position of e inside monomial_basis(e[0] + e[1] + e[2]).
std::size_t monomial_index(const Exponent& e);

/// Dense homogeneous form; coeffs follow monomial_basis(degree).
struct Form {
  int degree = 0;
  std::vector<Elem> coeffs;

  bool is_zero() const;
  friend bool operator==(const Form&, const Form&) = default;
};

Form zero_form(int degree);
Elem eval_form(const PrimeField& k, const Form& f, const ProjPoint& q);
Form form_mul(const PrimeField& k, const Form& a, const Form& b);
Form form_partial(const PrimeField& k, const Form& f, int var);
/// The line through two distinct points.
Form line_through(const PrimeField& k, const ProjPoint& a, const ProjPoint& b);
/// Monomials of degree l evaluated at q.
Row evaluation_row(const PrimeField& k, const ProjPoint& q, int l);

struct PlaneCurve {
  PrimeField field;
  Form f;
  bool irreducible = false;  // asserted by the caller

  int degree() const { return f.degree; }
};

/// Throws Error(Domain) on a zero form or degree < 1.
PlaneCurve make_curve(const PrimeField& k, Form f, bool irreducible);

bool on_curve(const PlaneCurve& x, const ProjPoint& q);
bool is_singular_point(const PlaneCurve& x, const ProjPoint& q);

/// Rank of the |Y| x C(l+2, 2) evaluation matrix; 0 for l < 0.
std::int64_t phi_points(const PointGroup& y, int l);

/// phi_Y(0..last) computed incrementally: the evaluations of degree l+1
/// forms are spanned by x, y, z times those of degree l.
std::vector<std::int64_t> hilbert_function_points(const PointGroup& y, int last);

/// C(l+2, 2) - C(l-d+2, 2).
std::int64_t phi_plane_curve(int d, int l);

/// Relative sequence of Y on X from psi(l) = phi_X(l) - phi_Y(l), whose
/// second difference counts the n_i equal to l. window bounds the scan
/// (default d + |Y| + 2); Error(NonStabilizing) when it is too small.
RelCharSeq measure_rcs(const PlaneCurve& x, const PointGroup& y,
                       std::optional<int> window = std::nullopt);

/// Absolute sequence of Y from Delta phi_Y (cone_dim 1, codim 2).
CharSeq measure_abs(const PointGroup& y, std::optional<int> window = std::nullopt);

/// Every rational point of X in canonical order.
std::vector<ProjPoint> rational_points(const PlaneCurve& x);

/// A rational point of X on a random affine slice x = a z.
/// Error(InsufficientPoints) when repeated slices find nothing.
ProjPoint random_curve_point(const PlaneCurve& x, std::mt19937_64& rng);

/// count distinct rational points of X, deterministic in rng. Small fields
/// (p <= 101) are scanned exhaustively, larger ones sampled by slices.
std::vector<ProjPoint> sample_curve_points(const PlaneCurve& x, std::size_t count,
                                           std::mt19937_64& rng, bool avoid_singular = true);

PointGroup random_points_on_curve(const PlaneCurve& x, std::size_t count, std::uint64_t seed,
                                  bool avoid_singular = true);

/// grad f and grad h are independent at q.
bool transverse_at(const PrimeField& k, const Form& f, const Form& h, const ProjPoint& q);

/// Common rational zeros of X and H in canonical order. With
/// require_transverse all s d intersections must be rational and simple.
PointGroup section_points(const PlaneCurve& x, const Form& h, bool require_transverse);

/// Rational intersections of X with the line through a and b when the line
/// meets X in d distinct rational points; nullopt otherwise.
std::optional<std::vector<ProjPoint>> split_line_section(const PlaneCurve& x, const ProjPoint& a,
                                                         const ProjPoint& b);

struct Section {
  Form h;
  std::vector<ProjPoint> points;  // canonical order
};

/// Transverse degree-s section with s d distinct rational points, built as a
/// product of s lines each through two rational points of X. Points in avoid
/// are kept off the section. Error(NonTransverse) when the redraw budget is
/// spent.
Section transverse_section(const PlaneCurve& x, int s, std::mt19937_64& rng,
                           const std::vector<ProjPoint>& avoid = {});

/// |Y| - phi_Y(d - 3). Error(SingularCollision) when Y meets Sing(X).
std::int64_t dim_linear_system(const PlaneCurve& x, const PointGroup& y);

}  // namespace charseq
