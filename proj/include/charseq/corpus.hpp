#pragma once

// Reproducible configurations shared by the verify command and the tests.

#include <cstdint>
#include <random>
#include <vector>

#include "charseq/pointlab.hpp"

namespace charseq {

/// x^d + y^d + z^d, flagged irreducible (smooth when p does not divide d).
PlaneCurve fermat_curve(const PrimeField& k, int d);

/// y^{d-1} z = x^d + a x z^{d-1} + b z^d. Smooth, hence irreducible: the
/// only point at infinity is (0:1:0), where df/dz = y^{d-1}, and affine
/// singularities need a repeated root of x^d + a x + b. Error(Domain) when
/// that polynomial is not squarefree or p divides d or d-1.
PlaneCurve superelliptic_curve(const PrimeField& k, int d, Elem a, Elem b);

enum class PlaneMix { Generic, Aligned, Conic, Mixed };

/// Distinct points of P^2: uniform, all on one random line, all on one
/// random smooth conic, or a mixture of the three.
PointGroup random_plane_group(const PrimeField& k, std::size_t count, PlaneMix mix,
                              std::mt19937_64& rng);

/// A smooth sextic X with two nine-point groups of relative sequence
/// (3,3,4,4,5,5): five points on a line plus four general points, and eight
/// of the twelve points of X on a conic plus one general point.
struct SexticConfigs {
  PlaneCurve x;
  PointGroup aligned;              // 5 on a line + 4 general
  PointGroup conic;                // 8 on the conic + 1 general
  std::vector<ProjPoint> conic_rest;  // the other 4 points of X on the conic
  std::vector<ProjPoint> line_rest;   // the sixth point of X on the line
};

SexticConfigs build_sextic_configs(const PrimeField& k, std::uint64_t seed);

}  // namespace charseq
