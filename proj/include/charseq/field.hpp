#pragma once

// Arithmetic in F_p and dense univariate polynomials over it.

#include <cstdint>
#include <random>
#include <vector>

namespace charseq {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultModulus = 10007;

  /// Throws Error(Domain) unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws Error(Domain) on zero.
  Elem inv(Elem a) const;
  Elem from_int(std::int64_t v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Coefficients from the constant term up; the zero polynomial is empty.
using UPoly = std::vector<Elem>;

void trim(UPoly& f);
int deg(const UPoly& f);  // -1 for zero
Elem eval(const PrimeField& k, const UPoly& f, Elem x);
UPoly poly_mul(const PrimeField& k, const UPoly& a, const UPoly& b);
/// Quotient and remainder; b must be nonzero.
void poly_divmod(const PrimeField& k, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly poly_mod(const PrimeField& k, const UPoly& a, const UPoly& b);
UPoly poly_gcd(const PrimeField& k, UPoly a, UPoly b);  // monic or zero
UPoly make_monic(const PrimeField& k, UPoly f);

/// Distinct roots in F_p, ascending. f must be nonzero.
std::vector<Elem> roots(const PrimeField& k, const UPoly& f);

/// Values through points (xs[i], ys[i]) with distinct xs, degree < xs.size().
UPoly interpolate(const PrimeField& k, const std::vector<Elem>& xs, const std::vector<Elem>& ys);

/// Uniform integer in [0, n) from a 64-bit engine by rejection. Used instead
/// of std distributions so seeded streams agree across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace charseq
