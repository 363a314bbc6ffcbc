#include "charseq/field.hpp"

#include <algorithm>

#include "charseq/error.hpp"

namespace charseq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  require(p < (1u << 31) && is_prime(p), ErrorKind::Domain,
          "modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  require(a % p_ != 0, ErrorKind::Domain, "inverse of zero");
  return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const UPoly& f) {
  for (std::size_t i = f.size(); i > 0; --i)
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  return -1;
}

Elem eval(const PrimeField& k, const UPoly& f, Elem x) {
  Elem acc = 0;
  for (std::size_t i = f.size(); i > 0; --i) acc = k.add(k.mul(acc, x), f[i - 1]);
  return acc;
}

UPoly poly_mul(const PrimeField& k, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

void poly_divmod(const PrimeField& k, const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  const int db = deg(b);
  require(db >= 0, ErrorKind::Domain, "polynomial division by zero");
  r = a;
  trim(r);
  q.clear();
  if (deg(r) < db) return;
  q.assign(static_cast<std::size_t>(deg(r) - db + 1), 0);
  const Elem lead_inv = k.inv(b[static_cast<std::size_t>(db)]);
  for (int i = deg(r); i >= db; --i) {
    const Elem c = k.mul(r[static_cast<std::size_t>(i)], lead_inv);
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      r[idx] = k.sub(r[idx], k.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  trim(r);
  trim(q);
}

UPoly poly_mod(const PrimeField& k, const UPoly& a, const UPoly& b) {
  UPoly q, r;
  poly_divmod(k, a, b, q, r);
  return r;
}

UPoly make_monic(const PrimeField& k, UPoly f) {
  trim(f);
  if (f.empty()) return f;
  const Elem li = k.inv(f.back());
  for (auto& c : f) c = k.mul(c, li);
  return f;
}

UPoly poly_gcd(const PrimeField& k, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, std::move(a));
}

namespace {

UPoly powmod(const PrimeField& k, UPoly base, std::uint64_t e, const UPoly& mod) {
  UPoly result{1};
  result = poly_mod(k, result, mod);
  base = poly_mod(k, base, mod);
  while (e != 0) {
    if (e & 1) result = poly_mod(k, poly_mul(k, result, base), mod);
    e >>= 1;
    if (e != 0) base = poly_mod(k, poly_mul(k, base, base), mod);
  }
  return result;
}

// g is monic, squarefree and splits into distinct linear factors.
void split_linear(const PrimeField& k, const UPoly& g, std::vector<Elem>& out) {
  const int n = deg(g);
  if (n <= 0) return;
  if (n == 1) {
    out.push_back(k.neg(g[0]));
    return;
  }
  const std::uint32_t p = k.modulus();
  for (Elem a = 0; a < p; ++a) {
    UPoly h = powmod(k, UPoly{a, 1}, (p - 1) / 2, g);
    if (h.empty()) h.push_back(0);
    h[0] = k.sub(h[0], 1);
    trim(h);
    UPoly d = poly_gcd(k, h, g);
    if (deg(d) > 0 && deg(d) < n) {
      UPoly q, r;
      poly_divmod(k, g, d, q, r);
      split_linear(k, d, out);
      split_linear(k, make_monic(k, q), out);
      return;
    }
  }
  // Unreachable for p odd: some shift separates two distinct roots.
  fail(ErrorKind::Domain, "root splitting did not terminate");
}

}  // namespace

std::vector<Elem> roots(const PrimeField& k, const UPoly& f_in) {
  UPoly f = make_monic(k, f_in);
  require(!f.empty(), ErrorKind::Domain, "roots of the zero polynomial");
  std::vector<Elem> out;
  const std::uint32_t p = k.modulus();
  if (deg(f) == 0) return out;
  if (p < 64) {
    for (Elem x = 0; x < p; ++x)
      if (eval(k, f, x) == 0) out.push_back(x);
    return out;
  }
  // gcd(f, x^p - x) keeps one copy of each rational root.
  UPoly xp = powmod(k, UPoly{0, 1}, p, f);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = k.sub(xp[1], 1);
  trim(xp);
  UPoly g = poly_gcd(k, xp, f);
  split_linear(k, g, out);
  std::sort(out.begin(), out.end());
  return out;
}

UPoly interpolate(const PrimeField& k, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  UPoly result;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    UPoly basis{1};
    Elem denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis = poly_mul(k, basis, UPoly{k.neg(xs[j]), 1});
      denom = k.mul(denom, k.sub(xs[i], xs[j]));
    }
    const Elem scale = k.mul(ys[i], k.inv(denom));
    if (result.size() < basis.size()) result.resize(basis.size(), 0);
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] = k.add(result[t], k.mul(scale, basis[t]));
  }
  trim(result);
  return result;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v;
  do v = rng(); while (v >= limit);
  return v % n;
}

}  // namespace charseq
