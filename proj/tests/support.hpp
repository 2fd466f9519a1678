#pragma once

// Test-only helpers: seeded generators and brute-force oracles that do not go
// through the library's row reduction or multiplication code.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dialg/dialg.hpp"

namespace dialg::testing {

inline const FieldSpec kQ = FieldSpec::rationals();
inline FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }

inline std::string data_path(const std::string& name) { return std::string(DIALG_DATA_DIR) + "/" + name; }

template <FieldElement S>
S scalar(const FieldSpec& f, std::int64_t n) {
  return S::from_integer(f, n);
}

inline Rational q(std::int64_t num, std::int64_t den = 1) {
  return Rational(Rational::value_type(num, den));
}

/// Small random scalar: residues uniformly, rationals as a/b with |a| <= 5, 1 <= b <= 4.
template <FieldElement S>
S random_scalar(std::mt19937_64& rng, const FieldSpec& f) {
  if constexpr (std::is_same_v<S, Residue>) {
    return Residue::from_integer(f, std::uniform_int_distribution<std::int64_t>(0, f.characteristic() - 1)(rng));
  } else {
    const auto num = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    const auto den = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    return q(num, den);
  }
}

template <FieldElement S>
Vec<S> random_vec(std::mt19937_64& rng, const FieldSpec& f, std::size_t n) {
  Vec<S> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar<S>(rng, f));
  return v;
}

template <FieldElement S>
Mat<S> random_mat(std::mt19937_64& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
  Mat<S> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar<S>(rng, f);
  return m;
}

/// Invertible integer matrix with entries in [lo, hi] (determinant checked by
/// the cofactor formula for n = 2, by rank otherwise).
template <FieldElement S>
Mat<S> random_invertible(std::mt19937_64& rng, const FieldSpec& f, std::size_t n, std::int64_t lo = -3,
                         std::int64_t hi = 3) {
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  while (true) {
    Mat<S> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = S::from_integer(f, dist(rng));
    if (n == 2) {
      if (!(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero()) return m;
    } else if (is_invertible(m)) {
      return m;
    }
  }
}

/// Random subspace of F^n spanned by up to n random vectors.
template <FieldElement S>
Subspace<S> random_subspace(std::mt19937_64& rng, const FieldSpec& f, std::size_t n) {
  const auto k = std::uniform_int_distribution<std::size_t>(0, n)(rng);
  std::vector<Vec<S>> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vec<S>(rng, f, n));
  return Subspace<S>::span(f, n, gens);
}

// ---------------------------------------------------------------------------
// Oracles over GF(p): everything as explicit sets of integer tuples.
// ---------------------------------------------------------------------------

using Point = std::vector<std::uint32_t>;

inline Point point(const Vec<Residue>& v) {
  Point out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

/// All linear combinations of `gens` over GF(p), closing an explicit element
/// set under adding multiples of each generator not already inside it.
inline std::set<Point> brute_span(std::uint32_t p, std::size_t n, const std::vector<Point>& gens) {
  std::set<Point> out{Point(n, 0)};
  for (const auto& g : gens) {
    if (out.contains(g)) continue;
    std::set<Point> next;
    for (const auto& v : out)
      for (std::uint32_t c = 0; c < p; ++c) {
        Point w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = (v[i] + c * g[i]) % p;
        next.insert(w);
      }
    out = std::move(next);
  }
  return out;
}

inline std::set<Point> elements(const Subspace<Residue>& u) {
  std::vector<Point> gens;
  for (const auto& v : u.basis_vectors()) gens.push_back(point(v));
  return brute_span(u.field().characteristic(), u.ambient_dim(), gens);
}

inline std::vector<Point> all_points(std::uint32_t p, std::size_t n) {
  std::vector<Point> out;
  Point v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t pos = n;
    while (pos > 0 && ++v[pos - 1] == p) v[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

/// Gaussian binomial [n choose k]_p.
inline std::uint64_t gaussian_binomial(std::uint64_t p, std::uint64_t n, std::uint64_t k) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t e = 0; e < n - i; ++e) a *= p;
    for (std::uint64_t e = 0; e < i + 1; ++e) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

/// |GL(n, p)| = prod_{i<n} (p^n - p^i).
inline std::uint64_t gl_order(std::uint64_t p, std::uint64_t n) {
  std::uint64_t pn = 1;
  for (std::uint64_t i = 0; i < n; ++i) pn *= p;
  std::uint64_t out = 1, pi = 1;
  for (std::uint64_t i = 0; i < n; ++i, pi *= p) out *= pn - pi;
  return out;
}

/// Naive product via explicit structure-constant sums; independent of
/// BilinearProduct::operator().
template <FieldElement S>
Vec<S> naive_mul(const BilinearProduct<S>& g, const Vec<S>& x, const Vec<S>& y) {
  const std::size_t n = g.dim();
  Vec<S> out(n, S::zero(g.field()));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[k] = out[k] + x[i] * y[j] * g.at(i, j, k);
  return out;
}

/// Builds a product from a list of (i, j, k, c) with 0-based indices.
template <FieldElement S>
BilinearProduct<S> table(const FieldSpec& f, std::size_t n,
                         std::initializer_list<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> entries) {
  BilinearProduct<S> p(f, n);
  for (const auto& [i, j, k, c] : entries) p.at(i, j, k) = S::from_integer(f, c);
  return p;
}

/// Upper-triangular 2x2 matrices with basis E11, E12, E22.
template <FieldElement S>
Algebra<S> upper_triangular(const FieldSpec& f) {
  return Algebra<S>(table<S>(f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}), {"E11", "E12", "E22"});
}

/// The inner derivation x -> [a, x] of the upper-triangular algebra.
template <FieldElement S>
Derivation<S> inner_derivation(const Algebra<S>& alg, std::size_t a) {
  const std::size_t n = alg.dim();
  Mat<S> m(alg.field(), n, n);
  const auto ea = unit_vec<S>(alg.field(), n, a);
  for (std::size_t j = 0; j < n; ++j) {
    const auto ej = unit_vec<S>(alg.field(), n, j);
    const auto img = alg.multiply(ea, ej) - alg.multiply(ej, ea);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return {m};
}

/// The four canonical forms plus II_k for several k.
template <FieldElement S>
std::vector<std::pair<std::string, Dialgebra<S>>> canonical_family(const FieldSpec& f) {
  std::vector<std::pair<std::string, Dialgebra<S>>> out;
  out.emplace_back("I", canonical::algebra_I<S>(f));
  out.emplace_back("III", canonical::algebra_III<S>(f));
  out.emplace_back("IV", canonical::algebra_IV<S>(f));
  const std::int64_t kmax = f.is_prime_field() ? std::int64_t(f.characteristic()) - 1 : 3;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const S ks = S::from_integer(f, k);
    out.emplace_back("II(" + ks.to_string() + ")", canonical::algebra_II<S>(f, ks));
  }
  if constexpr (std::is_same_v<S, Rational>) out.emplace_back("II(-1/2)", canonical::algebra_II<S>(f, q(-1, 2)));
  return out;
}

/// A varied pool of valid dialgebras over Q: random conjugates of the
/// canonical forms and of their opposites, differential dialgebras,
/// associative ones and one-product-zero zero-cubed ones.
inline std::vector<Dialgebra<Rational>> random_valid_rational(std::mt19937_64& rng, std::size_t count) {
  std::vector<Dialgebra<Rational>> seeds;
  for (auto& [name, d] : canonical_family<Rational>(kQ)) {
    seeds.push_back(d);
    seeds.push_back(opposite(d));
  }
  const auto ut = upper_triangular<Rational>(kQ);
  seeds.push_back(from_associative(ut));
  seeds.push_back(from_differential(ut, inner_derivation(ut, 1)));
  seeds.push_back(opposite(from_differential(ut, inner_derivation(ut, 1))));
  {
    ZeroCubedTriple<Rational> t(kQ, 1, 2);
    t.f(0, 1, 0) = q(1);
    t.f(1, 1, 0) = q(-2);
    const auto z = zero_cubed_build(t);
    seeds.emplace_back(BilinearProduct<Rational>(kQ, 3), z.product());
    seeds.emplace_back(z.product(), BilinearProduct<Rational>(kQ, 3));
  }
  std::vector<Dialgebra<Rational>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& seed = seeds[i % seeds.size()];
    out.push_back(change_basis(seed, random_invertible<Rational>(rng, kQ, seed.dim())));
  }
  return out;
}

}  // namespace dialg::testing
