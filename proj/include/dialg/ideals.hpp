#pragma once

/**
 * @file ideals.hpp
 * @brief One-sided annihilators, ideal membership and ideal closure.
 *
 *   Rann-|(A) = {x : A -| x = 0}     Lann-|(A) = {x : x -| A = 0}
 *   Rann|-(A) = {x : A |- x = 0}     Lann|-(A) = {x : x |- A = 0}
 *   Ann(A)    = Rann-|(A) ∩ Lann|-(A)
 */

#include <cstddef>
#include <vector>

#include "dialg/algebra.hpp"

namespace dialg {

/// {x : e_i * x = 0 for all i}
template <FieldElement S>
Subspace<S> right_annihilator(const BilinearProduct<S>& p) {
  const std::size_t n = p.dim();
  Mat<S> m(p.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x) m(i * n + k, x) = p.at(i, x, k);
  return kernel(m);
}

/// {x : x * e_i = 0 for all i}
template <FieldElement S>
Subspace<S> left_annihilator(const BilinearProduct<S>& p) {
  const std::size_t n = p.dim();
  Mat<S> m(p.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x) m(i * n + k, x) = p.at(x, i, k);
  return kernel(m);
}

/// Two-sided annihilator {x : xA = Ax = 0} of a single product.
template <FieldElement S>
Subspace<S> annihilator(const BilinearProduct<S>& p) {
  return intersect(left_annihilator(p), right_annihilator(p));
}

template <FieldElement S>
struct AnnihilatorProfile {
  Subspace<S> rann_left;   ///< Rann-|
  Subspace<S> lann_left;   ///< Lann-|
  Subspace<S> rann_right;  ///< Rann|-
  Subspace<S> lann_right;  ///< Lann|-
  Subspace<S> ann;         ///< Rann-| ∩ Lann|-
};

template <FieldElement S>
AnnihilatorProfile<S> annihilators(const Dialgebra<S>& d) {
  auto rl = right_annihilator(d.left());
  auto ll = left_annihilator(d.left());
  auto rr = right_annihilator(d.right());
  auto lr = left_annihilator(d.right());
  auto ann = intersect(rl, lr);
  return {std::move(rl), std::move(ll), std::move(rr), std::move(lr), std::move(ann)};
}

/// u * A and A * u both inside u.
template <FieldElement S>
bool is_ideal(const BilinearProduct<S>& p, const Subspace<S>& u) {
  const auto all = Subspace<S>::whole(p.field(), p.dim());
  return u.contains(product_subspace(p, u, all)) && u.contains(product_subspace(p, all, u));
}

template <FieldElement S>
bool is_ideal(const Algebra<S>& a, const Subspace<S>& u) {
  return is_ideal(a.product(), u);
}

/// Two-sided ideal for both products.
template <FieldElement S>
bool is_ideal(const Dialgebra<S>& d, const Subspace<S>& u) {
  if (u.ambient_dim() != d.dim() || u.field() != d.field())
    throw DimensionError("subspace does not live in the dialgebra");
  return is_ideal(d.left(), u) && is_ideal(d.right(), u);
}

/// Smallest subspace containing `seed` and closed under multiplication by A
/// on either side, for every product in `products`.
template <FieldElement S>
Subspace<S> generated_ideal(const std::vector<const BilinearProduct<S>*>& products, Subspace<S> seed) {
  if (products.empty()) return seed;
  const auto& first = *products.front();
  const auto all = Subspace<S>::whole(first.field(), first.dim());
  while (true) {
    Subspace<S> next = seed;
    for (const auto* p : products)
      next = span_sum(span_sum(next, product_subspace(*p, seed, all)), product_subspace(*p, all, seed));
    if (next.dim() == seed.dim()) return next;
    seed = std::move(next);
  }
}

template <FieldElement S>
Subspace<S> generated_ideal(const Dialgebra<S>& d, const Subspace<S>& seed) {
  if (seed.ambient_dim() != d.dim() || seed.field() != d.field())
    throw DimensionError("seed does not live in the dialgebra");
  return generated_ideal<S>({&d.left(), &d.right()}, seed);
}

template <FieldElement S>
Subspace<S> generated_ideal(const Algebra<S>& a, const Subspace<S>& seed) {
  return generated_ideal<S>({&a.product()}, seed);
}

}  // namespace dialg
