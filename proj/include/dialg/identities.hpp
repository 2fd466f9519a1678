#pragma once

/**
 * @file identities.hpp
 * @brief Decision procedures for associativity, the dialgebra axioms and the
 * Leibniz identity, plus the affine space of bar-units.
 *
 * All laws are trilinear, so checking them on basis triples is complete.
 * Checks return every violating triple, not just the first.
 *
 * Dialgebra axioms, for all x, y, z:
 *   (1)  (x -| y) -| z = x -| (y |- z)
 *   (2)  (x |- y) -| z = x |- (y -| z)
 *   (3)  (x -| y) |- z = x |- (y |- z)
 * together with associativity of -| and of |-.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dialg/algebra.hpp"

namespace dialg {

enum class Law { AssocLeft, AssocRight, Ax1, Ax2, Ax3, Leibniz };

inline const char* to_string(Law law) {
  switch (law) {
    case Law::AssocLeft: return "assoc-left";
    case Law::AssocRight: return "assoc-right";
    case Law::Ax1: return "ax1";
    case Law::Ax2: return "ax2";
    case Law::Ax3: return "ax3";
    case Law::Leibniz: return "leibniz";
  }
  return "?";
}

template <FieldElement S>
struct ViolationReport {
  Law law;
  std::array<std::size_t, 3> witness;  ///< 0-based basis indices (i, j, k)
  Vec<S> residual;                     ///< LHS - RHS on that triple, never zero
};

namespace detail {

/// Row i, column j: coordinates of e_i * e_j, materialized as vectors.
template <FieldElement S>
std::vector<Vec<S>> basis_products(const BilinearProduct<S>& p) {
  std::vector<Vec<S>> out;
  out.reserve(p.dim() * p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j) {
      auto s = p.basis_product(i, j);
      out.emplace_back(s.begin(), s.end());
    }
  return out;
}

/// v * e_k
template <FieldElement S>
Vec<S> times_basis(const BilinearProduct<S>& p, const Vec<S>& v, std::size_t k) {
  Vec<S> out = zero_vec<S>(p.field(), p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a)
    if (!v[a].is_zero()) axpy(v[a], p.basis_product(a, k), std::span<S>(out));
  return out;
}

/// e_i * v
template <FieldElement S>
Vec<S> basis_times(const BilinearProduct<S>& p, std::size_t i, const Vec<S>& v) {
  Vec<S> out = zero_vec<S>(p.field(), p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a)
    if (!v[a].is_zero()) axpy(v[a], p.basis_product(i, a), std::span<S>(out));
  return out;
}

/// Checks (x o1 y) o2 z = x o3 (y o4 z) on all basis triples.
template <FieldElement S>
void check_law(Law law, const BilinearProduct<S>& o1, const BilinearProduct<S>& o2, const BilinearProduct<S>& o3,
               const BilinearProduct<S>& o4, std::vector<ViolationReport<S>>& out) {
  const std::size_t n = o1.dim();
  const auto p1 = basis_products(o1);
  const auto p4 = basis_products(o4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<S> lhs = times_basis(o2, p1[i * n + j], k);
        const Vec<S> rhs = basis_times(o3, i, p4[j * n + k]);
        Vec<S> res = std::move(lhs) - rhs;
        if (!is_zero(res)) out.push_back({law, {i, j, k}, std::move(res)});
      }
}

}  // namespace detail

template <FieldElement S>
std::vector<ViolationReport<S>> check_associative(const BilinearProduct<S>& p, Law law = Law::AssocLeft) {
  std::vector<ViolationReport<S>> out;
  detail::check_law(law, p, p, p, p, out);
  return out;
}

/// Every basis triple with (e_i e_j) e_k != e_i (e_j e_k).
template <FieldElement S>
std::vector<ViolationReport<S>> check_associative(const Algebra<S>& a, Law law = Law::AssocLeft) {
  return check_associative(a.product(), law);
}

template <FieldElement S>
bool is_associative(const BilinearProduct<S>& p) {
  return check_associative(p).empty();
}

/// Both associativities and axioms (1)-(3) on every basis triple.
template <FieldElement S>
std::vector<ViolationReport<S>> check_dialgebra(const Dialgebra<S>& d) {
  const auto& l = d.left();
  const auto& r = d.right();
  std::vector<ViolationReport<S>> out;
  detail::check_law(Law::AssocLeft, l, l, l, l, out);
  detail::check_law(Law::AssocRight, r, r, r, r, out);
  detail::check_law(Law::Ax1, l, l, l, r, out);
  detail::check_law(Law::Ax2, r, l, r, l, out);
  detail::check_law(Law::Ax3, l, r, r, r, out);
  return out;
}

template <FieldElement S>
bool is_dialgebra(const Dialgebra<S>& d) {
  return check_dialgebra(d).empty();
}

/// Basis triples where [[x,y],z] != [[x,z],y] + [x,[y,z]].
template <FieldElement S>
std::vector<ViolationReport<S>> check_leibniz(const Algebra<S>& a) {
  const auto& b = a.product();
  const std::size_t n = b.dim();
  const auto p = detail::basis_products(b);
  std::vector<ViolationReport<S>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<S> res = detail::times_basis(b, p[i * n + j], k) - detail::times_basis(b, p[i * n + k], j) -
                     detail::basis_times(b, i, p[j * n + k]);
        if (!is_zero(res)) out.push_back({Law::Leibniz, {i, j, k}, std::move(res)});
      }
  return out;
}

/// Bar-units form an affine subspace `point + direction`, or nothing.
template <FieldElement S>
struct BarUnitSet {
  std::optional<Vec<S>> point;
  Subspace<S> direction;

  bool empty() const noexcept { return !point.has_value(); }
};

/// Solves x -| e = x and e |- x = x for all basis x, linear in e.
template <FieldElement S>
BarUnitSet<S> bar_units(const Dialgebra<S>& d) {
  const std::size_t n = d.dim();
  const FieldSpec& f = d.field();
  // unknown e = sum_m c_m e_m; rows indexed by (condition, i, k)
  Mat<S> system(f, 2 * n * n, n);
  Vec<S> rhs = zero_vec<S>(f, 2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t r1 = i * n + k;
      const std::size_t r2 = n * n + i * n + k;
      for (std::size_t m = 0; m < n; ++m) {
        system(r1, m) = d.left().at(i, m, k);
        system(r2, m) = d.right().at(m, i, k);
      }
      if (i == k) rhs[r1] = rhs[r2] = S::one(f);
    }
  auto point = solve(system, rhs);
  if (!point) return {std::nullopt, Subspace<S>::zero(f, n)};
  return {std::move(point), kernel(system)};
}

}  // namespace dialg
