#pragma once

/**
 * @file constructions.hpp
 * @brief Ways of producing new (di)algebras from old ones.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dialg/identities.hpp"
#include "dialg/ideals.hpp"

namespace dialg {

/// Both products equal to the product of an associative algebra.
template <FieldElement S>
Dialgebra<S> from_associative(const Algebra<S>& a) {
  if (!check_associative(a).empty()) throw PreconditionError("algebra is not associative");
  return Dialgebra<S>(a.product(), a.product(), a.basis_names());
}

/// x -|' y := y |- x  and  x |-' y := y -| x.
template <FieldElement S>
Dialgebra<S> opposite(const Dialgebra<S>& d) {
  const std::size_t n = d.dim();
  BilinearProduct<S> left(d.field(), n), right(d.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        left.at(i, j, k) = d.right().at(j, i, k);
        right.at(i, j, k) = d.left().at(j, i, k);
      }
  return Dialgebra<S>(std::move(left), std::move(right), d.basis_names());
}

/// Data (Z, X, f) with f : X x X -> Z bilinear; f(a, b, c) is the coefficient
/// of z_c in f(x_a, x_b).
template <FieldElement S>
class ZeroCubedTriple {
 public:
  ZeroCubedTriple(FieldSpec field, std::size_t z_dim, std::size_t x_dim)
      : field_(field), z_dim_(z_dim), x_dim_(x_dim), f_(x_dim * x_dim * z_dim, S::zero(field)) {
    require_field<S>(field);
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t z_dim() const noexcept { return z_dim_; }
  std::size_t x_dim() const noexcept { return x_dim_; }

  S& f(std::size_t a, std::size_t b, std::size_t c) { return f_[(a * x_dim_ + b) * z_dim_ + c]; }
  const S& f(std::size_t a, std::size_t b, std::size_t c) const { return f_[(a * x_dim_ + b) * z_dim_ + c]; }

  /// f(x, x') for coordinate vectors of X, in Z coordinates.
  Vec<S> apply(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = zero_vec<S>(field_, z_dim_);
    for (std::size_t a = 0; a < x_dim_; ++a)
      for (std::size_t b = 0; b < x_dim_; ++b) {
        const S c = x[a] * y[b];
        if (c.is_zero()) continue;
        for (std::size_t z = 0; z < z_dim_; ++z) out[z] += c * f(a, b, z);
      }
    return out;
  }

  /// Dimension of the span of all values f(x, x').
  std::size_t image_rank() const {
    std::vector<Vec<S>> vals;
    for (std::size_t a = 0; a < x_dim_; ++a)
      for (std::size_t b = 0; b < x_dim_; ++b) {
        Vec<S> v;
        for (std::size_t z = 0; z < z_dim_; ++z) v.push_back(f(a, b, z));
        vals.push_back(std::move(v));
      }
    return Subspace<S>::span(field_, z_dim_, vals).dim();
  }

  const std::vector<S>& coefficients() const noexcept { return f_; }

  friend bool operator==(const ZeroCubedTriple&, const ZeroCubedTriple&) = default;

 private:
  FieldSpec field_;
  std::size_t z_dim_;
  std::size_t x_dim_;
  std::vector<S> f_;
};

/// Algebra on Z ⊕ X (Z first) with (z + x)(z' + x') = f(x, x').
template <FieldElement S>
Algebra<S> zero_cubed_build(const ZeroCubedTriple<S>& t) {
  const std::size_t z = t.z_dim(), x = t.x_dim();
  BilinearProduct<S> p(t.field(), z + x);
  for (std::size_t a = 0; a < x; ++a)
    for (std::size_t b = 0; b < x; ++b)
      for (std::size_t c = 0; c < z; ++c) p.at(z + a, z + b, c) = t.f(a, b, c);
  return Algebra<S>(std::move(p));
}

/// A linear endomorphism acting on column coordinates: d(e_j) = column j.
template <FieldElement S>
struct Derivation {
  Mat<S> matrix;

  Vec<S> operator()(const Vec<S>& v) const { return matrix.apply(v); }
};

template <FieldElement S>
bool is_derivation(const Algebra<S>& a, const Derivation<S>& d) {
  const std::size_t n = a.dim();
  if (d.matrix.rows() != n || d.matrix.cols() != n) throw DimensionError("derivation has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ei = unit_vec<S>(a.field(), n, i);
      const auto ej = unit_vec<S>(a.field(), n, j);
      const auto lhs = d(a.multiply(ei, ej));
      const auto rhs = a.multiply(d(ei), ej) + a.multiply(ei, d(ej));
      if (lhs != rhs) return false;
    }
  return true;
}

/// x -| y := x d(y),  x |- y := d(x) y  for a square-zero derivation d.
template <FieldElement S>
Dialgebra<S> from_differential(const Algebra<S>& a, const Derivation<S>& d) {
  if (!check_associative(a).empty()) throw PreconditionError("algebra is not associative");
  if (!is_derivation(a, d)) throw PreconditionError("map is not a derivation");
  if (!(d.matrix * d.matrix).is_zero()) throw PreconditionError("derivation does not square to zero");
  const std::size_t n = a.dim();
  BilinearProduct<S> left(a.field(), n), right(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ei = unit_vec<S>(a.field(), n, i);
      const auto ej = unit_vec<S>(a.field(), n, j);
      const auto l = a.multiply(ei, d(ej));
      const auto r = a.multiply(d(ei), ej);
      for (std::size_t k = 0; k < n; ++k) {
        left.at(i, j, k) = l[k];
        right.at(i, j, k) = r[k];
      }
    }
  return Dialgebra<S>(std::move(left), std::move(right), a.basis_names());
}

/// [x, y] := x -| y - y |- x. Only defined on valid dialgebras.
template <FieldElement S>
Algebra<S> leibniz_bracket(const Dialgebra<S>& d) {
  if (!check_dialgebra(d).empty()) throw PreconditionError("input is not an associative dialgebra");
  const std::size_t n = d.dim();
  BilinearProduct<S> br(d.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) br.at(i, j, k) = d.left().at(i, j, k) - d.right().at(j, i, k);
  return Algebra<S>(std::move(br), d.basis_names());
}

/// [x, y] := xy - yx.
template <FieldElement S>
Algebra<S> commutator_algebra(const Algebra<S>& a) {
  const std::size_t n = a.dim();
  BilinearProduct<S> br(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) br.at(i, j, k) = a.product().at(i, j, k) - a.product().at(j, i, k);
  return Algebra<S>(std::move(br), a.basis_names());
}

template <FieldElement S>
struct Quotient {
  Dialgebra<S> algebra;
  Mat<S> projection;  ///< (dim - dim I) x dim, old coordinates -> new coordinates
};

/// A / I on the complement spanned by the non-pivot coordinates of I.
template <FieldElement S>
Quotient<S> quotient(const Dialgebra<S>& d, const Subspace<S>& ideal) {
  if (!is_ideal(d, ideal)) throw PreconditionError("subspace is not an ideal");
  const std::size_t n = d.dim();
  const auto keep = ideal.non_pivots();
  const std::size_t m = keep.size();
  auto project = [&](const Vec<S>& v) {
    const auto reduced = ideal.reduce(v);
    Vec<S> out;
    out.reserve(m);
    for (auto c : keep) out.push_back(reduced[c]);
    return out;
  };
  Mat<S> proj(d.field(), m, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = project(unit_vec<S>(d.field(), n, j));
    for (std::size_t i = 0; i < m; ++i) proj(i, j) = col[i];
  }
  BilinearProduct<S> left(d.field(), m), right(d.field(), m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto ea = unit_vec<S>(d.field(), n, keep[a]);
      const auto eb = unit_vec<S>(d.field(), n, keep[b]);
      const auto l = project(d.left()(ea, eb));
      const auto r = project(d.right()(ea, eb));
      for (std::size_t c = 0; c < m; ++c) {
        left.at(a, b, c) = l[c];
        right.at(a, b, c) = r[c];
      }
    }
  std::vector<std::string> names;
  if (!d.basis_names().empty())
    for (auto c : keep) names.push_back(d.basis_names()[c]);
  return {Dialgebra<S>(std::move(left), std::move(right), std::move(names)), std::move(proj)};
}

}  // namespace dialg
