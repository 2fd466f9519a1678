#pragma once

/**
 * @file algebra.hpp
 * @brief Structure-constant model of algebras and dialgebras.
 *
 * A `BilinearProduct` is the dense tensor gamma with
 *   e_i * e_j = sum_k gamma(i, j, k) e_k,
 * indices 0-based. An `Algebra` carries one product; a `Dialgebra` carries the
 * left product (x -| y) and the right product (x |- y). Neither type enforces
 * any identity: validity is decided by the functions in identities.hpp.
 *
 * Basis changes use the row convention: the rows of a change-of-basis matrix
 * P are the new basis vectors written in old coordinates.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dialg/linalg.hpp"

namespace dialg {

enum class ProductTag { Left, Right };

inline const char* to_string(ProductTag t) { return t == ProductTag::Left ? "left" : "right"; }

template <FieldElement S>
class BilinearProduct {
 public:
  BilinearProduct(FieldSpec field, std::size_t dim)
      : field_(field), dim_(dim), gamma_(dim * dim * dim, S::zero(field)) {
    require_field<S>(field);
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  S& at(std::size_t i, std::size_t j, std::size_t k) { return gamma_[index(i, j, k)]; }
  const S& at(std::size_t i, std::size_t j, std::size_t k) const { return gamma_[index(i, j, k)]; }

  /// Coordinates of e_i * e_j.
  std::span<const S> basis_product(std::size_t i, std::size_t j) const {
    return {gamma_.data() + index(i, j, 0), dim_};
  }

  /// Bilinear extension to arbitrary coordinate vectors.
  Vec<S> operator()(const Vec<S>& x, const Vec<S>& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("operand length does not match algebra dimension");
    Vec<S> out = zero_vec<S>(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        axpy(x[i] * y[j], basis_product(i, j), std::span<S>(out));
      }
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(gamma_.begin(), gamma_.end(), [](const S& x) { return x.is_zero(); });
  }

  const std::vector<S>& coefficients() const noexcept { return gamma_; }

  friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

  FieldSpec field_;
  std::size_t dim_;
  std::vector<S> gamma_;
};

namespace detail {

inline void check_names(const std::vector<std::string>& names, std::size_t dim) {
  if (!names.empty() && names.size() != dim) throw DimensionError("basis name count does not match dimension");
}

}  // namespace detail

template <FieldElement S>
class Algebra {
 public:
  explicit Algebra(BilinearProduct<S> product, std::vector<std::string> basis_names = {})
      : product_(std::move(product)), names_(std::move(basis_names)) {
    detail::check_names(names_, product_.dim());
  }

  const FieldSpec& field() const noexcept { return product_.field(); }
  std::size_t dim() const noexcept { return product_.dim(); }
  const BilinearProduct<S>& product() const noexcept { return product_; }
  BilinearProduct<S>& product() noexcept { return product_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) const { return product_(x, y); }

  /// Structural equality of the tensors; basis names are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.product_ == b.product_; }

 private:
  BilinearProduct<S> product_;
  std::vector<std::string> names_;
};

template <FieldElement S>
class Dialgebra {
 public:
  Dialgebra(BilinearProduct<S> left, BilinearProduct<S> right, std::vector<std::string> basis_names = {})
      : left_(std::move(left)), right_(std::move(right)), names_(std::move(basis_names)) {
    if (left_.field() != right_.field() || left_.dim() != right_.dim())
      throw DimensionError("left and right products disagree on field or dimension");
    detail::check_names(names_, left_.dim());
  }

  /// Both products zero.
  static Dialgebra trivial(const FieldSpec& f, std::size_t dim) {
    return Dialgebra(BilinearProduct<S>(f, dim), BilinearProduct<S>(f, dim));
  }

  const FieldSpec& field() const noexcept { return left_.field(); }
  std::size_t dim() const noexcept { return left_.dim(); }

  const BilinearProduct<S>& left() const noexcept { return left_; }
  const BilinearProduct<S>& right() const noexcept { return right_; }
  BilinearProduct<S>& left() noexcept { return left_; }
  BilinearProduct<S>& right() noexcept { return right_; }

  const BilinearProduct<S>& product(ProductTag t) const noexcept { return t == ProductTag::Left ? left_ : right_; }
  BilinearProduct<S>& product(ProductTag t) noexcept { return t == ProductTag::Left ? left_ : right_; }

  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  void set_basis_names(std::vector<std::string> names) {
    detail::check_names(names, dim());
    names_ = std::move(names);
  }

  friend bool operator==(const Dialgebra& a, const Dialgebra& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  BilinearProduct<S> left_;
  BilinearProduct<S> right_;
  std::vector<std::string> names_;
};

template <FieldElement S>
Vec<S> multiply(const Dialgebra<S>& d, ProductTag tag, const Vec<S>& x, const Vec<S>& y) {
  return d.product(tag)(x, y);
}

/// Span of all products u_a * v_b of basis vectors.
template <FieldElement S>
Subspace<S> product_subspace(const BilinearProduct<S>& prod, const Subspace<S>& u, const Subspace<S>& v) {
  u.check_compatible(v);
  if (u.ambient_dim() != prod.dim() || u.field() != prod.field())
    throw DimensionError("subspace does not live in the algebra");
  std::vector<Vec<S>> gens;
  for (const auto& a : u.basis_vectors())
    for (const auto& b : v.basis_vectors()) gens.push_back(prod(a, b));
  return Subspace<S>::span(prod.field(), prod.dim(), gens);
}

template <FieldElement S>
Subspace<S> product_subspace(const Dialgebra<S>& d, ProductTag tag, const Subspace<S>& u, const Subspace<S>& v) {
  return product_subspace(d.product(tag), u, v);
}

template <FieldElement S>
Subspace<S> square(const BilinearProduct<S>& prod) {
  const auto all = Subspace<S>::whole(prod.field(), prod.dim());
  return product_subspace(prod, all, all);
}

template <FieldElement S>
Algebra<S> as_single(const Dialgebra<S>& d, ProductTag tag) {
  return Algebra<S>(d.product(tag), d.basis_names());
}

/// Structure constants of `prod` in the basis given by the rows of `basis`.
template <FieldElement S>
BilinearProduct<S> change_basis(const BilinearProduct<S>& prod, const Mat<S>& basis) {
  const std::size_t n = prod.dim();
  if (basis.rows() != n || basis.cols() != n) throw DimensionError("change of basis has wrong shape");
  const auto inv = inverse(basis);
  if (!inv) throw PreconditionError("change of basis is not invertible");
  const auto rows = basis.row_vectors();
  BilinearProduct<S> out(prod.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<S> p = prod(rows[i], rows[j]);
      // row vector p times inv gives coordinates in the new basis
      for (std::size_t k = 0; k < n; ++k) {
        S c = S::zero(prod.field());
        for (std::size_t m = 0; m < n; ++m)
          if (!p[m].is_zero()) c += p[m] * (*inv)(m, k);
        out.at(i, j, k) = c;
      }
    }
  return out;
}

template <FieldElement S>
Algebra<S> change_basis(const Algebra<S>& a, const Mat<S>& basis) {
  return Algebra<S>(change_basis(a.product(), basis), a.basis_names());
}

template <FieldElement S>
Dialgebra<S> change_basis(const Dialgebra<S>& d, const Mat<S>& basis) {
  return Dialgebra<S>(change_basis(d.left(), basis), change_basis(d.right(), basis), d.basis_names());
}

/// The structure B on the same space for which the linear map T (acting on
/// column coordinates) is an isomorphism d -> B.
template <FieldElement S>
Dialgebra<S> transport(const Dialgebra<S>& d, const Mat<S>& t) {
  const auto inv = inverse(t);
  if (!inv) throw PreconditionError("transport along a singular map");
  return change_basis(d, inv->transpose());
}

}  // namespace dialg
