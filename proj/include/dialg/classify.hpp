#pragma once

/**
 * @file classify.hpp
 * @brief Invariants, isomorphism search and the classification of
 * two-dimensional associative dialgebras.
 *
 * Every two-dimensional associative dialgebra is exactly one of
 *
 *  - TrivialBoth         both products zero,
 *  - FromAssociative     -| and |- coincide, are not both zero, and are not
 *                        the zero-cubed product s * s = r (that case is II_1),
 *  - ZeroCubedLeftZero   -| = 0, |- a nonzero zero-cubed product,
 *  - ZeroCubedRightZero  |- = 0, -| a nonzero zero-cubed product,
 *  - I, II_k (k != 0), III, IV.
 *
 * The canonical tables use the basis (r, s) = (e_1, e_2) with Ann(A) = F r:
 *
 *           -|                     |-
 *   I       s-|s = s               s|-r = r, s|-s = s
 *   II_k    s-|s = r               s|-s = k r
 *   III     r-|s = r, s-|s = s     s|-s = s
 *   IV      r-|s = r, s-|s = s     s|-r = r, s|-s = s
 *
 * and the nonzero zero-cubed product is s * s = r.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "dialg/structure.hpp"

namespace dialg {

// ---------------------------------------------------------------------------
// Fingerprints
// ---------------------------------------------------------------------------

struct Fingerprint {
  std::size_t dim_left_square;   ///< dim(A -| A)
  std::size_t dim_right_square;  ///< dim(A |- A)
  std::size_t dim_rann_left;
  std::size_t dim_lann_left;
  std::size_t dim_rann_right;
  std::size_t dim_lann_right;
  std::size_t dim_ann;
  bool products_equal;
  bool has_bar_unit;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

template <FieldElement S>
Fingerprint fingerprint(const Dialgebra<S>& d) {
  const auto ann = annihilators(d);
  return {square(d.left()).dim(),
          square(d.right()).dim(),
          ann.rann_left.dim(),
          ann.lann_left.dim(),
          ann.rann_right.dim(),
          ann.lann_right.dim(),
          ann.ann.dim(),
          d.left() == d.right(),
          !bar_units(d).empty()};
}

// ---------------------------------------------------------------------------
// Isomorphisms
// ---------------------------------------------------------------------------

/// T(x * y) = T(x) * T(y) for both products, T acting on column coordinates.
template <FieldElement S>
bool is_homomorphism(const Dialgebra<S>& a, const Dialgebra<S>& b, const Mat<S>& t) {
  const std::size_t n = a.dim();
  std::vector<Vec<S>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(t.col(i));
  for (auto tag : {ProductTag::Left, ProductTag::Right}) {
    const auto& pa = a.product(tag);
    const auto& pb = b.product(tag);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto src = pa.basis_product(i, j);
        if (t.apply(Vec<S>(src.begin(), src.end())) != pb(images[i], images[j])) return false;
      }
  }
  return true;
}

namespace detail {

inline void check_search(const FieldSpec& f, std::size_t n, std::uint64_t bound) {
  if (!bounded_power(f.characteristic(), n * n, bound))
    throw SearchBoundExceeded("GL(" + std::to_string(n) + ", " + f.to_string() + ") search exceeds the bound of " +
                              std::to_string(bound) + " candidates");
}

}  // namespace detail

/// Every invertible T with is_homomorphism(a, b, T), in lexicographic order.
inline std::vector<Mat<Residue>> all_isomorphisms(const Dialgebra<Residue>& a, const Dialgebra<Residue>& b,
                                                  const std::vector<Mat<Residue>>& group) {
  std::vector<Mat<Residue>> out;
  for (const auto& t : group)
    if (is_homomorphism(a, b, t)) out.push_back(t);
  return out;
}

template <FieldElement S>
std::optional<Mat<S>> are_isomorphic(const Dialgebra<S>& a, const Dialgebra<S>& b,
                                     std::uint64_t bound = kDefaultSearchBound);

template <FieldElement S>
std::vector<Mat<S>> automorphism_group(const Dialgebra<S>& d, std::uint64_t bound = kDefaultSearchBound) {
  if constexpr (!std::is_same_v<S, Residue>) {
    throw Unsupported("automorphism groups are only computed over finite fields");
  } else {
    detail::check_search(d.field(), d.dim(), bound);
    return all_isomorphisms(d, d, general_linear_group(d.field(), d.dim(), bound));
  }
}

// ---------------------------------------------------------------------------
// Parametric tables
// ---------------------------------------------------------------------------

/// The general two-dimensional table with Ann(A) = F r:
///   r -| s = x1 r,  s -| s = x2 r + x3 s,  s |- r = x4 r,  s |- s = x5 r + x6 s.
template <FieldElement S>
struct ParamTable {
  std::array<S, 6> x;

  Dialgebra<S> to_dialgebra(const FieldSpec& f) const {
    BilinearProduct<S> l(f, 2), r(f, 2);
    l.at(0, 1, 0) = x[0];
    l.at(1, 1, 0) = x[1];
    l.at(1, 1, 1) = x[2];
    r.at(1, 0, 0) = x[3];
    r.at(1, 1, 0) = x[4];
    r.at(1, 1, 1) = x[5];
    return Dialgebra<S>(std::move(l), std::move(r), {"r", "s"});
  }
};

inline constexpr std::size_t kDim2ConstraintCount = 11;

/// The polynomial system obtained by imposing both associativities and the
/// three axioms on a ParamTable. All residuals vanish iff the table is valid.
template <FieldElement S>
std::array<S, kDim2ConstraintCount> dim2_constraints(const ParamTable<S>& t) {
  const auto& [x1, x2, x3, x4, x5, x6] = t.x;
  return {x1 * x2,
          x4 * x5,
          x1 * (x1 - x3),
          x4 * (x3 - x4),
          x1 * (x1 - x6),
          x2 * (x1 + x3 - x6),
          x1 * x5 + x2 * x6 - x2 * x4 - x3 * x5,
          x3 * (x3 - x6),
          x4 * (x4 - x6),
          x6 * (x3 - x6),
          x5 * (x3 - x4 - x6)};
}

// ---------------------------------------------------------------------------
// Canonical tables
// ---------------------------------------------------------------------------

enum class ClassKind { TrivialBoth, FromAssociative, ZeroCubedLeftZero, ZeroCubedRightZero, I, II, III, IV };

enum class ZeroCubedType { Trivial, SquareType };

namespace canonical {

template <FieldElement S>
Dialgebra<S> algebra_I(const FieldSpec& f) {
  auto d = Dialgebra<S>::trivial(f, 2);
  d.left().at(1, 1, 1) = S::one(f);
  d.right().at(1, 0, 0) = S::one(f);
  d.right().at(1, 1, 1) = S::one(f);
  d.set_basis_names({"r", "s"});
  return d;
}

template <FieldElement S>
Dialgebra<S> algebra_II(const FieldSpec& f, const S& k) {
  auto d = Dialgebra<S>::trivial(f, 2);
  d.left().at(1, 1, 0) = S::one(f);
  d.right().at(1, 1, 0) = k;
  d.set_basis_names({"r", "s"});
  return d;
}

template <FieldElement S>
Dialgebra<S> algebra_III(const FieldSpec& f) {
  auto d = Dialgebra<S>::trivial(f, 2);
  d.left().at(0, 1, 0) = S::one(f);
  d.left().at(1, 1, 1) = S::one(f);
  d.right().at(1, 1, 1) = S::one(f);
  d.set_basis_names({"r", "s"});
  return d;
}

template <FieldElement S>
Dialgebra<S> algebra_IV(const FieldSpec& f) {
  auto d = algebra_III<S>(f);
  d.right().at(1, 0, 0) = S::one(f);
  return d;
}

/// (λ, μ)(λ', μ') = (μμ', 0): the nonzero two-dimensional zero-cubed algebra.
template <FieldElement S>
BilinearProduct<S> square_type(const FieldSpec& f) {
  BilinearProduct<S> p(f, 2);
  p.at(1, 1, 0) = S::one(f);
  return p;
}

}  // namespace canonical

template <FieldElement S>
struct ClassLabel {
  ClassKind kind;
  std::optional<S> k;                       ///< only for II
  std::optional<ZeroCubedType> sublabel;    ///< only for the zero-cubed kinds
  Mat<S> witness;                           ///< rows: new basis in input coordinates
  Dialgebra<S> canonical;                   ///< change_basis(input, witness)

  std::string name() const {
    switch (kind) {
      case ClassKind::TrivialBoth: return "TrivialBoth";
      case ClassKind::FromAssociative: return "FromAssociative";
      case ClassKind::ZeroCubedLeftZero: return "ZeroCubedLeftZero";
      case ClassKind::ZeroCubedRightZero: return "ZeroCubedRightZero";
      case ClassKind::I: return "I";
      case ClassKind::II: return "II(" + k->to_string() + ")";
      case ClassKind::III: return "III";
      case ClassKind::IV: return "IV";
    }
    return "?";
  }

  /// Same class: same kind and, for II, the same k.
  bool same_class(const ClassLabel& other) const { return kind == other.kind && k == other.k; }
};

inline const char* to_string(ZeroCubedType t) { return t == ZeroCubedType::Trivial ? "Trivial" : "SquareType"; }

namespace detail {

/// Witness taking a nonzero two-dimensional zero-cubed product to s * s = r.
template <FieldElement S>
Mat<S> square_type_witness(const BilinearProduct<S>& p) {
  const auto dec = zero_cubed_decompose(Algebra<S>(p));
  if (dec.triple.z_dim() != 1 || dec.triple.x_dim() != 1)
    throw InternalError("nonzero two-dimensional zero-cubed algebra with annihilator of dimension != 1");
  const S c = dec.triple.f(0, 0, 0);
  if (c.is_zero()) throw InternalError("zero-cubed decomposition lost the product");
  Mat<S> m = Mat<S>::identity(p.field(), 2);
  m(0, 0) = c;  // scale z so that x * x = z
  return m * dec.witness;
}

template <FieldElement S>
ClassLabel<S> finish(ClassKind kind, std::optional<S> k, std::optional<ZeroCubedType> sub, const Dialgebra<S>& d,
                     Mat<S> witness, Dialgebra<S> expected) {
  auto actual = change_basis(d, witness);
  if (!(actual == expected)) throw InternalError("classification witness does not reproduce the canonical table");
  actual.set_basis_names(expected.basis_names());
  return {kind, std::move(k), sub, std::move(witness), std::move(actual)};
}

}  // namespace detail

/// Places a valid two-dimensional dialgebra in exactly one class, with a
/// change of basis to the class's canonical table.
template <FieldElement S>
ClassLabel<S> classify_dim2(const Dialgebra<S>& d) {
  if (d.dim() != 2) throw PreconditionError("classify_dim2 needs a two-dimensional dialgebra");
  if (!check_dialgebra(d).empty()) throw PreconditionError("input is not an associative dialgebra");
  const FieldSpec& f = d.field();
  const auto one = S::one(f);
  const auto id = Mat<S>::identity(f, 2);
  const bool left_zero = d.left().is_zero();
  const bool right_zero = d.right().is_zero();

  if (left_zero && right_zero) return detail::finish<S>(ClassKind::TrivialBoth, {}, ZeroCubedType::Trivial, d, id, d);
  if (d.left() == d.right()) {
    // II_1 is the one member of the family whose products coincide; it is
    // reported as II(1) rather than FromAssociative.
    if (is_zero_cubed(d.left()))
      return detail::finish<S>(ClassKind::II, one, {}, d, detail::square_type_witness(d.left()),
                               canonical::algebra_II<S>(f, one));
    return detail::finish<S>(ClassKind::FromAssociative, {}, {}, d, id, d);
  }
  if (left_zero) {
    Dialgebra<S> canon(BilinearProduct<S>(f, 2), canonical::square_type<S>(f), {"r", "s"});
    return detail::finish<S>(ClassKind::ZeroCubedLeftZero, {}, ZeroCubedType::SquareType, d,
                             detail::square_type_witness(d.right()), std::move(canon));
  }
  if (right_zero) {
    Dialgebra<S> canon(canonical::square_type<S>(f), BilinearProduct<S>(f, 2), {"r", "s"});
    return detail::finish<S>(ClassKind::ZeroCubedRightZero, {}, ZeroCubedType::SquareType, d,
                             detail::square_type_witness(d.left()), std::move(canon));
  }

  // Both products nonzero and distinct: Ann(A) is a line F r.
  const auto ann = annihilators(d).ann;
  if (ann.dim() != 1) throw InternalError("annihilator of a proper two-dimensional dialgebra is not a line");
  Mat<S> base(f, 2, 2);
  for (std::size_t c = 0; c < 2; ++c) base(0, c) = ann.basis()(0, c);
  base(1, ann.non_pivots().front()) = one;

  const auto t = change_basis(d, base);
  const ParamTable<S> params{{t.left().at(0, 1, 0), t.left().at(1, 1, 0), t.left().at(1, 1, 1),
                              t.right().at(1, 0, 0), t.right().at(1, 1, 0), t.right().at(1, 1, 1)}};
  if (!(params.to_dialgebra(f) == t)) throw InternalError("table in the (r, s) basis is not of parametric shape");
  for (const auto& res : dim2_constraints(params))
    if (!res.is_zero()) throw InternalError("parametric table violates the dimension-two constraint system");
  const auto& [x1, x2, x3, x4, x5, x6] = params.x;

  // m: rows are the new (r', s') in (r, s) coordinates
  Mat<S> m = Mat<S>::identity(f, 2);
  auto done = [&](ClassKind kind, std::optional<S> k, Dialgebra<S> canon) {
    return detail::finish<S>(kind, std::move(k), {}, d, m * base, std::move(canon));
  };
  if (x1.is_zero() && x2.is_zero()) {
    // x3 = x6 != 0, x5 = 0, x4 = x3 (x4 = 0 would make the products equal)
    m(1, 1) = x3.inverse();
    return done(ClassKind::I, {}, canonical::algebra_I<S>(f));
  }
  if (x1.is_zero()) {
    if (x4.is_zero()) {
      // x3 = x6 = 0; rescale r to x2 r
      m(0, 0) = x2;
      const S k = x5 / x2;
      return done(ClassKind::II, k, canonical::algebra_II<S>(f, k));
    }
    // x5 = 0, x3 = x4 = x6 != 0: s' = (x2 / x3^2) r + x3^{-1} s
    m(1, 0) = x2 / (x3 * x3);
    m(1, 1) = x3.inverse();
    return done(ClassKind::I, {}, canonical::algebra_I<S>(f));
  }
  // x1 != 0: x2 = 0, x1 = x3 = x6
  if (x4.is_zero()) {
    // s' = x6^{-2} x5 r + x6^{-1} s
    m(1, 0) = x5 / (x6 * x6);
    m(1, 1) = x6.inverse();
    return done(ClassKind::III, {}, canonical::algebra_III<S>(f));
  }
  m(1, 1) = x1.inverse();
  return done(ClassKind::IV, {}, canonical::algebra_IV<S>(f));
}

namespace detail {

template <FieldElement S>
std::optional<Mat<S>> isomorphic_over_rationals(const Dialgebra<S>& a, const Dialgebra<S>& b) {
  const FieldSpec& f = a.field();
  if (a.dim() == 1) {
    // T = [t]: t * c_a = t^2 * c_b for both products
    const S la = a.left().at(0, 0, 0), ra = a.right().at(0, 0, 0);
    const S lb = b.left().at(0, 0, 0), rb = b.right().at(0, 0, 0);
    S t = S::one(f);
    if (!lb.is_zero()) t = la / lb;
    else if (!rb.is_zero()) t = ra / rb;
    if (t.is_zero()) return std::nullopt;
    Mat<S> m(f, 1, 1);
    m(0, 0) = t;
    if (is_homomorphism(a, b, m)) return m;
    return std::nullopt;
  }
  if (a.dim() != 2) throw Unsupported("isomorphism over Q is only decided up to dimension 2");
  if (!is_dialgebra(a) || !is_dialgebra(b)) throw Unsupported("isomorphism over Q needs valid dialgebras");
  const auto la = classify_dim2(a);
  const auto lb = classify_dim2(b);
  if (!la.same_class(lb)) return std::nullopt;
  if (la.kind == ClassKind::FromAssociative)
    throw Unsupported("isomorphism of associative algebras over Q is not classified");
  // witness rows W: change_basis(x, W) = canonical; T maps W_a rows to W_b rows
  const auto wa_t_inv = inverse(la.witness.transpose());
  Mat<S> t = lb.witness.transpose() * *wa_t_inv;
  if (!is_homomorphism(a, b, t)) throw InternalError("composed canonical witnesses are not an isomorphism");
  return t;
}

}  // namespace detail

/// First isomorphism a -> b found, or nothing.
template <FieldElement S>
std::optional<Mat<S>> are_isomorphic(const Dialgebra<S>& a, const Dialgebra<S>& b, std::uint64_t bound) {
  if (a.field() != b.field() || a.dim() != b.dim()) return std::nullopt;
  if (a == b) return Mat<S>::identity(a.field(), a.dim());
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  if constexpr (std::is_same_v<S, Residue>) {
    detail::check_search(a.field(), a.dim(), bound);
    for (const auto& t : general_linear_group(a.field(), a.dim(), bound))
      if (is_homomorphism(a, b, t)) return t;
    return std::nullopt;
  } else {
    return detail::isomorphic_over_rationals(a, b);
  }
}

}  // namespace dialg
