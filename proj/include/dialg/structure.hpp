#pragma once

/**
 * @file structure.hpp
 * @brief Ring-theoretic predicates (simple, semiprime, prime) and the
 * decomposition theory of zero-cubed algebras.
 *
 * Over GF(p) the predicates are decided exactly by enumerating every subspace
 * of F^n and keeping the two-sided ideals. Over Q the lattice is infinite and
 * the predicates report `TriState::Unsupported`.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "dialg/constructions.hpp"

namespace dialg {

enum class TriState { False, True, Unsupported };

inline TriState tri(bool b) { return b ? TriState::True : TriState::False; }

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::False: return "false";
    case TriState::True: return "true";
    case TriState::Unsupported: return "unsupported";
  }
  return "?";
}

/// All two-sided ideals of a single product over GF(p).
inline std::vector<Subspace<Residue>> ideals(const BilinearProduct<Residue>& p,
                                             std::uint64_t bound = kDefaultSearchBound) {
  if (!bounded_power(p.field().characteristic(), p.dim(), bound))
    throw SearchBoundExceeded("ideal enumeration exceeds the search bound");
  std::vector<Subspace<Residue>> out;
  for_each_subspace(p.field(), p.dim(), [&](const Subspace<Residue>& u) {
    if (is_ideal(p, u)) out.push_back(u);
    return true;
  });
  return out;
}

struct RingProperties {
  bool simple;     ///< A·A != 0 and the only ideals are 0 and A
  bool semiprime;  ///< no nonzero ideal I with I·I = 0
  bool prime;      ///< no nonzero ideals I, J with I·J = 0
};

inline RingProperties ring_properties(const BilinearProduct<Residue>& p, std::uint64_t bound = kDefaultSearchBound) {
  const auto ids = ideals(p, bound);
  RingProperties out{true, true, true};
  const auto all = Subspace<Residue>::whole(p.field(), p.dim());
  out.simple = p.dim() > 0 && !product_subspace(p, all, all).is_zero() && ids.size() == 2;
  for (const auto& i : ids) {
    if (i.is_zero()) continue;
    if (product_subspace(p, i, i).is_zero()) out.semiprime = false;
    for (const auto& j : ids) {
      if (j.is_zero()) continue;
      if (product_subspace(p, i, j).is_zero()) {
        out.prime = false;
        break;
      }
    }
  }
  return out;
}

struct StructureFlags {
  bool products_equal;
  TriState simple_left, simple_right;
  TriState semiprime_left, semiprime_right;
  TriState prime_left, prime_right;
};

template <FieldElement S>
StructureFlags structure_flags(const Dialgebra<S>& d, std::uint64_t bound = kDefaultSearchBound) {
  StructureFlags out{d.left() == d.right(), TriState::Unsupported, TriState::Unsupported, TriState::Unsupported,
                     TriState::Unsupported, TriState::Unsupported, TriState::Unsupported};
  if constexpr (std::is_same_v<S, Residue>) {
    const auto l = ring_properties(d.left(), bound);
    const auto r = ring_properties(d.right(), bound);
    out.simple_left = tri(l.simple);
    out.simple_right = tri(r.simple);
    out.semiprime_left = tri(l.semiprime);
    out.semiprime_right = tri(r.semiprime);
    out.prime_left = tri(l.prime);
    out.prime_right = tri(r.prime);
  }
  return out;
}

/// A·(A·A) = (A·A)·A = 0 for an associative product.
template <FieldElement S>
bool is_zero_cubed(const BilinearProduct<S>& p) {
  if (!is_associative(p)) return false;
  const auto all = Subspace<S>::whole(p.field(), p.dim());
  const auto sq = product_subspace(p, all, all);
  return product_subspace(p, all, sq).is_zero() && product_subspace(p, sq, all).is_zero();
}

template <FieldElement S>
struct ZeroCubedDecomposition {
  ZeroCubedTriple<S> triple;
  /// Rows: a basis of Z, then the standard vectors spanning X. Changing the
  /// input to this basis gives exactly zero_cubed_build(triple).
  Mat<S> witness;
};

/// Z = annihilator, X = span of the non-pivot coordinates of Z, f = product.
template <FieldElement S>
ZeroCubedDecomposition<S> zero_cubed_decompose(const Algebra<S>& a) {
  const auto& p = a.product();
  if (!is_zero_cubed(p)) throw PreconditionError("algebra is not an associative zero-cubed algebra");
  const std::size_t n = a.dim();
  const auto z = annihilator(p);
  const auto xs = z.non_pivots();
  ZeroCubedTriple<S> t(a.field(), z.dim(), xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const auto v = p(unit_vec<S>(a.field(), n, xs[i]), unit_vec<S>(a.field(), n, xs[j]));
      const auto c = z.coordinates(v);
      for (std::size_t k = 0; k < z.dim(); ++k) t.f(i, j, k) = c[k];
    }
  Mat<S> w(a.field(), n, n);
  for (std::size_t r = 0; r < z.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) w(r, c) = z.basis()(r, c);
  for (std::size_t i = 0; i < xs.size(); ++i) w(z.dim() + i, xs[i]) = S::one(a.field());
  return {std::move(t), std::move(w)};
}

template <FieldElement S>
struct TripleEquivalence {
  Mat<S> alpha;  ///< Z_1 -> Z_2
  Mat<S> beta;   ///< X_1 -> X_2
};

/// Searches GL(Z) x GL(X) for f_2(beta x, beta x') = alpha f_1(x, x').
template <FieldElement S>
std::optional<TripleEquivalence<S>> triples_equivalent(const ZeroCubedTriple<S>& t1, const ZeroCubedTriple<S>& t2,
                                                       std::uint64_t bound = kDefaultSearchBound) {
  if constexpr (!std::is_same_v<S, Residue>) {
    throw Unsupported("triple equivalence is only decided over finite fields");
  } else {
    if (t1.field() != t2.field()) throw DimensionError("triples over different fields");
    if (t1.z_dim() != t2.z_dim() || t1.x_dim() != t2.x_dim()) return std::nullopt;
    if (t1.image_rank() != t2.image_rank()) return std::nullopt;
    const auto& f = t1.field();
    const std::size_t zd = t1.z_dim(), xd = t1.x_dim();
    if (!bounded_power(f.characteristic(), zd * zd + xd * xd, bound))
      throw SearchBoundExceeded("triple equivalence search exceeds the search bound");
    const auto gz = general_linear_group(f, zd, bound);
    const auto gx = general_linear_group(f, xd, bound);
    // f_1 on basis pairs, precomputed once
    std::vector<Vec<Residue>> f1;
    for (std::size_t a = 0; a < xd; ++a)
      for (std::size_t b = 0; b < xd; ++b)
        f1.push_back(t1.apply(unit_vec<Residue>(f, xd, a), unit_vec<Residue>(f, xd, b)));
    for (const auto& beta : gx) {
      std::vector<Vec<Residue>> lhs;
      for (std::size_t a = 0; a < xd; ++a)
        for (std::size_t b = 0; b < xd; ++b) lhs.push_back(t2.apply(beta.col(a), beta.col(b)));
      for (const auto& alpha : gz) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < lhs.size(); ++i) ok = lhs[i] == alpha.apply(f1[i]);
        if (ok) return TripleEquivalence<Residue>{alpha, beta};
      }
    }
    return std::nullopt;
  }
}

}  // namespace dialg
