#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra: vectors, matrices, row reduction,
 * kernels and the lattice of subspaces.
 *
 * Vectors are plain `std::vector<S>`; matrices and subspaces carry their
 * `FieldSpec`. A `Subspace` stores its reduced row echelon basis, so two
 * subspaces are equal exactly when their stored bases are equal.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dialg/field.hpp"

namespace dialg {

template <FieldElement S>
using Vec = std::vector<S>;

template <FieldElement S>
Vec<S> zero_vec(const FieldSpec& f, std::size_t n) {
  return Vec<S>(n, S::zero(f));
}

template <FieldElement S>
Vec<S> unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec<S> v = zero_vec<S>(f, n);
  v.at(i) = S::one(f);
  return v;
}

template <FieldElement S>
bool is_zero(std::span<const S> v) {
  return std::all_of(v.begin(), v.end(), [](const S& x) { return x.is_zero(); });
}

template <FieldElement S>
bool is_zero(const Vec<S>& v) {
  return is_zero(std::span<const S>(v));
}

template <FieldElement S>
Vec<S> operator+(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <FieldElement S>
Vec<S> operator-(Vec<S> a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <FieldElement S>
Vec<S> operator*(const S& c, Vec<S> v) {
  for (auto& x : v) x *= c;
  return v;
}

/// y += c * x
template <FieldElement S>
void axpy(const S& c, std::span<const S> x, std::span<S> y) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

template <FieldElement S>
class Mat {
 public:
  Mat(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, S::zero(field)) {
    require_field<S>(field);
  }

  static Mat identity(const FieldSpec& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one(f);
    return m;
  }

  static Mat from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vec<S>>& rows) {
    Mat m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("row length mismatch");
      std::copy(rows[i].begin(), rows[i].end(), m.row_span(i).begin());
    }
    return m;
  }

  /// Row-major integer literal, handy in tests and canonical tables.
  static Mat from_integers(const FieldSpec& f, std::size_t rows, std::size_t cols,
                           std::initializer_list<std::int64_t> entries) {
    if (entries.size() != rows * cols) throw DimensionError("entry count mismatch");
    Mat m(f, rows, cols);
    std::size_t idx = 0;
    for (auto e : entries) m.data_[idx++] = S::from_integer(f, e);
    return m;
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<S> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const S> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<S> row(std::size_t i) const {
    auto r = row_span(i);
    return Vec<S>(r.begin(), r.end());
  }
  Vec<S> col(std::size_t j) const {
    Vec<S> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  std::vector<Vec<S>> row_vectors() const {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Mat transpose() const {
    Mat t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// m * v for a column vector v.
  Vec<S> apply(const Vec<S>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    Vec<S> out = zero_vec<S>(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_) throw DimensionError("matrix product mismatch");
    Mat c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return x.is_zero(); });
  }

  const std::vector<S>& entries() const noexcept { return data_; }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> data_;
};

template <FieldElement S>
struct Echelon {
  Mat<S> reduced;                   ///< nonzero rows of the RREF only
  std::size_t rank;
  std::vector<std::size_t> pivots;  ///< pivot column of each row
};

/// Gauss-Jordan elimination. Zero rows are dropped from the result.
template <FieldElement S>
Echelon<S> rref(Mat<S> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pr, j), m(r, j));
    const S inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const S factor = -m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) += factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Mat<S> reduced(m.field(), r, cols);
  for (std::size_t i = 0; i < r; ++i)
    std::copy(m.row_span(i).begin(), m.row_span(i).end(), reduced.row_span(i).begin());
  return {std::move(reduced), r, std::move(pivots)};
}

template <FieldElement S>
std::size_t rank(const Mat<S>& m) {
  return rref(m).rank;
}

template <FieldElement S>
class Subspace;

template <FieldElement S>
Subspace<S> kernel(const Mat<S>& m);

/// A linear subspace of F^n held by its canonical (RREF) basis.
template <FieldElement S>
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t n) { return Subspace(Mat<S>(f, 0, n)); }
  static Subspace whole(const FieldSpec& f, std::size_t n) { return Subspace(Mat<S>::identity(f, n)); }

  static Subspace span(const FieldSpec& f, std::size_t n, const std::vector<Vec<S>>& vectors) {
    return Subspace(Mat<S>::from_rows(f, n, vectors));
  }

  /// Row space of `generators`.
  explicit Subspace(const Mat<S>& generators) : basis_(generators.field(), 0, generators.cols()) {
    auto e = rref(generators);
    basis_ = std::move(e.reduced);
    pivots_ = std::move(e.pivots);
  }

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_dim(); }

  const Mat<S>& basis() const noexcept { return basis_; }
  std::vector<Vec<S>> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coordinate positions that are not pivots; the standard vectors there
  /// span a complement.
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (next < pivots_.size() && pivots_[next] == c) {
        ++next;
        continue;
      }
      out.push_back(c);
    }
    return out;
  }

  /// v minus its pivot components; zero iff v lies in the subspace.
  Vec<S> reduce(Vec<S> v) const {
    if (v.size() != ambient_dim()) throw DimensionError("vector length does not match ambient dimension");
    for (std::size_t r = 0; r < dim(); ++r) {
      const S c = v[pivots_[r]];
      if (c.is_zero()) continue;
      axpy(-c, basis_.row_span(r), std::span<S>(v));
    }
    return v;
  }

  bool contains(const Vec<S>& v) const { return dialg::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// Coefficients of v (assumed to lie in the subspace) against the basis rows.
  Vec<S> coordinates(const Vec<S>& v) const {
    if (!contains(v)) throw PreconditionError("vector is not in the subspace");
    Vec<S> c;
    c.reserve(dim());
    for (auto p : pivots_) c.push_back(v[p]);
    return c;
  }

  void check_compatible(const Subspace& other) const {
    if (field() != other.field() || ambient_dim() != other.ambient_dim())
      throw DimensionError("subspaces live in different spaces");
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Mat<S> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}, in canonical form.
template <FieldElement S>
Subspace<S> kernel(const Mat<S>& m) {
  const auto e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<S>> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v = zero_vec<S>(m.field(), n);
    v[free] = S::one(m.field());
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace<S>::span(m.field(), n, gens);
}

template <FieldElement S>
Subspace<S> span_sum(const Subspace<S>& u, const Subspace<S>& v) {
  u.check_compatible(v);
  auto rows = u.basis_vectors();
  for (auto& r : v.basis_vectors()) rows.push_back(std::move(r));
  return Subspace<S>::span(u.field(), u.ambient_dim(), rows);
}

/// Solves a U = b V for the coefficient vectors and maps back through U.
template <FieldElement S>
Subspace<S> intersect(const Subspace<S>& u, const Subspace<S>& v) {
  u.check_compatible(v);
  const std::size_t n = u.ambient_dim(), du = u.dim(), dv = v.dim();
  Mat<S> system(u.field(), n, du + dv);
  for (std::size_t r = 0; r < du; ++r)
    for (std::size_t c = 0; c < n; ++c) system(c, r) = u.basis()(r, c);
  for (std::size_t r = 0; r < dv; ++r)
    for (std::size_t c = 0; c < n; ++c) system(c, du + r) = -v.basis()(r, c);
  const auto sol = kernel(system);
  std::vector<Vec<S>> gens;
  for (std::size_t k = 0; k < sol.dim(); ++k) {
    Vec<S> w = zero_vec<S>(u.field(), n);
    for (std::size_t r = 0; r < du; ++r)
      axpy(sol.basis()(k, r), u.basis().row_span(r), std::span<S>(w));
    gens.push_back(std::move(w));
  }
  return Subspace<S>::span(u.field(), n, gens);
}

template <FieldElement S>
bool contains(const Subspace<S>& u, const Vec<S>& w) {
  return u.contains(w);
}

/// One solution of m x = b, or nothing when the system is inconsistent.
template <FieldElement S>
std::optional<Vec<S>> solve(const Mat<S>& m, const Vec<S>& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  Mat<S> aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<S> x = zero_vec<S>(m.field(), m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <FieldElement S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat<S> aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = S::one(m.field());
  }
  const auto e = rref(aug);
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat<S> inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <FieldElement S>
bool is_invertible(const Mat<S>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// ---------------------------------------------------------------------------
// Finite-field enumeration
// ---------------------------------------------------------------------------

/// p^exponent, or nullopt once it passes `cap`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (acc > cap / p) return std::nullopt;
    acc *= p;
  }
  return acc;
}

inline constexpr std::uint64_t kDefaultSearchBound = 1'000'000;

/// Every vector of GF(p)^n in lexicographic order of residues.
inline std::vector<Vec<Residue>> all_vectors(const FieldSpec& f, std::size_t n) {
  if (!f.is_prime_field()) throw Unsupported("vector enumeration needs a finite field");
  const std::uint32_t p = f.characteristic();
  std::vector<Vec<Residue>> out;
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    Vec<Residue> v;
    v.reserve(n);
    for (auto d : digits) v.push_back(Residue::from_integer(f, d));
    out.push_back(std::move(v));
    std::size_t pos = n;
    while (pos > 0 && ++digits[pos - 1] == p) digits[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

/// All invertible n x n matrices over GF(p), in lexicographic (row-major) order.
inline std::vector<Mat<Residue>> general_linear_group(const FieldSpec& f, std::size_t n,
                                                      std::uint64_t bound = kDefaultSearchBound) {
  if (!f.is_prime_field()) throw Unsupported("GL(n) enumeration needs a finite field");
  if (!bounded_power(f.characteristic(), n * n, bound))
    throw SearchBoundExceeded("GL(" + std::to_string(n) + ", " + f.to_string() +
                              ") exceeds the search bound of " + std::to_string(bound));
  const auto entries = all_vectors(f, n * n);
  std::vector<Mat<Residue>> out;
  for (const auto& e : entries) {
    Mat<Residue> m(f, n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = e[i];
    if (is_invertible(m)) out.push_back(std::move(m));
  }
  return out;
}

/// Visits every subspace of GF(p)^n exactly once, by dimension and then by
/// pivot pattern. Stops early when `visit` returns false.
inline void for_each_subspace(const FieldSpec& f, std::size_t n,
                              const std::function<bool(const Subspace<Residue>&)>& visit) {
  if (!f.is_prime_field()) throw Unsupported("subspace enumeration needs a finite field");
  const std::uint32_t p = f.characteristic();
  for (std::size_t k = 0; k <= n; ++k) {
    // pivot sets as increasing k-combinations of {0..n-1}
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free_slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_slots.emplace_back(r, c);
      std::vector<std::uint32_t> digits(free_slots.size(), 0);
      while (true) {
        Mat<Residue> m(f, k, n);
        for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = Residue::one(f);
        for (std::size_t s = 0; s < free_slots.size(); ++s)
          m(free_slots[s].first, free_slots[s].second) = Residue::from_integer(f, digits[s]);
        if (!visit(Subspace<Residue>(m))) return;
        std::size_t pos = digits.size();
        while (pos > 0 && ++digits[pos - 1] == p) digits[--pos] = 0;
        if (pos == 0) break;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

}  // namespace dialg
