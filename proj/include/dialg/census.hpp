#pragma once

/**
 * @file census.hpp
 * @brief Exhaustive enumeration of two-dimensional associative dialgebras over
 * GF(2) and GF(3), partitioned into GL_2 orbits.
 *
 * Candidates are pairs of structure tensors. Since both products must be
 * associative, the pairs are drawn from the associative tensors only; every
 * surviving pair is then run through check_dialgebra. Orbits are computed by
 * applying every element of GL_2(F_p) to a representative.
 *
 * Ordering: a pair is encoded as the base-p number whose digits are the left
 * tensor followed by the right tensor, both in (i, j, k) order. Classes are
 * listed by their least member under this encoding, which is also the
 * representative.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dialg/classify.hpp"

namespace dialg {

struct CensusClass {
  Dialgebra<Residue> representative;
  ClassLabel<Residue> label;
  std::size_t orbit_size;
  std::vector<Dialgebra<Residue>> members;  ///< sorted by encoding
};

struct Census {
  FieldSpec field;
  std::size_t dim;
  std::size_t candidates_checked;  ///< pairs passed to check_dialgebra
  std::size_t valid_count;
  std::vector<CensusClass> classes;
};

/// Base-p code of the pair (left, right); preserves lexicographic order.
inline std::uint64_t encode(const Dialgebra<Residue>& d) {
  const std::uint64_t p = d.field().characteristic();
  std::uint64_t code = 0;
  for (const auto& c : d.left().coefficients()) code = code * p + c.value();
  for (const auto& c : d.right().coefficients()) code = code * p + c.value();
  return code;
}

/// Every associative product on GF(p)^n, in encoding order.
inline std::vector<BilinearProduct<Residue>> associative_products(const FieldSpec& f, std::size_t n) {
  std::vector<BilinearProduct<Residue>> out;
  for (const auto& coeffs : all_vectors(f, n * n * n)) {
    BilinearProduct<Residue> p(f, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) p.at(i, j, k) = coeffs[(i * n + j) * n + k];
    if (is_associative(p)) out.push_back(std::move(p));
  }
  return out;
}

/// All valid dialgebras of dimension n over GF(p), sorted by encoding.
inline std::vector<Dialgebra<Residue>> valid_dialgebras(const FieldSpec& f, std::size_t n,
                                                        std::size_t* candidates = nullptr) {
  const auto assoc = associative_products(f, n);
  std::vector<Dialgebra<Residue>> out;
  std::size_t checked = 0;
  for (const auto& l : assoc)
    for (const auto& r : assoc) {
      Dialgebra<Residue> d(l, r);
      ++checked;
      if (check_dialgebra(d).empty()) out.push_back(std::move(d));
    }
  if (candidates) *candidates = checked;
  return out;
}

inline Census census(const FieldSpec& f, std::size_t dim = 2) {
  if (!f.is_prime_field() || (f.characteristic() != 2 && f.characteristic() != 3) || dim != 2)
    throw PreconditionError("census supports dim 2 over GF(2) and GF(3) only");
  Census out{f, dim, 0, 0, {}};
  const auto valid = valid_dialgebras(f, dim, &out.candidates_checked);
  out.valid_count = valid.size();
  const auto group = general_linear_group(f, dim);

  std::unordered_map<std::uint64_t, std::size_t> class_of;
  for (const auto& d : valid) {
    if (class_of.contains(encode(d))) continue;
    std::vector<Dialgebra<Residue>> orbit;
    std::vector<std::uint64_t> codes;
    for (const auto& g : group) {
      auto image = change_basis(d, g);
      const auto code = encode(image);
      if (std::find(codes.begin(), codes.end(), code) != codes.end()) continue;
      codes.push_back(code);
      orbit.push_back(std::move(image));
    }
    std::vector<std::size_t> order(orbit.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return codes[a] < codes[b]; });
    CensusClass cls{d, classify_dim2(d), orbit.size(), {}};
    for (auto i : order) {
      class_of.emplace(codes[i], out.classes.size());
      cls.members.push_back(std::move(orbit[i]));
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace dialg
