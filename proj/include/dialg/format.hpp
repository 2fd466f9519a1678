#pragma once

/**
 * @file format.hpp
 * @brief Reader and writer for the line-oriented "dialg v1" text format.
 *
 *     dialg 1
 *     field rational            # or: field prime <p>
 *     dim <n>
 *     basis r s                 # optional
 *     left  <i> <j> <k> <c>     # gamma_left(i, j, k) = c, 1-based indices
 *     right <i> <j> <k> <c>
 *
 * `#` starts a comment, blank lines are ignored, omitted entries are zero and
 * a repeated (tag, i, j, k) is rejected. Single-product algebras use the same
 * layout with `left` lines only.
 */

#include <array>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dialg/algebra.hpp"

namespace dialg {

inline constexpr std::size_t kMaxFileDim = 16;

using AnyDialgebra = std::variant<Dialgebra<Rational>, Dialgebra<Residue>>;
using AnyAlgebra = std::variant<Algebra<Rational>, Algebra<Residue>>;

namespace detail {

struct RawEntry {
  std::size_t line;
  ProductTag tag;
  std::array<std::size_t, 3> idx;  // 0-based
  std::string coefficient;
};

struct RawFile {
  FieldSpec field = FieldSpec::rationals();
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<RawEntry> entries;
};

inline std::vector<std::string> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::uint64_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  if (!all_digits(tok) || tok.size() > 18) throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return std::stoull(tok);
}

inline RawFile read_raw(std::string_view text, bool allow_right) {
  RawFile raw;
  enum class Stage { Magic, Field, Dim, Body } stage = Stage::Magic;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    switch (stage) {
      case Stage::Magic:
        if (tok.size() != 2 || tok[0] != "dialg" || tok[1] != "1")
          throw ParseError(line_no, "expected header 'dialg 1'");
        stage = Stage::Field;
        break;
      case Stage::Field:
        if (tok.size() == 2 && tok[0] == "field" && tok[1] == "rational") {
          raw.field = FieldSpec::rationals();
        } else if (tok.size() == 3 && tok[0] == "field" && tok[1] == "prime") {
          const auto p = parse_count(tok[2], line_no, "a prime");
          try {
            raw.field = FieldSpec::prime(p);
          } catch (const FieldError& e) {
            throw ParseError(line_no, e.what());
          }
        } else {
          throw ParseError(line_no, "expected 'field rational' or 'field prime <p>'");
        }
        stage = Stage::Dim;
        break;
      case Stage::Dim:
        if (tok.size() != 2 || tok[0] != "dim") throw ParseError(line_no, "expected 'dim <n>'");
        raw.dim = parse_count(tok[1], line_no, "a dimension");
        // dim 0 is accepted so that quotients by the whole space round-trip
        if (raw.dim > kMaxFileDim) throw ParseError(line_no, "dimension must be at most 16");
        stage = Stage::Body;
        break;
      case Stage::Body: {
        if (tok[0] == "basis") {
          if (!raw.names.empty() || !raw.entries.empty())
            throw ParseError(line_no, "'basis' must directly follow 'dim'");
          if (tok.size() != raw.dim + 1) throw ParseError(line_no, "basis must name exactly dim elements");
          raw.names.assign(tok.begin() + 1, tok.end());
          for (std::size_t a = 0; a < raw.names.size(); ++a)
            for (std::size_t b = a + 1; b < raw.names.size(); ++b)
              if (raw.names[a] == raw.names[b]) throw ParseError(line_no, "duplicate basis name '" + raw.names[a] + "'");
          break;
        }
        ProductTag tag;
        if (tok[0] == "left") {
          tag = ProductTag::Left;
        } else if (tok[0] == "right" && allow_right) {
          tag = ProductTag::Right;
        } else if (tok[0] == "right") {
          throw ParseError(line_no, "single-product algebras accept only 'left' lines");
        } else {
          throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
        }
        if (tok.size() != 5) throw ParseError(line_no, "expected '" + tok[0] + " <i> <j> <k> <c>'");
        RawEntry entry{line_no, tag, {}, tok[4]};
        for (std::size_t a = 0; a < 3; ++a) {
          const auto v = parse_count(tok[1 + a], line_no, "an index");
          if (v < 1 || v > raw.dim)
            throw ParseError(line_no, "index " + tok[1 + a] + " out of range [1, " + std::to_string(raw.dim) + "]");
          entry.idx[a] = v - 1;
        }
        raw.entries.push_back(std::move(entry));
        break;
      }
    }
  }
  if (stage != Stage::Body) throw ParseError(line_no, "unexpected end of input before 'dim'");
  return raw;
}

template <FieldElement S>
std::pair<BilinearProduct<S>, BilinearProduct<S>> build_products(const RawFile& raw) {
  BilinearProduct<S> left(raw.field, raw.dim), right(raw.field, raw.dim);
  std::map<std::pair<ProductTag, std::array<std::size_t, 3>>, std::size_t> seen;
  for (const auto& e : raw.entries) {
    const auto key = std::make_pair(e.tag, e.idx);
    if (auto it = seen.find(key); it != seen.end())
      throw ParseError(e.line, "duplicate entry (first given on line " + std::to_string(it->second) + ")");
    seen.emplace(key, e.line);
    S c;
    try {
      c = S::parse(raw.field, e.coefficient);
    } catch (const FieldError& err) {
      throw ParseError(e.line, err.what());
    }
    auto& target = e.tag == ProductTag::Left ? left : right;
    target.at(e.idx[0], e.idx[1], e.idx[2]) = c;
  }
  return {std::move(left), std::move(right)};
}

template <FieldElement S>
void write_product(std::ostringstream& out, const char* tag, const BilinearProduct<S>& prod) {
  const std::size_t n = prod.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const S& c = prod.at(i, j, k);
        if (c.is_zero()) continue;
        out << tag << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << c.to_string() << '\n';
      }
}

inline void write_header(std::ostringstream& out, const FieldSpec& f, std::size_t dim,
                         const std::vector<std::string>& names) {
  out << "dialg 1\n";
  if (f.is_prime_field())
    out << "field prime " << f.characteristic() << '\n';
  else
    out << "field rational\n";
  out << "dim " << dim << '\n';
  if (!names.empty()) {
    out << "basis";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  }
}

}  // namespace detail

/// Reads only the header and returns the declared field.
inline FieldSpec peek_field(std::string_view text) { return detail::read_raw(text, true).field; }

inline AnyDialgebra parse_dialgebra(std::string_view text) {
  const auto raw = detail::read_raw(text, true);
  return visit_field(raw.field, [&]<class S>() -> AnyDialgebra {
    auto [l, r] = detail::build_products<S>(raw);
    return Dialgebra<S>(std::move(l), std::move(r), raw.names);
  });
}

/// Typed variant; throws if the file's field does not match S.
template <FieldElement S>
Dialgebra<S> parse_dialgebra_as(std::string_view text) {
  auto any = parse_dialgebra(text);
  if (auto* d = std::get_if<Dialgebra<S>>(&any)) return std::move(*d);
  throw FieldError("file field does not match the requested element type");
}

inline AnyAlgebra parse_algebra(std::string_view text) {
  const auto raw = detail::read_raw(text, false);
  return visit_field(raw.field, [&]<class S>() -> AnyAlgebra {
    auto products = detail::build_products<S>(raw);
    return Algebra<S>(std::move(products.first), raw.names);
  });
}

template <FieldElement S>
Algebra<S> parse_algebra_as(std::string_view text) {
  auto any = parse_algebra(text);
  if (auto* a = std::get_if<Algebra<S>>(&any)) return std::move(*a);
  throw FieldError("file field does not match the requested element type");
}

template <FieldElement S>
std::string serialize(const Dialgebra<S>& d) {
  std::ostringstream out;
  detail::write_header(out, d.field(), d.dim(), d.basis_names());
  detail::write_product(out, "left", d.left());
  detail::write_product(out, "right", d.right());
  return out.str();
}

template <FieldElement S>
std::string serialize(const Algebra<S>& a) {
  std::ostringstream out;
  detail::write_header(out, a.field(), a.dim(), a.basis_names());
  detail::write_product(out, "left", a.product());
  return out.str();
}

}  // namespace dialg
