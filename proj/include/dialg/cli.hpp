#pragma once

/**
 * @file cli.hpp
 * @brief The commands behind the `dialg` executable.
 *
 * Each command returns its exit code and the full text it would print:
 * 0 = success / property holds, 1 = property fails, 2 = usage or input error.
 * Output is deterministic for fixed input.
 */

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dialg/census.hpp"
#include "dialg/classify.hpp"
#include "dialg/format.hpp"

namespace dialg::cli {

struct CommandResult {
  int exit_code;
  std::string report;
};

inline constexpr int kOk = 0;
inline constexpr int kFails = 1;
inline constexpr int kBadInput = 2;

/// DIALG_SEARCH_BOUND if set to a positive integer, else the default.
inline std::uint64_t search_bound_from_env() {
  if (const char* env = std::getenv("DIALG_SEARCH_BOUND")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSearchBound;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <FieldElement S>
std::string vec_text(const Vec<S>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
  return out + ")";
}

template <FieldElement S>
std::string mat_text(const Mat<S>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).to_string();
    out += '\n';
  }
  return out;
}

template <FieldElement S>
nlohmann::json mat_json(const Mat<S>& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json tensor_json(const BilinearProduct<Residue>& p) {
  const std::size_t n = p.dim();
  auto out = nlohmann::json::array();
  for (std::size_t i = 0; i < n; ++i) {
    auto plane = nlohmann::json::array();
    for (std::size_t j = 0; j < n; ++j) {
      auto fiber = nlohmann::json::array();
      for (std::size_t k = 0; k < n; ++k) fiber.push_back(p.at(i, j, k).value());
      plane.push_back(std::move(fiber));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

/// Runs `body` and maps library errors to exit code 2.
template <class Body>
CommandResult guarded(Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {kBadInput, std::string("parse error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {kBadInput, std::string("error: ") + e.what() + "\n"};
  }
}

template <class Fn>
CommandResult with_dialgebra(const std::string& path, Fn&& fn) {
  return guarded([&] {
    auto any = parse_dialgebra(read_file(path));
    return std::visit([&](const auto& d) { return fn(d); }, any);
  });
}

/// "1,0;0,1" -> two vectors.
template <FieldElement S>
std::vector<Vec<S>> parse_vectors(const FieldSpec& f, std::size_t n, const std::string& spec) {
  std::vector<Vec<S>> out;
  std::stringstream vectors(spec);
  std::string item;
  while (std::getline(vectors, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Vec<S> v;
    std::stringstream entries(item);
    std::string entry;
    while (std::getline(entries, entry, ',')) {
      const auto b = entry.find_first_not_of(" \t");
      const auto e = entry.find_last_not_of(" \t");
      if (b == std::string::npos) throw Error("empty coordinate in '" + item + "'");
      v.push_back(S::parse(f, entry.substr(b, e - b + 1)));
    }
    if (v.size() != n)
      throw DimensionError("vector '" + item + "' has " + std::to_string(v.size()) + " coordinates, expected " +
                           std::to_string(n));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace detail

inline CommandResult cmd_check(const std::string& path) {
  return detail::with_dialgebra(path, [](const auto& d) {
    const auto violations = check_dialgebra(d);
    if (violations.empty()) return CommandResult{kOk, "PASS\n"};
    std::string out = "FAIL\n";
    for (const auto& v : violations)
      out += std::string(to_string(v.law)) + " at (" + std::to_string(v.witness[0] + 1) + "," +
             std::to_string(v.witness[1] + 1) + "," + std::to_string(v.witness[2] + 1) +
             "): residual " + detail::vec_text(v.residual) + "\n";
    return CommandResult{kFails, out};
  });
}

inline CommandResult cmd_info(const std::string& path, bool json, std::uint64_t bound = kDefaultSearchBound) {
  return detail::with_dialgebra(path, [&](const auto& d) {
    const auto fp = fingerprint(d);
    const bool valid = check_dialgebra(d).empty();
    std::string flags_error;
    std::optional<StructureFlags> flags;
    try {
      flags = structure_flags(d, bound);
    } catch (const SearchBoundExceeded& e) {
      flags_error = e.what();
    }
    auto tri_text = [&](TriState StructureFlags::*m) {
      return flags ? std::string(to_string((*flags).*m)) : std::string("unsupported");
    };
    const std::vector<std::pair<std::string, std::size_t>> dims = {
        {"dim_left_square", fp.dim_left_square}, {"dim_right_square", fp.dim_right_square},
        {"dim_rann_left", fp.dim_rann_left},     {"dim_lann_left", fp.dim_lann_left},
        {"dim_rann_right", fp.dim_rann_right},   {"dim_lann_right", fp.dim_lann_right},
        {"dim_ann", fp.dim_ann}};
    const std::vector<std::pair<std::string, TriState StructureFlags::*>> tris = {
        {"simple_left", &StructureFlags::simple_left},       {"simple_right", &StructureFlags::simple_right},
        {"semiprime_left", &StructureFlags::semiprime_left}, {"semiprime_right", &StructureFlags::semiprime_right},
        {"prime_left", &StructureFlags::prime_left},         {"prime_right", &StructureFlags::prime_right}};
    if (json) {
      nlohmann::json j;
      j["field"] = d.field().to_string();
      j["dim"] = d.dim();
      j["valid"] = valid;
      for (const auto& [k, v] : dims) j[k] = v;
      j["products_equal"] = fp.products_equal;
      j["has_bar_unit"] = fp.has_bar_unit;
      for (const auto& [k, m] : tris) j[k] = tri_text(m);
      return CommandResult{kOk, j.dump() + "\n"};
    }
    std::string out = "field " + d.field().to_string() + "\ndim " + std::to_string(d.dim()) + "\nvalid " +
                      (valid ? "true" : "false") + "\n";
    for (const auto& [k, v] : dims) out += k + " " + std::to_string(v) + "\n";
    out += std::string("products_equal ") + (fp.products_equal ? "true" : "false") + "\n";
    out += std::string("has_bar_unit ") + (fp.has_bar_unit ? "true" : "false") + "\n";
    for (const auto& [k, m] : tris) out += k + " " + tri_text(m) + "\n";
    if (!flags_error.empty()) out += "# " + flags_error + "\n";
    return CommandResult{kOk, out};
  });
}

inline CommandResult cmd_classify2(const std::string& path, bool json) {
  return detail::with_dialgebra(path, [&](const auto& d) {
    const auto label = classify_dim2(d);
    if (json) {
      nlohmann::json j;
      j["label"] = label.name();
      j["k"] = label.k ? nlohmann::json(label.k->to_string()) : nlohmann::json(nullptr);
      j["sublabel"] = label.sublabel ? nlohmann::json(to_string(*label.sublabel)) : nlohmann::json(nullptr);
      j["witness"] = detail::mat_json(label.witness);
      return CommandResult{kOk, j.dump() + "\n"};
    }
    std::string out = label.name() + "\n";
    if (label.sublabel) out += std::string("sublabel ") + to_string(*label.sublabel) + "\n";
    out += "witness\n" + detail::mat_text(label.witness);
    return CommandResult{kOk, out};
  });
}

inline CommandResult cmd_iso(const std::string& path_a, const std::string& path_b,
                             std::uint64_t bound = kDefaultSearchBound) {
  return detail::guarded([&] {
    auto a = parse_dialgebra(detail::read_file(path_a));
    auto b = parse_dialgebra(detail::read_file(path_b));
    if (a.index() != b.index()) throw Error("the two files are over different fields");
    return std::visit(
        [&](const auto& da) {
          using D = std::decay_t<decltype(da)>;
          const auto& db = std::get<D>(b);
          if (da.field() != db.field()) throw Error("the two files are over different fields");
          try {
            const auto t = are_isomorphic(da, db, bound);
            if (!t) return CommandResult{kFails, "NOT ISOMORPHIC\n"};
            return CommandResult{kOk, "ISOMORPHIC\n" + detail::mat_text(*t)};
          } catch (const Unsupported& e) {
            return CommandResult{kBadInput, std::string("UNSUPPORTED: ") + e.what() + "\n"};
          }
        },
        a);
  });
}

inline CommandResult cmd_census(std::uint64_t prime, std::size_t dim) {
  return detail::guarded([&] {
    const auto result = census(FieldSpec::prime(prime), dim);
    std::string out;
    for (const auto& c : result.classes) {
      nlohmann::json j;
      j["label"] = c.label.name();
      j["kind"] = c.label.kind == ClassKind::II ? std::string("II") : c.label.name();
      j["k"] = c.label.k ? nlohmann::json(c.label.k->value()) : nlohmann::json(nullptr);
      j["sublabel"] = c.label.sublabel ? nlohmann::json(to_string(*c.label.sublabel)) : nlohmann::json(nullptr);
      j["orbit_size"] = c.orbit_size;
      j["left"] = detail::tensor_json(c.representative.left());
      j["right"] = detail::tensor_json(c.representative.right());
      out += j.dump() + "\n";
    }
    return CommandResult{kOk, out};
  });
}

inline CommandResult cmd_leibniz(const std::string& path) {
  return detail::with_dialgebra(path, [](const auto& d) { return CommandResult{kOk, serialize(leibniz_bracket(d))}; });
}

inline CommandResult cmd_op(const std::string& path) {
  return detail::with_dialgebra(path, [](const auto& d) { return CommandResult{kOk, serialize(opposite(d))}; });
}

inline CommandResult cmd_quotient(const std::string& path, const std::string& ideal) {
  return detail::with_dialgebra(path, [&](const auto& d) {
    using S = std::decay_t<decltype(d.left().at(0, 0, 0))>;
    const auto gens = detail::parse_vectors<S>(d.field(), d.dim(), ideal);
    const auto id = generated_ideal(d, Subspace<S>::span(d.field(), d.dim(), gens));
    const auto q = quotient(d, id);
    std::string out = serialize(q.algebra);
    out += "# projection (" + std::to_string(q.projection.rows()) + " x " + std::to_string(q.projection.cols()) + ")\n";
    for (std::size_t i = 0; i < q.projection.rows(); ++i) {
      out += "#";
      for (std::size_t j = 0; j < q.projection.cols(); ++j) out += " " + q.projection(i, j).to_string();
      out += "\n";
    }
    return CommandResult{kOk, out};
  });
}

}  // namespace dialg::cli
