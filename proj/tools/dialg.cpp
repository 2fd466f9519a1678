// dialg: command-line front end for the dialgebra library.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "dialg/cli.hpp"

int main(int argc, char** argv) {
  using namespace dialg::cli;

  CLI::App app{"Exact computations with finite-dimensional associative dialgebras"};
  app.require_subcommand(1);

  std::string path, path_b, ideal;
  bool json = false;
  std::uint64_t prime = 2;
  std::size_t dim = 2;

  auto* check = app.add_subcommand("check", "Verify associativity and the dialgebra axioms");
  check->add_option("file", path, "dialg v1 file")->required();

  auto* info = app.add_subcommand("info", "Print invariants, annihilator dimensions and structure flags");
  info->add_option("file", path, "dialg v1 file")->required();
  info->add_flag("--json", json, "Machine-readable output");

  auto* classify2 = app.add_subcommand("classify2", "Classify a two-dimensional dialgebra");
  classify2->add_option("file", path, "dialg v1 file")->required();
  classify2->add_flag("--json", json, "Machine-readable output");

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two dialgebras");
  iso->add_option("first", path, "dialg v1 file")->required();
  iso->add_option("second", path_b, "dialg v1 file")->required();

  auto* census = app.add_subcommand("census", "Enumerate all dialgebras up to isomorphism (JSON lines)");
  census->add_option("--prime", prime, "Field characteristic (2 or 3)")->required();
  census->add_option("--dim", dim, "Dimension (2)")->default_val(2);

  auto* leibniz = app.add_subcommand("leibniz", "Print the Leibniz algebra [x,y] = x-|y - y|-x");
  leibniz->add_option("file", path, "dialg v1 file")->required();

  auto* op = app.add_subcommand("op", "Print the opposite dialgebra");
  op->add_option("file", path, "dialg v1 file")->required();

  auto* quotient = app.add_subcommand("quotient", "Print the quotient by the ideal generated by --ideal");
  quotient->add_option("file", path, "dialg v1 file")->required();
  quotient->add_option("--ideal", ideal, "Generators: 'v1;v2;...' with comma-separated coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  const auto bound = search_bound_from_env();
  CommandResult result{kBadInput, ""};
  if (*check) result = cmd_check(path);
  else if (*info) result = cmd_info(path, json, bound);
  else if (*classify2) result = cmd_classify2(path, json);
  else if (*iso) result = cmd_iso(path, path_b, bound);
  else if (*census) result = cmd_census(prime, dim);
  else if (*leibniz) result = cmd_leibniz(path);
  else if (*op) result = cmd_op(path);
  else if (*quotient) result = cmd_quotient(path, ideal);

  (result.exit_code == kBadInput ? std::cerr : std::cout) << result.report;
  return result.exit_code;
}
