#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "dialg/cli.hpp"
#include "support.hpp"

using namespace dialg;
using namespace dialg::cli;
using namespace dialg::testing;

namespace {

/// Writes `text` to a temporary file removed at scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = (std::filesystem::temp_directory_path() / ("dialg_test_" + std::to_string(counter_++) + "_" +
                                                        std::to_string(::getpid()) + ".dialg"))
                .string();
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::string path_;
};

}  // namespace

TEST(Cli, CheckExitCodes) {
  for (const char* name : {"I.dialg", "II_1.dialg", "II_2.dialg", "II_3.dialg", "II_1_gf2.dialg", "III.dialg",
                           "IV.dialg"})
    EXPECT_EQ(cmd_check(data_path(name)).exit_code, kOk) << name;
  const auto bad = cmd_check(data_path("I_mutated.dialg"));
  EXPECT_EQ(bad.exit_code, kFails);
  EXPECT_EQ(bad.report.rfind("FAIL\n", 0), 0u);
  EXPECT_NE(bad.report.find(" at ("), std::string::npos);
  EXPECT_EQ(cmd_check(data_path("bad_dim.dialg")).exit_code, kBadInput);
  EXPECT_EQ(cmd_check(data_path("missing.dialg")).exit_code, kBadInput);
}

TEST(Cli, Classify2) {
  const auto r = cmd_classify2(data_path("III.dialg"), false);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report.substr(0, 4), "III\n");
  const auto j = nlohmann::json::parse(cmd_classify2(data_path("II_3.dialg"), true).report);
  EXPECT_EQ(j["label"], "II(3)");
  EXPECT_EQ(j["k"], "3");
  EXPECT_EQ(cmd_classify2(data_path("I_mutated.dialg"), false).exit_code, kBadInput);
}

TEST(Cli, IsoWithConjugateOverGF7) {
  const auto f = gf(7);
  const auto d = canonical::algebra_II<Residue>(f, Residue::from_integer(f, 2));
  const auto g = Mat<Residue>::from_integers(f, 2, 2, {3, 1, 5, 2});
  ASSERT_TRUE(is_invertible(g));
  TempFile a(serialize(d)), b(serialize(change_basis(d, g)));
  const auto r = cmd_iso(a.path(), b.path());
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report.rfind("ISOMORPHIC\n", 0), 0u);

  TempFile c(serialize(canonical::algebra_II<Residue>(f, Residue::from_integer(f, 3))));
  EXPECT_EQ(cmd_iso(a.path(), c.path()).exit_code, kFails);
  EXPECT_EQ(cmd_iso(a.path(), data_path("I.dialg")).exit_code, kBadInput);
  EXPECT_EQ(cmd_iso(data_path("III.dialg"), data_path("IV.dialg")).exit_code, kFails);
}

TEST(Cli, IsoUnsupportedAndBound) {
  TempFile a(serialize(from_associative(upper_triangular<Rational>(kQ))));
  TempFile b(serialize(change_basis(from_associative(upper_triangular<Rational>(kQ)),
                                    Mat<Rational>::from_integers(kQ, 3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}))));
  const auto r = cmd_iso(a.path(), b.path());
  EXPECT_EQ(r.exit_code, kBadInput);
  EXPECT_EQ(r.report.rfind("UNSUPPORTED", 0), 0u);

  const auto f = gf(7);
  TempFile c(serialize(canonical::algebra_I<Residue>(f)));
  TempFile d(serialize(change_basis(canonical::algebra_I<Residue>(f), Mat<Residue>::from_integers(f, 2, 2, {1, 1, 0, 1}))));
  EXPECT_EQ(cmd_iso(c.path(), d.path(), 100).exit_code, kBadInput);
}

TEST(Cli, Info) {
  const auto j = nlohmann::json::parse(cmd_info(data_path("I.dialg"), true).report);
  EXPECT_EQ(j["dim_left_square"], 1);
  EXPECT_EQ(j["dim_right_square"], 2);
  EXPECT_EQ(j["dim_ann"], 1);
  EXPECT_EQ(j["simple_left"], "unsupported");
  const auto g = nlohmann::json::parse(cmd_info(data_path("II_1_gf2.dialg"), true).report);
  EXPECT_EQ(g["semiprime_left"], "false");
  EXPECT_EQ(g["products_equal"], true);
  EXPECT_EQ(cmd_info(data_path("I.dialg"), false).report.rfind("field Q\n", 0), 0u);
}

TEST(Cli, CensusGF2) {
  const auto r = cmd_census(2, 2);
  ASSERT_EQ(r.exit_code, kOk);
  std::map<std::string, int> labels;
  std::istringstream lines(r.report);
  std::string line;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    ++labels[j["label"].get<std::string>()];
    EXPECT_EQ(j["left"].size(), 2u);
  }
  for (const char* name : {"I", "II(1)", "III", "IV"}) EXPECT_EQ(labels[name], 1) << name;
  EXPECT_EQ(cmd_census(5, 2).exit_code, kBadInput);
}

TEST(Cli, Deterministic) {
  for (const char* name : {"I.dialg", "IV.dialg", "I_mutated.dialg"}) {
    EXPECT_EQ(cmd_check(data_path(name)).report, cmd_check(data_path(name)).report);
    EXPECT_EQ(cmd_info(data_path(name), true).report, cmd_info(data_path(name), true).report);
  }
  EXPECT_EQ(cmd_census(3, 2).report, cmd_census(3, 2).report);
}

TEST(Cli, OpIsAnInvolution) {
  for (const char* name : {"I.dialg", "II_2.dialg", "III.dialg", "IV.dialg", "II_1_gf2.dialg"}) {
    const auto once = cmd_op(data_path(name));
    ASSERT_EQ(once.exit_code, kOk);
    TempFile tmp(once.report);
    const auto twice = cmd_op(tmp.path());
    ASSERT_EQ(twice.exit_code, kOk);
    std::ifstream in(data_path(name));
    std::ostringstream orig;
    orig << in.rdbuf();
    std::visit(
        [&](const auto& d) {
          using D = std::decay_t<decltype(d)>;
          EXPECT_EQ(std::get<D>(parse_dialgebra(twice.report)), d) << name;
        },
        parse_dialgebra(orig.str()));
  }
}

TEST(Cli, OutputsReparse) {
  const auto l = cmd_leibniz(data_path("I.dialg"));
  ASSERT_EQ(l.exit_code, kOk);
  EXPECT_EQ(parse_algebra_as<Rational>(l.report).product(), (table<Rational>(kQ, 2, {{0, 1, 0, -1}})));
  EXPECT_EQ(cmd_leibniz(data_path("I_mutated.dialg")).exit_code, kBadInput);

  const auto qt = cmd_quotient(data_path("I.dialg"), "1,0");
  ASSERT_EQ(qt.exit_code, kOk);
  const auto d = parse_dialgebra_as<Rational>(qt.report);
  EXPECT_EQ(d.dim(), 1u);
  EXPECT_EQ(d.left().at(0, 0, 0), q(1));
  EXPECT_EQ(d.right().at(0, 0, 0), q(1));

  // generators are closed up to the ideal they generate: s brings in r
  const auto whole = cmd_quotient(data_path("I.dialg"), "0,1");
  ASSERT_EQ(whole.exit_code, kOk);
  EXPECT_EQ(parse_dialgebra_as<Rational>(whole.report).dim(), 0u);
  EXPECT_EQ(cmd_quotient(data_path("I.dialg"), "1,0,0").exit_code, kBadInput);
  EXPECT_EQ(cmd_quotient(data_path("I.dialg"), "1,x").exit_code, kBadInput);
}
