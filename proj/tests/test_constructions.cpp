#include <gtest/gtest.h>

#include "support.hpp"

using namespace dialg;
using namespace dialg::testing;

TEST(FromAssociative, Examples) {
  const auto e = from_associative(Algebra<Rational>(table<Rational>(kQ, 1, {{0, 0, 0, 1}})));
  EXPECT_EQ(e.left(), e.right());
  EXPECT_EQ(e.left().at(0, 0, 0), q(1));

  // r·anything = 0, s·s = s: both operations coincide
  const auto one_i = from_associative(Algebra<Rational>(table<Rational>(kQ, 2, {{1, 1, 1, 1}})));
  EXPECT_EQ(opposite(one_i).left(), one_i.right());
  EXPECT_EQ(one_i.left(), one_i.right());

  EXPECT_EQ(from_associative(Algebra<Rational>(BilinearProduct<Rational>(kQ, 2))),
            Dialgebra<Rational>::trivial(kQ, 2));
  EXPECT_THROW(from_associative(Algebra<Rational>(table<Rational>(kQ, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}}))),
               PreconditionError);
}

TEST(Opposite, OfIIsIII) {
  const auto op = opposite(canonical::algebra_I<Rational>(kQ));
  // transposed tables: r -|' s = s |- r = r, s -|' s = s, s |-' s = s
  EXPECT_EQ(op.left(), (table<Rational>(kQ, 2, {{0, 1, 0, 1}, {1, 1, 1, 1}})));
  EXPECT_EQ(op.right(), (table<Rational>(kQ, 2, {{1, 1, 1, 1}})));
  EXPECT_EQ(op, canonical::algebra_III<Rational>(kQ));
  EXPECT_EQ(opposite(Dialgebra<Rational>::trivial(kQ, 3)), Dialgebra<Rational>::trivial(kQ, 3));
}

TEST(Opposite, OfIIOverGF5SwapsRoles) {
  const auto f = gf(5);
  const auto k = Residue::from_integer(f, 2);
  const auto d = canonical::algebra_II<Residue>(f, k);
  const auto op = opposite(d);
  EXPECT_EQ(op.left(), (table<Residue>(f, 2, {{1, 1, 0, 2}})));
  EXPECT_EQ(op.right(), (table<Residue>(f, 2, {{1, 1, 0, 1}})));
  EXPECT_TRUE(check_dialgebra(op).empty());
}

TEST(Opposite, InvolutionAndAnnihilatorSwap) {
  std::mt19937_64 rng(41);
  auto pool = random_valid_rational(rng, 60);
  for (const auto& d : valid_dialgebras(gf(2), 2)) {
    const auto op = opposite(d);
    ASSERT_EQ(opposite(op), d);
    ASSERT_TRUE(check_dialgebra(op).empty());
    const auto a = annihilators(d), b = annihilators(op);
    ASSERT_EQ(a.rann_left, b.lann_right);
    ASSERT_EQ(a.lann_right, b.rann_left);
    ASSERT_EQ(a.rann_right, b.lann_left);
    ASSERT_EQ(a.lann_left, b.rann_right);
    ASSERT_EQ(a.ann, b.ann);
  }
  for (const auto& d : pool) {
    const auto op = opposite(d);
    ASSERT_EQ(opposite(op), d);
    ASSERT_TRUE(check_dialgebra(op).empty());
    const auto a = annihilators(d), b = annihilators(op);
    ASSERT_EQ(a.rann_left, b.lann_right);
    ASSERT_EQ(a.rann_right, b.lann_left);
  }
}

TEST(ZeroCubed, BuildExamples) {
  ZeroCubedTriple<Rational> t(kQ, 1, 1);
  t.f(0, 0, 0) = q(1);
  const auto a = zero_cubed_build(t);
  // (λ,μ)(λ',μ') = (μμ', 0)
  EXPECT_EQ(a.product(), (table<Rational>(kQ, 2, {{1, 1, 0, 1}})));
  const Vec<Rational> x{q(2), q(3)}, y{q(-1), q(5)};
  EXPECT_EQ(a.multiply(x, y), (Vec<Rational>{q(15), q(0)}));

  EXPECT_TRUE(zero_cubed_build(ZeroCubedTriple<Rational>(kQ, 2, 2)).product().is_zero());

  ZeroCubedTriple<Rational> u(kQ, 1, 2);
  u.f(0, 1, 0) = q(1);  // f(x, y) = x1 y2
  const auto b = zero_cubed_build(u);
  EXPECT_EQ(b.product(), (table<Rational>(kQ, 3, {{1, 2, 0, 1}})));
  const auto all = Subspace<Rational>::whole(kQ, 3);
  const auto sq = product_subspace(b.product(), all, all);
  EXPECT_EQ(sq.dim(), 1u);
  EXPECT_TRUE(product_subspace(b.product(), sq, all).is_zero());
  EXPECT_TRUE(product_subspace(b.product(), all, sq).is_zero());
}

TEST(ZeroCubed, EveryTripleOverGF3IsZeroCubed) {
  std::mt19937_64 rng(42);
  const auto f = gf(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t z = 1 + trial % 2, x = 1 + (trial / 2) % 2;
    ZeroCubedTriple<Residue> t(f, z, x);
    for (std::size_t a = 0; a < x; ++a)
      for (std::size_t b = 0; b < x; ++b)
        for (std::size_t c = 0; c < z; ++c) t.f(a, b, c) = random_scalar<Residue>(rng, f);
    const auto alg = zero_cubed_build(t);
    ASSERT_TRUE(is_associative(alg.product()));
    ASSERT_TRUE(is_zero_cubed(alg.product()));
    // every triple product vanishes on all element triples
    for (const auto& u : all_vectors(f, z + x))
      for (const auto& v : all_vectors(f, z + x)) {
        const auto uv = naive_mul(alg.product(), u, v);
        for (std::size_t k = 0; k < z + x; ++k) {
          const auto ek = unit_vec<Residue>(f, z + x, k);
          ASSERT_TRUE(is_zero(naive_mul(alg.product(), uv, ek)));
          ASSERT_TRUE(is_zero(naive_mul(alg.product(), ek, uv)));
        }
      }
  }
}

TEST(Differential, UpperTriangularExample) {
  const auto a = upper_triangular<Rational>(kQ);
  const auto d = inner_derivation(a, 1);  // x -> [E12, x]
  EXPECT_EQ(d.matrix, Mat<Rational>::from_integers(kQ, 3, 3, {0, 0, 0, -1, 0, 1, 0, 0, 0}));
  EXPECT_TRUE(is_derivation(a, d));
  const auto dd = from_differential(a, d);
  EXPECT_TRUE(check_dialgebra(dd).empty());
  const Vec<Rational> e11{q(1), q(0), q(0)}, e12{q(0), q(1), q(0)}, e22{q(0), q(0), q(1)};
  EXPECT_EQ(multiply(dd, ProductTag::Left, e11, e22), e12);
  // x |- y = d(x) y
  EXPECT_EQ(multiply(dd, ProductTag::Right, e11, e22), naive_mul(a.product(), d(e11), e22));
}

TEST(Differential, ZeroMapGivesTrivial) {
  const auto a = upper_triangular<Rational>(kQ);
  EXPECT_EQ(from_differential(a, Derivation<Rational>{Mat<Rational>(kQ, 3, 3)}), Dialgebra<Rational>::trivial(kQ, 3));
}

TEST(Differential, RejectsNonSquareZero) {
  const auto a = upper_triangular<Rational>(kQ);
  const auto d = inner_derivation(a, 0);  // [E11, E12] = E12, so d² E12 = E12
  EXPECT_TRUE(is_derivation(a, d));
  EXPECT_FALSE((d.matrix * d.matrix).is_zero());
  EXPECT_THROW(from_differential(a, d), PreconditionError);
  Mat<Rational> m(kQ, 3, 3);
  m(0, 0) = q(1);
  EXPECT_THROW(from_differential(a, Derivation<Rational>{m}), PreconditionError);
}

TEST(Differential, ValidWheneverPreconditionsHold) {
  // over GF(2), every square-zero derivation of the upper-triangular algebra
  const auto f = gf(2);
  const auto a = upper_triangular<Residue>(f);
  std::size_t accepted = 0;
  for (const auto& e : all_vectors(f, 9)) {
    Mat<Residue> m(f, 3, 3);
    for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = e[i];
    const Derivation<Residue> d{m};
    if (!is_derivation(a, d) || !(m * m).is_zero()) {
      EXPECT_THROW(from_differential(a, d), PreconditionError);
      continue;
    }
    ++accepted;
    ASSERT_TRUE(check_dialgebra(from_differential(a, d)).empty());
  }
  EXPECT_GE(accepted, 2u);
}

TEST(Leibniz, BracketExamples) {
  const auto b = leibniz_bracket(canonical::algebra_I<Rational>(kQ));
  EXPECT_EQ(b.product(), (table<Rational>(kQ, 2, {{0, 1, 0, -1}})));
  EXPECT_TRUE(check_leibniz(b).empty());

  for (std::int64_t k : {1, 2, 3, -5}) {
    const auto bk = leibniz_bracket(canonical::algebra_II<Rational>(kQ, q(k)));
    EXPECT_EQ(bk.product(), (table<Rational>(kQ, 2, {{1, 1, 0, 1 - k}})));
    EXPECT_TRUE(check_leibniz(bk).empty());
    // [s,s] != 0 for k != 1: not skew-symmetric, so not a Lie bracket
    EXPECT_EQ(bk.product().is_zero(), k == 1);
  }

  auto bad = canonical::algebra_I<Rational>(kQ);
  bad.right().at(1, 0, 1) = q(1);
  EXPECT_THROW(leibniz_bracket(bad), PreconditionError);
}

TEST(Leibniz, FromAssociativeIsCommutator) {
  std::mt19937_64 rng(43);
  const auto ut = upper_triangular<Rational>(kQ);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = change_basis(ut, random_invertible<Rational>(rng, kQ, 3));
    ASSERT_EQ(leibniz_bracket(from_associative(a)), commutator_algebra(a));
  }
}

TEST(Leibniz, EveryValidDialgebraGivesLeibniz) {
  std::mt19937_64 rng(44);
  for (const auto& d : random_valid_rational(rng, 60)) ASSERT_TRUE(check_leibniz(leibniz_bracket(d)).empty());
  for (const auto& d : valid_dialgebras(gf(3), 2)) ASSERT_TRUE(check_leibniz(leibniz_bracket(d)).empty());
}

TEST(Quotient, Examples) {
  const auto d = canonical::algebra_I<Rational>(kQ);
  const auto r = Subspace<Rational>::span(kQ, 2, {{q(1), q(0)}});
  const auto qt = quotient(d, r);
  EXPECT_EQ(qt.algebra.dim(), 1u);
  EXPECT_EQ(qt.algebra.left(), (table<Rational>(kQ, 1, {{0, 0, 0, 1}})));
  EXPECT_EQ(qt.algebra.right(), (table<Rational>(kQ, 1, {{0, 0, 0, 1}})));
  EXPECT_EQ(qt.projection, Mat<Rational>::from_integers(kQ, 1, 2, {0, 1}));

  const auto same = quotient(d, Subspace<Rational>::zero(kQ, 2));
  EXPECT_EQ(same.algebra, d);
  EXPECT_EQ(same.projection, Mat<Rational>::identity(kQ, 2));

  EXPECT_EQ(quotient(d, Subspace<Rational>::whole(kQ, 2)).algebra.dim(), 0u);
  EXPECT_THROW(quotient(d, Subspace<Rational>::span(kQ, 2, {{q(0), q(1)}})), PreconditionError);
}

TEST(Quotient, ProjectionIsAHomomorphism) {
  const auto f = gf(2);
  for (const auto& d : valid_dialgebras(f, 2)) {
    for_each_subspace(f, 2, [&](const Subspace<Residue>& u) {
      if (!is_ideal(d, u)) return true;
      const auto qt = quotient(d, u);
      EXPECT_TRUE(check_dialgebra(qt.algebra).empty());
      for (auto tag : {ProductTag::Left, ProductTag::Right})
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) {
            const auto x = unit_vec<Residue>(f, 2, i), y = unit_vec<Residue>(f, 2, j);
            EXPECT_EQ(qt.projection.apply(naive_mul(d.product(tag), x, y)),
                      naive_mul(qt.algebra.product(tag), qt.projection.apply(x), qt.projection.apply(y)));
          }
      return true;
    });
  }
}
