#include <doctest.h>

#include <random>

#include <dunkl/operators.hpp>
#include <dunkl/realization.hpp>

using namespace dunkl;

namespace {

const ParameterSet kParams3(3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
const ParameterSet kParams2(2, {Rational(2, 5), Rational(3, 7)});

SpinorPoly one(int n) { return SpinorPoly::constant(n, 1); }

}  // namespace

TEST_CASE("Dunkl operator on simple inputs") {
  const int n = 2;
  const auto& mu1 = kParams2.get_mu(1);
  auto t1 = dunkl_T(kParams2, 1);

  auto x1 = SpinorPoly::coordinate(n, 1);
  CHECK(t1.apply(x1) == one(n).scaled(1 + 2 * mu1));

  auto x1sq = x1.mul(x1);
  CHECK(t1.apply(x1sq) == x1.scaled(2));

  auto x2 = SpinorPoly::coordinate(n, 2);
  CHECK(t1.apply(x2).is_zero());
}

TEST_CASE("Dunkl operators commute") {
  CHECK(operators_equal_on_degree(dunkl_T(kParams2, 1) * dunkl_T(kParams2, 2),
                                  dunkl_T(kParams2, 2) * dunkl_T(kParams2, 1), 2, 5));
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      CHECK(operators_equal_on_degree(dunkl_T(kParams3, i) * dunkl_T(kParams3, j),
                                      dunkl_T(kParams3, j) * dunkl_T(kParams3, i), 3, 4));
    }
  }
}

TEST_CASE("Dirac and position operators on simple inputs") {
  const int n = 2;
  const auto& mu1 = kParams2.get_mu(1);

  auto d1 = dirac_D(kParams2, singleton(1));
  CHECK(d1.apply(SpinorPoly::coordinate(n, 1)) ==
        one(n).scaled(1 + 2 * mu1).clifford_left(generator(1)));

  auto x12 = position_X(full_set(2));
  CHECK(x12.apply(one(n)) == SpinorPoly::coordinate(n, 1).clifford_left(generator(1)) +
                                 SpinorPoly::coordinate(n, 2).clifford_left(generator(2)));

  auto d_empty = dirac_D(kParams2, 0);
  CHECK(d_empty.apply(SpinorPoly::coordinate(n, 1)).is_zero());
}

TEST_CASE("Euler, Laplace and square-radius operators") {
  const int n = 2;
  auto x1x2sq = SpinorPoly::term(n, {1, 2}, unit_blade(), 1);
  CHECK(euler(full_set(2)).apply(x1x2sq) == x1x2sq.scaled(3));

  const auto& mu1 = kParams2.get_mu(1);
  auto x1sq = SpinorPoly::term(n, {2, 0}, unit_blade(), 1);
  CHECK(laplace(kParams2, singleton(1)).apply(x1sq) == one(n).scaled(2 * (1 + 2 * mu1)));

  CHECK(norm2(full_set(2)).apply(one(n)) ==
        SpinorPoly::term(n, {2, 0}, unit_blade(), 1) + SpinorPoly::term(n, {0, 2}, unit_blade(), 1));
}

TEST_CASE("squares of Dirac and position operators") {
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    auto d = dirac_D(kParams3, a);
    auto x = position_X(a);
    CHECK(operators_equal_on_degree(d * d, Rational(-1) * laplace(kParams3, a), 3, 3));
    CHECK(operators_equal_on_degree(x * x, Rational(-1) * norm2(a), 3, 3));
  }
}

TEST_CASE("sCasimir degenerate and constant values") {
  const int n = 3;
  auto s_empty = scasimir(kParams3, 0);
  auto p = SpinorPoly::coordinate(n, 2).clifford_left(generator(1));
  CHECK(s_empty.apply(p) == p.scaled(Rational(-1, 2)));

  // On constants S_{1}(1) = mu_1 and S_{12}(1) = gamma_{12} - 1/2, matching
  // the stated Gamma values since the reflections fix constants.
  auto s1 = scasimir(kParams3, singleton(1));
  CHECK(s1.apply(one(n)) == one(n).scaled(kParams3.get_mu(1)));

  IndexSet a12 = singleton(1) | singleton(2);
  auto s12 = scasimir(kParams3, a12);
  CHECK(s12.apply(one(n)) == one(n).scaled(kParams3.gamma(a12) - Rational(1, 2)));
}

TEST_CASE("sCasimir anticommutes with D and x") {
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    auto s = scasimir(kParams3, a);
    CHECK(operators_equal_on_degree(anticommutator(s, dirac_D(kParams3, a)), Operator::zero(), 3,
                                    3));
    CHECK(operators_equal_on_degree(anticommutator(s, position_X(a)), Operator::zero(), 3, 3));
  }
}

TEST_CASE("Gamma boundary values") {
  const int n = 3;
  CHECK(operators_equal_on_degree(gamma_op(kParams3, 0),
                                  Operator::scalar(Rational(-1, 2)), n, 2));
  for (int k = 1; k <= 3; ++k) {
    CHECK(operators_equal_on_degree(gamma_op(kParams3, singleton(k)),
                                    Operator::scalar(kParams3.get_mu(k)), n, 3));
  }
  IndexSet a12 = singleton(1) | singleton(2);
  CHECK(gamma_op(kParams3, a12).apply(one(n)) ==
        one(n).scaled(kParams3.get_mu(1) + kParams3.get_mu(2) + Rational(1, 2)));
}

TEST_CASE("angular momentum operator M_12") {
  const int n = 3;
  const auto& mu1 = kParams3.get_mu(1);
  auto m12 = angular_M(kParams3, 1, 2);
  auto expected = SpinorPoly::coordinate(n, 2)
                      .clifford_left(Blade{singleton(1) | singleton(2)})
                      .scaled(-(1 + 2 * mu1));
  CHECK(m12.apply(SpinorPoly::coordinate(n, 1)) == expected);
}

TEST_CASE("Gamma agrees with its expanded form") {
  CHECK(operators_equal_on_degree(gamma_explicit(kParams3, 0),
                                  Operator::scalar(Rational(-1, 2)), 3, 2));
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    CHECK(operators_equal_on_degree(gamma_op(kParams3, a), gamma_explicit(kParams3, a), 3, 4));
  }
}

TEST_CASE("Gamma commutes with the full Dirac and position operators") {
  auto d = dirac_D(kParams3, full_set(3));
  auto x = position_X(full_set(3));
  auto g_full = gamma_op(kParams3, full_set(3));
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    auto g = gamma_op(kParams3, a);
    CHECK(operators_equal_on_degree(commutator(g, d), Operator::zero(), 3, 3));
    CHECK(operators_equal_on_degree(commutator(g, x), Operator::zero(), 3, 3));
    CHECK(operators_equal_on_degree(commutator(g, g_full), Operator::zero(), 3, 3));
  }
}

TEST_CASE("Gamma preserves polynomial degree") {
  for (int k = 0; k <= 3; ++k) {
    for (const auto& p : basis_of_graded_component(3, k)) {
      auto image = gamma_op(kParams3, full_set(3)).apply(p);
      if (!image.is_zero()) {
        CHECK(image.is_homogeneous());
        CHECK(image.poly_degree() == k);
      }
    }
  }
}

TEST_CASE("operator equality oracle reports a witness") {
  auto mismatch =
      operators_differ_on_degree(Operator::identity(), Operator::scalar(2), 2, 0);
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->input == SpinorPoly::constant(2, 1));
  CHECK(mismatch->lhs_image == SpinorPoly::constant(2, 1));
  CHECK(mismatch->rhs_image == SpinorPoly::constant(2, 2));
}

TEST_CASE("commutator and anticommutator basics") {
  auto t1 = dunkl_T(kParams2, 1);
  CHECK(operators_equal_on_degree(commutator(t1, t1), Operator::zero(), 2, 4));

  auto e1 = Operator::clifford_left(generator(1));
  auto e2 = Operator::clifford_left(generator(2));
  CHECK(operators_equal_on_degree(anticommutator(e1, e2), Operator::zero(), 2, 2));
  CHECK(operators_equal_on_degree(anticommutator(e1, e1), Operator::scalar(-2), 2, 2));
}

TEST_CASE("osp relations hold in the Clifford realization") {
  Realization real(Realization::Kind::clifford, kParams3);
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    for (const auto& rel : osp_relations(real, a)) {
      INFO(rel.name << " for A=" << set_to_string(a));
      CHECK(real.ops_equal(rel.lhs, rel.rhs, 3));
    }
  }
}

TEST_CASE("operator evaluation is linear") {
  std::mt19937_64 rng(11);
  const int n = 3;
  auto random_poly = [&]() {
    SpinorPoly p(n);
    for (int t = 0; t < 5; ++t) {
      Monomial m(n);
      for (auto& e : m) e = static_cast<int>(rng() % 3);
      p.add_term(m, Blade{static_cast<IndexSet>(rng() % 8)},
                 Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3)));
    }
    return p;
  };
  std::vector<Operator> ops = {gamma_op(kParams3, full_set(3)),
                               dirac_D(kParams3, full_set(3)),
                               scasimir(kParams3, singleton(1) | singleton(3))};
  for (const auto& op : ops) {
    for (int trial = 0; trial < 10; ++trial) {
      auto p = random_poly();
      auto q = random_poly();
      Rational c(static_cast<int>(rng() % 7) - 3, 2);
      CHECK(op.apply(p + q) == op.apply(p) + op.apply(q));
      CHECK(op.apply(p.scaled(c)) == op.apply(p).scaled(c));
    }
  }
}

TEST_CASE("operator debug rendering") {
  auto op = Operator::partial(1) + Rational(1, 2) * Operator::reflect(2);
  CHECK(op.render() == "(+ d1 (. 1/2 r2))");
}
