#include <doctest.h>

#include <dunkl/bi_algebra.hpp>

using namespace dunkl;

namespace {

Realization scalar3() {
  return {Realization::Kind::scalar,
          ParameterSet(3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)})};
}

Realization scalar4() {
  return {Realization::Kind::scalar,
          ParameterSet(4, {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(2, 3)})};
}

}  // namespace

TEST_CASE("scalar model squares carry the opposite sign") {
  auto real = scalar3();
  const auto& params = real.params();
  IndexSet full = full_set(3);
  auto d = real.dirac(full);
  auto x = real.position(full);
  CHECK(real.ops_equal(d * d, laplace(params, full), 4));
  CHECK(real.ops_equal(x * x, norm2(full), 4));

  // the sign flip holds on every subset as well
  for (IndexSet a = 0; a <= full; ++a) {
    auto da = real.dirac(a);
    CHECK(real.ops_equal(da * da, laplace(params, a), 3));
  }
}

TEST_CASE("osp relations hold in the scalar realization") {
  auto real = scalar3();
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    for (const auto& rel : osp_relations(real, a)) {
      INFO(rel.name << " for A=" << set_to_string(a));
      CHECK(real.ops_equal(rel.lhs, rel.rhs, 3));
    }
  }
}

TEST_CASE("scalar Gamma boundary values") {
  auto real = scalar3();
  const auto& params = real.params();
  CHECK(real.ops_equal(real.gamma(0), Operator::scalar(Rational(-1, 2)), 3));
  for (int k = 1; k <= 3; ++k) {
    CHECK(real.ops_equal(real.gamma(singleton(k)), Operator::scalar(params.get_mu(k)), 3));
  }
}

TEST_CASE("scalar Gamma operators commute with D and X on the same set") {
  auto real = scalar3();
  IndexSet full = full_set(3);
  auto d = real.dirac(full);
  auto x = real.position(full);
  for (IndexSet a = 0; a <= full; ++a) {
    auto g = real.gamma(a);
    CHECK(real.ops_equal(commutator(g, d), Operator::zero(), 3));
    CHECK(real.ops_equal(commutator(g, x), Operator::zero(), 3));
  }
}

TEST_CASE("structure relation in the scalar realization") {
  auto real = scalar3();
  for (IndexSet a = 0; a <= full_set(3); ++a) {
    for (IndexSet b = 0; b <= full_set(3); ++b) {
      auto check = verify_bi_relation(real, a, b, 3);
      INFO("A=" << set_to_string(a) << " B=" << set_to_string(b));
      CHECK(check.passed);
    }
  }

  auto real4 = scalar4();
  CHECK(verify_bi_relation(real4, singleton(1) | singleton(2) | singleton(3),
                           singleton(2) | singleton(3) | singleton(4), 3)
            .passed);
}

TEST_CASE("scalar Casimirs and derived identities") {
  auto real = scalar3();
  CHECK(verify_casimir_Q_value(real, full_set(3), 3).passed);
  CHECK(verify_casimir_C_value(real, full_set(3), 3).passed);
  CHECK(verify_square_sum_identity(real, 1, 3).passed);
  for (const auto& check : rank_one_structure_constants(real, 3)) {
    INFO(check.name);
    CHECK(check.passed);
  }

  auto real4 = scalar4();
  CHECK(verify_casimir_C_value(real4, full_set(4), 3).passed);
  CHECK(verify_abelian_subalgebra(real4, {3, 1, 4, 2}, 3).passed);
}

TEST_CASE("scalar realization preserves the unit blade") {
  auto real = scalar3();
  auto g = real.gamma(full_set(3));
  auto d = real.dirac(full_set(3));
  for (int k = 0; k <= 3; ++k) {
    for (const auto& p : scalar_basis_of_graded_component(3, k)) {
      for (const auto& image : {g.apply(p), d.apply(p)}) {
        for (const auto& [key, coeff] : image.terms()) {
          CHECK(key.second.bits == 0);
        }
      }
    }
  }
}
