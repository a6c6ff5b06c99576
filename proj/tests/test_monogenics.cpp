#include <doctest.h>

#include <cmath>
#include <random>

#include <dunkl/monogenics.hpp>

using namespace dunkl;

namespace {

const ParameterSet kParams3(3, {Rational(1, 2), Rational(1, 3), Rational(1, 4)});
const ParameterSet kParams4(4, {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(2, 3)});

Bivariate biv(std::initializer_list<std::pair<std::pair<int, int>, Rational>> init) {
  Bivariate out;
  for (const auto& [key, value] : init) out[key] = value;
  return out;
}

}  // namespace

TEST_CASE("homogenized Jacobi polynomials") {
  CHECK(jacobi_homogenized(-1, Rational(1), Rational(2)).empty());
  CHECK(jacobi_homogenized(0, Rational(1, 3), Rational(2, 5)) == biv({{{0, 0}, 1}}));

  Rational alpha(1, 3), beta(2, 5);
  CHECK(jacobi_homogenized(1, alpha, beta) ==
        biv({{{1, 0}, (alpha + beta + 2) / 2}, {{0, 1}, (alpha - beta) / 2}}));

  // Legendre, m = 2: v^2 P_2(u/v) = (3u^2 - v^2)/2
  CHECK(jacobi_homogenized(2, Rational(0), Rational(0)) ==
        biv({{{2, 0}, Rational(3, 2)}, {{0, 2}, Rational(-1, 2)}}));
}

TEST_CASE("CK extension on simple inputs") {
  const int n = 3;
  auto one = SpinorPoly::constant(n, 1);
  CHECK(ck_extend(kParams3, one, 2) == one);
  CHECK(ck_extend(kParams3, one, 3) == one);

  auto x1 = SpinorPoly::coordinate(n, 1);
  Rational c = (1 + 2 * kParams3.get_mu(1)) / (1 + 2 * kParams3.get_mu(2));
  auto e2e1 = SpinorPoly::term(n, Monomial(n, 0), generator(2), 1)
                  .mul(SpinorPoly::term(n, Monomial(n, 0), generator(1), 1));
  CHECK(ck_extend(kParams3, x1, 2) ==
        x1 + e2e1.mul(SpinorPoly::coordinate(n, 2)).scaled(c));
}

TEST_CASE("CK extension: kernel membership and restriction") {
  std::mt19937_64 rng(23);
  for (int j = 2; j <= 4; ++j) {
    const ParameterSet& params = j <= 3 ? kParams3 : kParams4;
    const int n = params.n;
    for (int deg = 0; deg <= 3; ++deg) {
      SpinorPoly p(n);
      for (const auto& m : monomials_of_degree(j - 1, deg)) {
        Monomial full(n, 0);
        for (int i = 0; i < j - 1; ++i) full[i] = m[i];
        p.add_term(full, Blade{static_cast<IndexSet>(rng() % (IndexSet{1} << n))},
                   Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4)));
      }
      if (p.is_zero()) continue;
      SpinorPoly ext = ck_extend(params, p, j);
      CHECK(dirac_D(params, range_set(1, j)).apply(ext).is_zero());
      CHECK(ext.restrict_coordinate(j) == p);
      CHECK(ext.is_homogeneous());
    }
  }
}

TEST_CASE("CK extension input validation") {
  CHECK_THROWS(ck_extend(kParams3, SpinorPoly::coordinate(3, 2), 2));
  CHECK_THROWS(ck_extend(kParams3,
                         SpinorPoly::constant(3, 1) + SpinorPoly::coordinate(3, 1), 2));
}

TEST_CASE("basis functions: kernel membership, homogeneity, rank") {
  auto d3 = dirac_D(kParams3, full_set(3));
  for (int k = 0; k <= 3; ++k) {
    for (const Blade s : {unit_blade(), generator(2), Blade{full_set(3)}}) {
      std::vector<SpinorPoly> funcs;
      for (const auto& mi : multi_indices(3, k)) {
        SpinorPoly psi = basis_psi(kParams3, {mi, s});
        CHECK(d3.apply(psi).is_zero());
        CHECK(psi.is_homogeneous());
        CHECK(psi.poly_degree() == k);
        funcs.push_back(std::move(psi));
      }
      CHECK(static_cast<Integer>(funcs.size()) == binomial(3 + k - 2, k));
      CHECK(coefficient_matrix(funcs).rank() == static_cast<int>(funcs.size()));
    }
  }

  auto d4 = dirac_D(kParams4, full_set(4));
  for (int k = 0; k <= 2; ++k) {
    std::vector<SpinorPoly> funcs;
    for (const auto& mi : multi_indices(4, k)) {
      SpinorPoly psi = basis_psi(kParams4, {mi, unit_blade()});
      CHECK(d4.apply(psi).is_zero());
      funcs.push_back(std::move(psi));
    }
    CHECK(static_cast<Integer>(funcs.size()) == binomial(4 + k - 2, k));
    CHECK(coefficient_matrix(funcs).rank() == static_cast<int>(funcs.size()));
  }

  CHECK(basis_psi(kParams3, {MultiIndex{{0, 0}}, generator(3)}) ==
        SpinorPoly::term(3, Monomial(3, 0), generator(3), 1));
}

TEST_CASE("closed-form and tower constructions agree") {
  for (int k = 0; k <= 3; ++k) {
    for (const auto& mi : multi_indices(3, k)) {
      for (const Blade s : {unit_blade(), generator(1)}) {
        SpinorPoly lhs = explicit_psi(kParams3, {mi, s});
        SpinorPoly rhs = basis_psi(kParams3, {mi, s});
        INFO("j=" << mi.to_string());
        CHECK(lhs == rhs);
        auto ratio = lhs.ratio_to(rhs);
        REQUIRE(ratio.has_value());
        CHECK(*ratio == 1);
      }
    }
  }
  for (int k = 0; k <= 2; ++k) {
    for (const auto& mi : multi_indices(4, k)) {
      INFO("j=" << mi.to_string());
      CHECK(explicit_psi(kParams4, {mi, unit_blade()}) ==
            basis_psi(kParams4, {mi, unit_blade()}));
    }
  }
}

TEST_CASE("tower eigenvalues") {
  for (int k = 0; k <= 3; ++k) {
    for (const auto& mi : multi_indices(3, k)) {
      for (int ell = 2; ell <= 3; ++ell) {
        auto check = verify_eigenvalues(kParams3, {mi, generator(2)}, ell);
        INFO(check.name);
        CHECK(check.passed);
      }
    }
  }
  for (int k = 0; k <= 2; ++k) {
    for (const auto& mi : multi_indices(4, k)) {
      for (int ell = 2; ell <= 4; ++ell) {
        auto check = verify_eigenvalues(kParams4, {mi, unit_blade()}, ell);
        INFO(check.name);
        CHECK(check.passed);
      }
    }
  }

  // spot values
  Rational g2 = kParams3.gamma(range_set(1, 2));
  CHECK(tower_eigenvalue(kParams3, MultiIndex{{1, 0}}, 2) == -(g2 + Rational(1, 2)));
  Rational g3 = kParams3.gamma(full_set(3));
  CHECK(tower_eigenvalue(kParams3, MultiIndex{{1, 1}}, 3) == g3 + Rational(3, 2));
  CHECK(tower_eigenvalue(kParams3, MultiIndex{{0, 0}}, 2) == g2 - Rational(1, 2));
}

TEST_CASE("power actions on monogenics") {
  for (int ldeg = 0; ldeg <= 2; ++ldeg) {
    auto labels = multi_indices(3, ldeg);
    SpinorPoly m = basis_psi(kParams3, {labels.front(), generator(2)});
    for (int k = 0; k <= 2; ++k) {
      for (int j = 0; j <= k; ++j) {
        for (const auto& check : verify_power_actions(kParams3, m, j, k)) {
          INFO(check.name << " l=" << ldeg << " j=" << j << " k=" << k);
          CHECK(check.passed);
        }
      }
    }
  }
}

TEST_CASE("Fischer decomposition rank") {
  CHECK(fischer_decompose_rank(kParams3, 0) == 8);
  CHECK(fischer_decompose_rank(kParams3, 2) == 48);
  CHECK(fischer_decompose_rank(kParams4, 2) == 160);
}

TEST_CASE("sphere moments: closed form") {
  CHECK(moment(kParams3, {0, 0, 0}) == 1);
  CHECK(moment(kParams3, {1, 0, 0}) == 0);
  CHECK(moment(kParams3, {1, 2, 1}) == 0);

  // the formula survives the mu -> 0 limit: (1/2)_1 / (1)_1 = 1/2 and
  // (1/2)_1^2 / (1)_2 = 1/8 match the classical circle averages
  ParameterSet tiny(2, {Rational(1, 1000000000), Rational(1, 1000000000)});
  CHECK(std::abs(moment(tiny, {2, 0}).convert_to<double>() - 0.5) < 1e-6);
  CHECK(std::abs(moment(tiny, {2, 2}).convert_to<double>() - 0.125) < 1e-6);

  // positivity on even monomials
  for (const auto& m : monomials_of_degree(3, 6)) {
    bool even = true;
    for (int e : m) even = even && e % 2 == 0;
    if (even) CHECK(moment(kParams3, m) > 0);
  }
}

TEST_CASE("sphere moments: quadrature oracle") {
  // circle, integer weights so the integrand is smooth
  {
    ParameterSet params(2, {Rational(1), Rational(2)});
    auto quad = [&](int a, int b) {
      const int steps = 1 << 14;
      double num = 0, den = 0;
      for (int i = 0; i < steps; ++i) {
        double t = 2 * M_PI * i / steps;
        double c = std::cos(t), s = std::sin(t);
        double w = std::pow(c, 2) * std::pow(s, 4);
        num += std::pow(c, a) * std::pow(s, b) * w;
        den += w;
      }
      return num / den;
    };
    for (int a = 0; a <= 4; a += 2) {
      for (int b = 0; b <= 4; b += 2) {
        double exact = moment(params, {a, b}).convert_to<double>();
        CHECK(std::abs(exact - quad(a, b)) < 1e-8);
      }
    }
    // odd exponents vanish in quadrature too
    CHECK(std::abs(quad(1, 2)) < 1e-12);
  }

  // 2-sphere
  {
    ParameterSet params(3, {Rational(1), Rational(1), Rational(2)});
    auto quad = [&](int a, int b, int c) {
      const int nt = 800, np = 800;
      double num = 0, den = 0;
      for (int i = 0; i < nt; ++i) {
        double theta = M_PI * (i + 0.5) / nt;
        double st = std::sin(theta), ct = std::cos(theta);
        for (int j = 0; j < np; ++j) {
          double phi = 2 * M_PI * j / np;
          double x = st * std::cos(phi), y = st * std::sin(phi), z = ct;
          double w = x * x * y * y * std::pow(z, 4) * st;
          num += std::pow(x, a) * std::pow(y, b) * std::pow(z, c) * w;
          den += w;
        }
      }
      return num / den;
    };
    for (const Monomial m : {Monomial{2, 0, 0}, Monomial{0, 2, 2}, Monomial{4, 0, 0},
                             Monomial{2, 2, 0}, Monomial{0, 0, 4}}) {
      double exact = moment(params, m).convert_to<double>();
      CHECK(std::abs(exact - quad(m[0], m[1], m[2])) < 1e-8);
    }
  }
}

TEST_CASE("inner product: blade orthonormality and skew-adjointness") {
  for (const auto& b1 : all_blades(3)) {
    for (const auto& b2 : all_blades(3)) {
      auto p = SpinorPoly::term(3, Monomial(3, 0), b1, 1);
      auto q = SpinorPoly::term(3, Monomial(3, 0), b2, 1);
      CHECK(inner_product(kParams3, p, q) == (b1.bits == b2.bits ? 1 : 0));
    }
  }

  std::mt19937_64 rng(31);
  auto random_poly = [&](int deg) {
    SpinorPoly p(3);
    for (int t = 0; t < 6; ++t) {
      auto monos = monomials_of_degree(3, deg);
      p.add_term(monos[rng() % monos.size()], Blade{static_cast<IndexSet>(rng() % 8)},
                 Rational(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3)));
    }
    return p;
  };
  for (int trial = 0; trial < 10; ++trial) {
    int deg = static_cast<int>(rng() % 3);
    auto p = random_poly(deg);
    auto q = random_poly(deg);
    for (int i = 1; i <= 3; ++i) {
      CHECK(inner_product(kParams3, p.clifford_left(generator(i)), q) ==
            -inner_product(kParams3, p, q.clifford_left(generator(i))));
    }
  }

  CHECK_THROWS(inner_product(kParams3, SpinorPoly::coordinate(3, 1),
                             SpinorPoly::coordinate(3, 1).mul(SpinorPoly::coordinate(3, 2))));
}

TEST_CASE("Gram matrices of the basis are diagonal and positive") {
  for (int k = 1; k <= 3; ++k) {
    auto labels = multi_indices(3, k);
    std::vector<SpinorPoly> psi;
    for (const auto& mi : labels) psi.push_back(basis_psi(kParams3, {mi, generator(1)}));
    for (size_t a = 0; a < psi.size(); ++a) {
      for (size_t b = 0; b < psi.size(); ++b) {
        Rational ip = inner_product(kParams3, psi[a], psi[b]);
        if (a == b) {
          CHECK(ip > 0);
        } else {
          CHECK(ip == 0);
        }
      }
    }
  }
}

TEST_CASE("second eigenbasis: monogenic, eigenfunctions of the cycled tower") {
  auto pi = cycle_permutation(3);
  CHECK(pi == std::vector<int>{2, 3, 1});

  auto d = dirac_D(kParams3, full_set(3));
  for (int k = 0; k <= 3; ++k) {
    for (const auto& mi : multi_indices(3, k)) {
      SpinorPoly phi = basis_phi(kParams3, {mi, unit_blade()});
      CHECK(d.apply(phi).is_zero());
      // Gamma_{pi[2]} = Gamma_{{2,3}}
      auto g = gamma_op(kParams3, singleton(2) | singleton(3));
      CHECK(g.apply(phi) == phi.scaled(phi_eigenvalue(kParams3, mi, 2)));
    }
  }
}

TEST_CASE("connection coefficients: unitarity in Gram-weighted form") {
  {
    auto data = connection_matrix(kParams3, 0, unit_blade());
    CHECK(data.overlaps.at(0, 0) == 1);
  }
  for (int k = 0; k <= 3; ++k) {
    CHECK(verify_connection_unitarity(kParams3, k));
  }
  for (int k = 0; k <= 2; ++k) {
    CHECK(verify_connection_unitarity(kParams4, k));
  }
  // the fixed-s raw overlap export keeps positive norms on both sides
  for (int k = 1; k <= 3; ++k) {
    auto data = connection_matrix(kParams3, k, generator(3));
    for (const auto& g : data.gram_psi) CHECK(g > 0);
    for (const auto& g : data.gram_phi) CHECK(g > 0);
  }
}

TEST_CASE("connection coefficients match the three-term recurrence oracle") {
  for (int k = 0; k <= 3; ++k) {
    for (const Blade s : {unit_blade(), generator(2)}) {
      CHECK(verify_rank_one_recurrence(kParams3, k, s));
    }
  }
}

TEST_CASE("basis relabeling under permutations") {
  auto p = SpinorPoly::coordinate(3, 1).clifford_left(generator(1));
  CHECK(permute_basis(p, {1, 2, 3}) == p);
  CHECK(permute_basis(p, {2, 1, 3}) ==
        SpinorPoly::coordinate(3, 2).clifford_left(generator(2)));

  auto e1e2 = SpinorPoly::term(3, Monomial(3, 0), Blade{singleton(1) | singleton(2)}, 1);
  CHECK(permute_basis(e1e2, {2, 1, 3}) == e1e2.scaled(-1));
}
