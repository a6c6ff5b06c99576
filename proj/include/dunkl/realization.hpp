#pragma once

#include <string>

#include "operators.hpp"
#include "scalar_model.hpp"

namespace dunkl {

// Common face of the Clifford and scalar realizations, so every identity
// suite can run against either. The scalar realization works on plain
// polynomials (unit blade only) and flips the sign of the three osp(1|2)
// anticommutators.
class Realization {
 public:
  enum class Kind { clifford, scalar };

  Realization(Kind kind, ParameterSet params) : kind_(kind), params_(std::move(params)) {}

  Kind kind() const { return kind_; }
  const ParameterSet& params() const { return params_; }
  int n() const { return params_.n; }
  bool uses_scalar_basis() const { return kind_ == Kind::scalar; }
  std::string name() const { return kind_ == Kind::clifford ? "clifford" : "scalar"; }

  // Sign s such that D_A^2 = -s Delta_A ... i.e. {D,D} = 2*dirac_square_sign*Delta.
  int dirac_square_sign() const { return kind_ == Kind::clifford ? -1 : 1; }

  Operator dirac(IndexSet a) const {
    return kind_ == Kind::clifford ? dirac_D(params_, a) : scalar_D(params_, a);
  }
  Operator position(IndexSet a) const {
    return kind_ == Kind::clifford ? position_X(a) : scalar_X(params_, a);
  }
  Operator scasimir(IndexSet a) const {
    return kind_ == Kind::clifford ? dunkl::scasimir(params_, a) : scalar_scasimir(params_, a);
  }
  Operator gamma(IndexSet a) const {
    return kind_ == Kind::clifford ? gamma_op(params_, a) : scalar_gamma(params_, a);
  }

  bool ops_equal(const Operator& lhs, const Operator& rhs, int k_max) const {
    return operators_equal_on_degree(lhs, rhs, n(), k_max, uses_scalar_basis());
  }
  std::optional<OperatorMismatch> ops_differ(const Operator& lhs, const Operator& rhs,
                                             int k_max) const {
    return operators_differ_on_degree(lhs, rhs, n(), k_max, uses_scalar_basis());
  }

 private:
  Kind kind_;
  ParameterSet params_;
};

struct NamedIdentity {
  std::string name;
  Operator lhs;
  Operator rhs;
};

// The osp(1|2) relations generated by (D_A, x_A) together with the Euler,
// Laplace and square-radius operators. In the scalar realization the three
// anticommutators carry the opposite sign.
inline std::vector<NamedIdentity> osp_relations(const Realization& real, IndexSet a) {
  const auto& params = real.params();
  const Rational gamma_const = params.gamma(a);
  Operator d = real.dirac(a);
  Operator x = real.position(a);
  Operator lap = laplace(params, a);
  Operator r2 = norm2(a);
  Operator eg = euler(a) + Operator::scalar(gamma_const);
  const Rational s(real.dirac_square_sign());

  return {
      {"{x,x} = 2s||x||^2", anticommutator(x, x), (2 * s) * r2},
      {"{D,D} = 2s Delta", anticommutator(d, d), (2 * s) * lap},
      {"{x,D} = 2s(E+gamma)", anticommutator(x, d), (2 * s) * eg},
      {"[D,E+gamma] = D", commutator(d, eg), d},
      {"[D,||x||^2] = 2x", commutator(d, r2), 2 * x},
      {"[E+gamma,x] = x", commutator(eg, x), x},
      {"[Delta,x] = 2D", commutator(lap, x), 2 * d},
      {"[Delta,E+gamma] = 2Delta", commutator(lap, eg), 2 * lap},
      {"[Delta,||x||^2] = 4(E+gamma)", commutator(lap, r2), 4 * eg},
      {"[E+gamma,||x||^2] = 2||x||^2", commutator(eg, r2), 2 * r2},
  };
}

}  // namespace dunkl
