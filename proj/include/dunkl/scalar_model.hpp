#pragma once

#include "operators.hpp"
#include "params.hpp"

namespace dunkl {

// Clifford-free realization: D = sum_i T_i R_i and X = sum_i x_i R_i with
// R_i the product of the reflections r_{i+1}...r_n. Here D^2 = +Delta and
// X^2 = +||x||^2, with signs opposite to the Clifford realization.

// R_i = r_{i+1} r_{i+2} ... r_n (the empty product for i = n).
inline Operator tail_reflections(int i, int n) {
  std::vector<Operator> parts;
  for (int j = i + 1; j <= n; ++j) parts.push_back(Operator::reflect(j));
  return Operator::compose(std::move(parts));
}

inline Operator scalar_D(const ParameterSet& params, IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    parts.push_back(dunkl_T(params, i) * tail_reflections(i, params.n));
  }
  return Operator::sum(std::move(parts));
}

inline Operator scalar_X(const ParameterSet& params, IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    parts.push_back(Operator::mul_coord(i) * tail_reflections(i, params.n));
  }
  return Operator::sum(std::move(parts));
}

// S_A = (1/2)([D_A, X_A] - 1); note the commutator order is the reverse of
// the one used in the Clifford realization.
inline Operator scalar_scasimir(const ParameterSet& params, IndexSet a) {
  Operator d = scalar_D(params, a);
  Operator x = scalar_X(params, a);
  return Rational(1, 2) * (commutator(d, x) - Operator::identity());
}

inline Operator scalar_gamma(const ParameterSet& params, IndexSet a) {
  return scalar_scasimir(params, a) * reflection_product(a);
}

}  // namespace dunkl
