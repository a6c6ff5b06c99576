#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "monogenics.hpp"

namespace dunkl {

namespace detail {
inline void check_step(const Realization& real, int ell, int sign) {
  if (ell < 1 || ell > real.n() - 2) throw std::invalid_argument("step index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}
}  // namespace detail

// The two halves of the raising/lowering operator at step ell:
//   A = (G_{l+1,l+2} +- G_{[l] u {l+2}})(G_{[l+1]} -+ 1/2)
//   B = -(G_{l+2} +- G_{[l+2]})(G_{[l]} +- G_{l+1})
inline Operator ladder_A(const Realization& real, int ell, int sign) {
  detail::check_step(real, ell, sign);
  const Rational s(sign);
  Operator left = real.gamma(singleton(ell + 1) | singleton(ell + 2)) +
                  s * real.gamma(range_set(1, ell) | singleton(ell + 2));
  Operator right = real.gamma(range_set(1, ell + 1)) - Operator::scalar(s / 2);
  return left * right;
}

inline Operator ladder_B(const Realization& real, int ell, int sign) {
  detail::check_step(real, ell, sign);
  const Rational s(sign);
  Operator left = real.gamma(singleton(ell + 2)) + s * real.gamma(range_set(1, ell + 2));
  Operator right = real.gamma(range_set(1, ell)) + s * real.gamma(singleton(ell + 1));
  return Rational(-1) * (left * right);
}

inline Operator ladder_K(const Realization& real, int ell, int sign) {
  return ladder_A(real, ell, sign) + ladder_B(real, ell, sign);
}

// [K_l^pm, G_{[j]}] = 0 for j != l+1; {K_l^pm, G_{[l+1]}} = pm K_l^pm.
inline RelationCheck verify_covariance(const Realization& real, int ell, int sign, int j,
                                       int k_max) {
  detail::check_step(real, ell, sign);
  if (j < 1 || j > real.n()) throw std::invalid_argument("index out of range");
  Operator k = ladder_K(real, ell, sign);
  Operator g = real.gamma(range_set(1, j));
  Operator lhs = j == ell + 1 ? anticommutator(k, g) : commutator(k, g);
  Operator rhs = j == ell + 1 ? Rational(sign) * k : Operator::zero();
  const std::string name = "ladder_covariance l=" + std::to_string(ell) +
                           (sign > 0 ? "+" : "-") + " j=" + std::to_string(j);
  return RelationCheck::from(name, real, range_set(1, j), 0, k_max,
                             real.ops_differ(lhs, rhs, k_max));
}

// [K_l^pm]^2 equals the ordered product of four linear-in-Gamma factors.
inline RelationCheck verify_square_factorization(const Realization& real, int ell, int sign,
                                                 int k_max) {
  detail::check_step(real, ell, sign);
  const Rational s(sign);
  Operator k = ladder_K(real, ell, sign);
  Operator g_l = real.gamma(range_set(1, ell));
  Operator g_l1 = real.gamma(range_set(1, ell + 1));
  Operator g_l2 = real.gamma(range_set(1, ell + 2));
  Operator e1 = real.gamma(singleton(ell + 1));
  Operator e2 = real.gamma(singleton(ell + 2));
  Operator half = Operator::scalar(s / 2);
  Operator rhs = (g_l2 - g_l1 + s * e2 + half) * (g_l2 + g_l1 + s * e2 - half) *
                 (g_l - g_l1 + s * e1 + half) * (g_l + g_l1 + s * e1 - half);
  const std::string name =
      "ladder_square_factorization l=" + std::to_string(ell) + (sign > 0 ? "+" : "-");
  return RelationCheck::from(name, real, range_set(1, ell + 2), 0, k_max,
                             real.ops_differ(k * k, rhs, k_max));
}

// Eigenvalue of [K_l^pm]^2 on Psi_j, as a product of four shifted-eigenvalue
// factors.
inline Rational alpha_coeff(const ParameterSet& params, int ell, int sign, const MultiIndex& mi) {
  const Rational s(sign);
  const Rational l0 = tower_eigenvalue(params, mi, ell);
  const Rational l1 = tower_eigenvalue(params, mi, ell + 1);
  const Rational l2 = tower_eigenvalue(params, mi, ell + 2);
  const Rational m1 = params.get_mu(ell + 1);
  const Rational m2 = params.get_mu(ell + 2);
  return (l2 - l1 + s * m2 + s / 2) * (l2 + l1 + s * m2 - s / 2) * (l0 - l1 + s * m1 + s / 2) *
         (l0 + l1 + s * m1 - s / 2);
}

// The four vanishing cases of the ladder coefficients: a zero entry at
// position l or l+1 together with the parity of |j_l|. (With a zero entry at
// position l the partial sums |j_{l-1}| and |j_l| share their parity, so the
// condition is stated uniformly through |j_l|.)
inline bool alpha_vanishes(int ell, int sign, const MultiIndex& mi) {
  const bool even = mi.partial_sum(ell) % 2 == 0;
  if (mi.entries[ell] == 0) {
    if (even && sign < 0) return true;
    if (!even && sign > 0) return true;
  }
  if (mi.entries[ell - 1] == 0) {
    if (even && sign > 0) return true;
    if (!even && sign < 0) return true;
  }
  return false;
}

// Target label of K_l^pm on Psi_j: the entries at positions l, l+1 move by
// (+1,-1) or (-1,+1), with the branch keyed on the parity of |j_l|. For
// l = n-2 the moved "entry" at position n-1 is the degree slack, so the same
// shift realizes the bar-step of the top level. Returns nullopt when the
// shifted label leaves the simplex.
inline std::optional<MultiIndex> ladder_target(const MultiIndex& mi, int ell, int sign) {
  const int delta = mi.partial_sum(ell) % 2 == 1 ? sign : -sign;
  MultiIndex out = mi;
  out.entries[ell - 1] += delta;
  out.entries[ell] -= delta;
  for (int j : out.entries) {
    if (j < 0) return std::nullopt;
  }
  return out;
}

// One application of K_l^pm to a basis function, resolved against the basis:
// either the image vanishes (coeff = 0) or it is a rational multiple of a
// single basis function at the predicted target label. In the blade basis of
// V the ladder twists the spinor component by a fixed blade (e1 for l = 1,
// none for l = 2 at n <= 4), so the resolved blade is recorded alongside the
// label.
struct LadderStep {
  MultiIndex from;
  std::optional<MultiIndex> to;
  Blade to_blade = unit_blade();
  Rational coeff = 0;
  bool single_target = false;
};

inline LadderStep ladder_step(const ParameterSet& params, int ell, int sign,
                              const BasisLabel& label) {
  Realization real(Realization::Kind::clifford, params);
  detail::check_step(real, ell, sign);
  LadderStep step;
  step.from = label.multi_index;
  step.to = ladder_target(label.multi_index, ell, sign);
  SpinorPoly image = ladder_K(real, ell, sign).apply(basis_psi(params, label));
  if (image.is_zero()) {
    step.single_target = true;
    return step;
  }
  if (!step.to) return step;
  for (const Blade& b : all_blades(params.n)) {
    auto ratio = image.ratio_to(basis_psi(params, {*step.to, b}));
    if (ratio) {
      step.coeff = *ratio;
      step.to_blade = b;
      step.single_target = true;
      break;
    }
  }
  return step;
}

// Shape of the ladder action on one label: a nonzero image must be a multiple
// of the single predicted neighbour, and the image vanishes exactly when the
// eigenvalue coefficient of the squared operator does.
inline RelationCheck verify_ladder_action(const ParameterSet& params, int ell, int sign,
                                          const BasisLabel& label) {
  Realization real(Realization::Kind::clifford, params);
  LadderStep step = ladder_step(params, ell, sign, label);
  const Rational alpha = alpha_coeff(params, ell, sign, label.multi_index);
  bool ok = step.single_target;
  if (step.coeff == 0) {
    ok = ok && alpha == 0 && alpha_vanishes(ell, sign, label.multi_index);
  } else {
    ok = ok && alpha != 0 && step.to.has_value();
  }
  RelationCheck check;
  check.name = "ladder_action l=" + std::to_string(ell) + (sign > 0 ? "+" : "-") +
               " j=" + label.multi_index.to_string();
  check.realization = real.name();
  check.set_a = range_set(1, ell + 2);
  check.k_max = label.multi_index.degree();
  check.passed = ok;
  if (!ok) {
    SpinorPoly psi = basis_psi(params, label);
    check.witness = OperatorMismatch{psi, ladder_K(real, ell, sign).apply(psi), SpinorPoly(params.n)};
  }
  return check;
}

// [K_l^pm]^2 Psi_j = alpha Psi_j, exactly.
inline RelationCheck verify_spectral_consistency(const ParameterSet& params, int ell, int sign,
                                                 const BasisLabel& label) {
  Realization real(Realization::Kind::clifford, params);
  detail::check_step(real, ell, sign);
  SpinorPoly psi = basis_psi(params, label);
  Operator k = ladder_K(real, ell, sign);
  SpinorPoly image = k.apply(k.apply(psi));
  SpinorPoly expected = psi.scaled(alpha_coeff(params, ell, sign, label.multi_index));
  RelationCheck check;
  check.name = "ladder_spectral l=" + std::to_string(ell) + (sign > 0 ? "+" : "-") +
               " j=" + label.multi_index.to_string();
  check.realization = real.name();
  check.set_a = range_set(1, ell + 2);
  check.k_max = label.multi_index.degree();
  check.passed = image == expected;
  if (!check.passed) check.witness = OperatorMismatch{psi, image, expected};
  return check;
}

// Directed graph on the degree-k labels with an edge wherever some K_l^pm
// carries one basis function to a nonzero multiple of another.
struct LadderGraph {
  std::vector<MultiIndex> labels;
  std::vector<std::vector<int>> edges;
  std::vector<LadderStep> steps;
};

inline LadderGraph ladder_graph(const ParameterSet& params, int k, Blade s) {
  LadderGraph graph;
  graph.labels = multi_indices(params.n, k);
  const int dim = static_cast<int>(graph.labels.size());
  graph.edges.assign(dim, {});
  auto find = [&](const MultiIndex& mi) {
    for (int i = 0; i < dim; ++i) {
      if (graph.labels[i] == mi) return i;
    }
    throw std::logic_error("target label missing from the simplex");
  };
  for (int a = 0; a < dim; ++a) {
    for (int ell = 1; ell <= params.n - 2; ++ell) {
      for (int sign : {1, -1}) {
        LadderStep step = ladder_step(params, ell, sign, {graph.labels[a], s});
        if (!step.single_target) throw std::logic_error("ladder image not resolved in the basis");
        graph.steps.push_back(step);
        if (step.coeff != 0) graph.edges[a].push_back(find(*step.to));
      }
    }
  }
  return graph;
}

// Strong connectivity of the ladder graph: every label reachable from label 0
// along edges and along reversed edges.
inline RelationCheck verify_irreducibility(const ParameterSet& params, int k, Blade s) {
  LadderGraph graph = ladder_graph(params, k, s);
  const int dim = static_cast<int>(graph.labels.size());
  std::vector<std::vector<int>> reversed(dim);
  for (int a = 0; a < dim; ++a) {
    for (int b : graph.edges[a]) reversed[b].push_back(a);
  }
  auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(dim, 0);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int count = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          frontier.push(w);
        }
      }
    }
    return count == dim;
  };
  RelationCheck check;
  check.name = "ladder_irreducibility k=" + std::to_string(k) + " s=" + s.to_string();
  check.realization = "clifford";
  check.k_max = k;
  check.passed = dim > 0 && reaches_all(graph.edges) && reaches_all(reversed);
  return check;
}

// Diagnostic symmetry attached to the spinor quantum number: P = e1 e2 r1 r2
// commutes with every generator of the joint eigenbasis tower.
inline Operator parity_P() {
  return Operator::clifford_left(Blade{singleton(1) | singleton(2)}) * Operator::reflect(1) *
         Operator::reflect(2);
}

inline RelationCheck verify_parity_diagnostic(const Realization& real, int k_max) {
  Operator p = parity_P();
  for (int m = 1; m <= real.n(); ++m) {
    auto mismatch = real.ops_differ(commutator(p, real.gamma(range_set(1, m))), Operator::zero(),
                                    k_max);
    if (mismatch) {
      return RelationCheck::from("parity_diagnostic m=" + std::to_string(m), real,
                                 range_set(1, m), 0, k_max, std::move(mismatch));
    }
  }
  return RelationCheck::from("parity_diagnostic", real, 0, 0, k_max, std::nullopt);
}

}  // namespace dunkl
