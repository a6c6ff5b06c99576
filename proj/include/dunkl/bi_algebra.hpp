#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realization.hpp"

namespace dunkl {

// Structured outcome of one identity check. A failed check always carries a
// witness basis element with both images.
struct RelationCheck {
  std::string name;
  std::string realization;
  IndexSet set_a = 0;
  IndexSet set_b = 0;
  int k_max = 0;
  bool passed = false;
  std::optional<OperatorMismatch> witness;

  static RelationCheck from(const std::string& name, const Realization& real, IndexSet a,
                            IndexSet b, int k_max, std::optional<OperatorMismatch> mismatch) {
    RelationCheck check;
    check.name = name;
    check.realization = real.name();
    check.set_a = a;
    check.set_b = b;
    check.k_max = k_max;
    check.passed = !mismatch.has_value();
    check.witness = std::move(mismatch);
    return check;
  }
};

// Right-hand side of the structure relation
// {G_A, G_B} = G_{A xor B} + 2 G_{A&B} G_{A|B} + 2 G_{A\B} G_{B\A}.
inline Operator bi_relation_rhs(const Realization& real, IndexSet a, IndexSet b,
                                bool corrupt_sign = false) {
  Operator head = real.gamma(a ^ b);
  if (corrupt_sign) head = Rational(-1) * head;
  return head + 2 * (real.gamma(a & b) * real.gamma(a | b)) +
         2 * (real.gamma(a & ~b) * real.gamma(b & ~a));
}

// Checks the structure relation for one ordered pair (A, B). The disjoint,
// nested and single-overlap special cases are all instances of the same
// formula. corrupt_sign is a negative-control hook that flips the sign of
// the first right-hand term.
inline RelationCheck verify_bi_relation(const Realization& real, IndexSet a, IndexSet b, int k_max,
                                        bool corrupt_sign = false) {
  Operator lhs = anticommutator(real.gamma(a), real.gamma(b));
  Operator rhs = bi_relation_rhs(real, a, b, corrupt_sign);
  return RelationCheck::from("bi_relation", real, a, b, k_max, real.ops_differ(lhs, rhs, k_max));
}

// Rebuilds Gamma_A from generators Gamma_B with |B| <= 2 through the pairwise
// recursion, pivoting on the given elements in order. A chain for
// A = {a_1 < ... < a_m} with pivots a_2, ..., a_{m-1} expands
// Gamma_{[a_1..a_t]} from Gamma_{[a_1..a_{t-1}]} and Gamma_{{a_{t-1}, a_t}}.
inline Operator gamma_via_pairs(const Realization& real, const std::vector<int>& chain) {
  if (chain.size() < 2) throw std::invalid_argument("chain needs at least two elements");
  IndexSet c = singleton(chain[0]) | singleton(chain[1]);
  Operator acc = real.gamma(c);
  for (size_t t = 2; t < chain.size(); ++t) {
    const int pivot = chain[t - 1];
    const Rational& mu_pivot = real.params().get_mu(pivot);
    if (mu_pivot == 0) throw std::invalid_argument("zero pivot parameter");
    IndexSet d = singleton(pivot) | singleton(chain[t]);
    IndexSet united = c | d;
    // Gamma_{C u D} = (1/(2 mu_k)) ({G_C,G_D} - G_{C xor D} - 2 G_{C\k} G_{D\k})
    Operator g_d = real.gamma(d);
    Operator sym_diff = real.gamma(c ^ d);
    Operator tail = real.gamma(c & ~singleton(pivot)) * real.gamma(d & ~singleton(pivot));
    acc = Rational(1) / (2 * mu_pivot) *
          (anticommutator(acc, g_d) - sym_diff - 2 * tail);
    c = united;
  }
  return acc;
}

// All pairwise commutators among Gamma_{pi[2]}, ..., Gamma_{pi[n-1]} vanish.
inline RelationCheck verify_abelian_subalgebra(const Realization& real,
                                               const std::vector<int>& permutation, int k_max) {
  const int n = real.n();
  std::vector<IndexSet> sets;
  for (int m = 2; m <= n - 1; ++m) {
    IndexSet s = 0;
    for (int i = 0; i < m; ++i) s |= singleton(permutation[i]);
    sets.push_back(s);
  }
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i + 1; j < sets.size(); ++j) {
      auto mismatch = real.ops_differ(
          commutator(real.gamma(sets[i]), real.gamma(sets[j])), Operator::zero(), k_max);
      if (mismatch) {
        return RelationCheck::from("abelian_subalgebra", real, sets[i], sets[j], k_max,
                                   std::move(mismatch));
      }
    }
  }
  return RelationCheck::from("abelian_subalgebra", real, 0, 0, k_max, std::nullopt);
}

// Q_A = sum over 2-subsets of A of Gamma_{{i,j}}^2
inline Operator casimir_Q(const Realization& real, IndexSet a) {
  std::vector<Operator> parts;
  const auto elems = set_elements(a);
  for (size_t p = 0; p < elems.size(); ++p) {
    for (size_t q = p + 1; q < elems.size(); ++q) {
      Operator g = real.gamma(singleton(elems[p]) | singleton(elems[q]));
      parts.push_back(g * g);
    }
  }
  return Operator::sum(std::move(parts));
}

// C_A = sum_{2-subsets} Gamma_{{i,j}} Gamma_{A\{i,j}}
//       - (|A|-2) sum_{i in A} mu_i Gamma_{A\{i}}
inline Operator casimir_C(const Realization& real, IndexSet a) {
  std::vector<Operator> parts;
  const auto elems = set_elements(a);
  for (size_t p = 0; p < elems.size(); ++p) {
    for (size_t q = p + 1; q < elems.size(); ++q) {
      IndexSet pair = singleton(elems[p]) | singleton(elems[q]);
      parts.push_back(real.gamma(pair) * real.gamma(a & ~pair));
    }
  }
  Operator head = Operator::sum(std::move(parts));
  std::vector<Operator> tail;
  const Rational factor(set_size(a) - 2);
  for (int i : elems) {
    tail.push_back((factor * real.params().get_mu(i)) * real.gamma(a & ~singleton(i)));
  }
  return head - Operator::sum(std::move(tail));
}

// Q_A = Gamma_A^2 + (|A|-2) sum mu_i^2 - (1/8)(|A|-1)(|A|-2)
inline RelationCheck verify_casimir_Q_value(const Realization& real, IndexSet a, int k_max) {
  const int size = set_size(a);
  Rational constant = -Rational((size - 1) * (size - 2), 8);
  for (int i : set_elements(a)) {
    const Rational& mu = real.params().get_mu(i);
    constant += Rational(size - 2) * mu * mu;
  }
  Operator g = real.gamma(a);
  Operator rhs = g * g + Operator::scalar(constant);
  return RelationCheck::from("casimir_Q_value", real, a, 0, k_max,
                             real.ops_differ(casimir_Q(real, a), rhs, k_max));
}

// C_A = (|A|(|A|-3)/4) Gamma_A
inline RelationCheck verify_casimir_C_value(const Realization& real, IndexSet a, int k_max) {
  const int size = set_size(a);
  Operator rhs = Rational(size * (size - 3), 4) * real.gamma(a);
  return RelationCheck::from("casimir_C_value", real, a, 0, k_max,
                             real.ops_differ(casimir_C(real, a), rhs, k_max));
}

inline RelationCheck verify_casimir_centrality(const Realization& real, const Operator& casimir,
                                               const std::string& name, IndexSet a, int k_max) {
  return RelationCheck::from(name, real, a, 0, k_max,
                             real.ops_differ(commutator(casimir, real.gamma(a)),
                                             Operator::zero(), k_max));
}

// The three cyclic rank-one relations for n = 3:
// {K_1, K_2} = K_3 + omega_3 with omega_3 = 2 mu_3 Gamma_{[3]} + 2 mu_1 mu_2,
// and cyclic. K_3 = Gamma_{{1,2}}, K_1 = Gamma_{{2,3}}, K_2 = Gamma_{{1,3}}.
inline std::vector<RelationCheck> rank_one_structure_constants(const Realization& real,
                                                               int k_max) {
  if (real.n() != 3) throw std::invalid_argument("rank-one reduction needs n = 3");
  const auto& params = real.params();
  const IndexSet k1 = singleton(2) | singleton(3);
  const IndexSet k2 = singleton(1) | singleton(3);
  const IndexSet k3 = singleton(1) | singleton(2);
  Operator g_full = real.gamma(full_set(3));

  auto omega = [&](int i, int j, int k) {
    return (2 * params.get_mu(k)) * g_full +
           Operator::scalar(2 * params.get_mu(i) * params.get_mu(j));
  };

  struct Case {
    const char* name;
    IndexSet a, b, c;
    Operator omega_c;
  };
  std::vector<Case> cases = {
      {"rank_one {K1,K2}=K3+omega3", k1, k2, k3, omega(1, 2, 3)},
      {"rank_one {K2,K3}=K1+omega1", k2, k3, k1, omega(2, 3, 1)},
      {"rank_one {K3,K1}=K2+omega2", k3, k1, k2, omega(3, 1, 2)},
  };
  std::vector<RelationCheck> out;
  for (auto& c : cases) {
    Operator lhs = anticommutator(real.gamma(c.a), real.gamma(c.b));
    Operator rhs = real.gamma(c.c) + c.omega_c;
    out.push_back(
        RelationCheck::from(c.name, real, c.a, c.b, k_max, real.ops_differ(lhs, rhs, k_max)));
  }
  return out;
}

// Gamma_{{l+1,l+2}}^2 + Gamma_{[l+2]\{l+1}}^2 =
//   Gamma_{[l+2]}^2 - Gamma_{[l+1]}^2 + Gamma_{[l]}^2
//   + Gamma_{{l+2}}^2 + Gamma_{{l+1}}^2 - 1/4
inline RelationCheck verify_square_sum_identity(const Realization& real, int ell, int k_max) {
  auto sq = [&](IndexSet s) {
    Operator g = real.gamma(s);
    return g * g;
  };
  IndexSet pair_hi = singleton(ell + 1) | singleton(ell + 2);
  IndexSet skip_mid = range_set(1, ell + 2) & ~singleton(ell + 1);
  Operator lhs = sq(pair_hi) + sq(skip_mid);
  Operator rhs = sq(range_set(1, ell + 2)) - sq(range_set(1, ell + 1)) + sq(range_set(1, ell)) +
                 sq(singleton(ell + 2)) + sq(singleton(ell + 1)) +
                 Operator::scalar(Rational(-1, 4));
  return RelationCheck::from("square_sum_identity", real, pair_hi, skip_mid, k_max,
                             real.ops_differ(lhs, rhs, k_max));
}

}  // namespace dunkl
