#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bi_algebra.hpp"
#include "matrix.hpp"

namespace dunkl {

// Label (j_1,...,j_{n-1}) of a monogenic basis function at fixed degree k;
// the entries sum to k and j_1,...,j_{n-2} determine j_{n-1}.
struct MultiIndex {
  std::vector<int> entries;

  int degree() const { return std::accumulate(entries.begin(), entries.end(), 0); }

  // |j_ell| = j_1 + ... + j_ell
  int partial_sum(int ell) const {
    int s = 0;
    for (int i = 0; i < ell && i < static_cast<int>(entries.size()); ++i) s += entries[i];
    return s;
  }

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries[i]);
    }
    return out + ")";
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

struct BasisLabel {
  MultiIndex multi_index;
  Blade s;
};

// All multi-indices of degree k for n variables, lexicographic in
// (j_1,...,j_{n-2}); the last entry is the slack k - sum.
inline std::vector<MultiIndex> multi_indices(int n, int k) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  std::vector<MultiIndex> out;
  std::vector<int> head(n - 2, 0);
  auto rec = [&](auto&& self, int pos, int used) -> void {
    if (pos == n - 2) {
      MultiIndex mi;
      mi.entries = head;
      mi.entries.push_back(k - used);
      out.push_back(std::move(mi));
      return;
    }
    for (int j = 0; j + used <= k; ++j) {
      head[pos] = j;
      self(self, pos + 1, used + j);
    }
  };
  rec(rec, 0, 0);
  return out;
}

inline Operator operator_pow(const Operator& op, int e) {
  std::vector<Operator> parts(e, op);
  return Operator::compose(std::move(parts));
}

// CK extension in the variable x_j: sends a homogeneous polynomial in
// x_1..x_{j-1} to a monogenic one in x_1..x_j via the truncating series
//   sum_l x_j^{2l} D^{2l} p / (2^{2l} l! (mu_j+1/2)_l)
// + sum_l x_j^{2l+1} e_j D^{2l+1} p / (2^{2l+1} l! (mu_j+1/2)_{l+1}).
inline SpinorPoly ck_extend(const ParameterSet& params, const SpinorPoly& p, int j) {
  for (int i = j; i <= params.n; ++i) {
    if (p.depends_on(i)) {
      throw std::invalid_argument("input depends on x_" + std::to_string(i));
    }
  }
  if (!p.is_homogeneous()) throw std::invalid_argument("input not homogeneous");

  const Rational half_shift = params.get_mu(j) + Rational(1, 2);
  Operator d = dirac_D(params, range_set(1, j - 1));
  SpinorPoly out(p.dim());
  SpinorPoly power = p;  // D^m p
  for (int m = 0; !power.is_zero(); ++m) {
    const int l = m / 2;
    Rational coeff;
    if (m % 2 == 0) {
      coeff = Rational(1) / (rational_pow(Rational(2), 2 * l) * factorial(l) * pochhammer(half_shift, l));
    } else {
      coeff =
          Rational(1) / (rational_pow(Rational(2), 2 * l + 1) * factorial(l) * pochhammer(half_shift, l + 1));
    }
    SpinorPoly term = power.scaled(coeff);
    if (m % 2 == 1) term = term.clifford_left(generator(j));
    for (int t = 0; t < m; ++t) term = term.mul_coordinate(j);
    out += term;
    power = d.apply(power);
  }
  return out;
}

// Tower part of the basis function, before the basis vector v_s is attached:
// CK_{x_n}[x_{[n-1]}^{j_{n-1}} CK_{x_{n-1}}[... CK_{x_2}[x_1^{j_1}]]].
inline SpinorPoly psi_tower(const ParameterSet& params, const MultiIndex& mi) {
  const int n = params.n;
  if (static_cast<int>(mi.entries.size()) != n - 1) {
    throw std::invalid_argument("multi-index length != n-1");
  }
  for (int j : mi.entries) {
    if (j < 0) throw std::invalid_argument("negative multi-index entry");
  }
  Monomial m(n, 0);
  m[0] = mi.entries[0];
  SpinorPoly acc = SpinorPoly::term(n, m, unit_blade(), 1);
  for (int ell = 2; ell <= n; ++ell) {
    acc = ck_extend(params, acc, ell);
    if (ell < n) {
      Operator x = position_X(range_set(1, ell));
      for (int t = 0; t < mi.entries[ell - 1]; ++t) acc = x.apply(acc);
    }
  }
  return acc;
}

inline SpinorPoly basis_psi(const ParameterSet& params, const BasisLabel& label) {
  return psi_tower(params, label.multi_index).clifford_right(label.s);
}

// Bivariate polynomial in the abstract pair (u, v), exponents -> coefficient.
using Bivariate = std::map<std::pair<int, int>, Rational>;

// v^m P_m^{(alpha,beta)}(u/v) through the hypergeometric series
// P_m = ((alpha+1)_m/m!) sum_r (-m)_r(m+alpha+beta+1)_r/((alpha+1)_r r!) ((1-x)/2)^r
// with (1-x)/2 -> (v-u)/(2v). Returns the zero polynomial for m = -1.
inline Bivariate jacobi_homogenized(int m, const Rational& alpha, const Rational& beta) {
  Bivariate out;
  if (m == -1) return out;
  if (m < 0) throw std::invalid_argument("negative Jacobi degree");
  const Rational lead = pochhammer(alpha + 1, m) / factorial(m);
  for (int r = 0; r <= m; ++r) {
    const Rational denom = pochhammer(alpha + 1, r);
    if (denom == 0) {
      throw std::invalid_argument("vanishing Pochhammer denominator in Jacobi series");
    }
    Rational c = lead * pochhammer(Rational(-m), r) * pochhammer(m + alpha + beta + 1, r) /
                 (denom * factorial(r) * rational_pow(Rational(2), r));
    // ((v-u)/2)^r v^{m-r} expanded binomially
    for (int t = 0; t <= r; ++t) {
      Rational term = c * binomial(r, t);
      if (t % 2 == 1) term = -term;
      // u^t v^{m-t}
      auto key = std::make_pair(t, m - t);
      out[key] += term;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

// Substitutes concrete polynomials for (u, v); u and v must commute (they are
// scalar-blade polynomials in all uses here).
inline SpinorPoly bivariate_substitute(const Bivariate& biv, const SpinorPoly& u,
                                       const SpinorPoly& v) {
  SpinorPoly out(u.dim());
  for (const auto& [key, coeff] : biv) {
    out += u.pow(key.first).mul(v.pow(key.second)).scaled(coeff);
  }
  return out;
}

namespace detail {

// ||x_{[j]}||^2 as a polynomial
inline SpinorPoly norm2_poly(int n, int j) {
  SpinorPoly out(n);
  for (int i = 1; i <= j; ++i) {
    Monomial m(n, 0);
    m[i - 1] = 2;
    out.add_term(m, unit_blade(), 1);
  }
  return out;
}

// x_{[j]} = sum_{i<=j} e_i x_i as a polynomial
inline SpinorPoly vector_poly(int n, int j) {
  SpinorPoly out(n);
  for (int i = 1; i <= j; ++i) {
    Monomial m(n, 0);
    m[i - 1] = 1;
    out.add_term(m, generator(i), 1);
  }
  return out;
}

// e_l x_l as a polynomial
inline SpinorPoly axis_poly(int n, int l) {
  Monomial m(n, 0);
  m[l - 1] = 1;
  return SpinorPoly::term(n, m, generator(l), 1);
}

}  // namespace detail

// The two-variable seed factor m_{j_1}(x_2, x_1).
inline SpinorPoly seed_factor(const ParameterSet& params, int j1) {
  const int n = params.n;
  const Rational mu1 = params.get_mu(1);
  const Rational mu2 = params.get_mu(2);
  const int beta = j1 / 2;
  SpinorPoly x1sq(n), x2sq(n);
  {
    Monomial m1(n, 0), m2(n, 0);
    m1[0] = 2;
    m2[1] = 2;
    x1sq.add_term(m1, unit_blade(), 1);
    x2sq.add_term(m2, unit_blade(), 1);
  }
  SpinorPoly u = x2sq - x1sq;
  SpinorPoly v = detail::norm2_poly(n, 2);
  Rational pref = factorial(beta) / pochhammer(mu2 + Rational(1, 2), beta);
  if (beta % 2 == 1) pref = -pref;

  // e_2 e_1 x_2
  SpinorPoly cross = SpinorPoly::term(n, Monomial(n, 0), generator(2), 1)
                         .mul(SpinorPoly::term(n, Monomial(n, 0), generator(1), 1))
                         .mul(SpinorPoly::coordinate(n, 2));

  SpinorPoly out(n);
  if (j1 % 2 == 0) {
    out += bivariate_substitute(
        jacobi_homogenized(beta, mu1 - Rational(1, 2), mu2 - Rational(1, 2)), u, v);
    out += cross.mul(SpinorPoly::coordinate(n, 1))
               .mul(bivariate_substitute(
                   jacobi_homogenized(beta - 1, mu1 + Rational(1, 2), mu2 + Rational(1, 2)), u, v))
               .scaled(-1);
  } else {
    out += SpinorPoly::coordinate(n, 1).mul(bivariate_substitute(
        jacobi_homogenized(beta, mu1 + Rational(1, 2), mu2 - Rational(1, 2)), u, v));
    Rational ratio = (beta + mu1 + Rational(1, 2)) / (beta + mu2 + Rational(1, 2));
    out += cross
               .mul(bivariate_substitute(
                   jacobi_homogenized(beta, mu1 - Rational(1, 2), mu2 + Rational(1, 2)), u, v))
               .scaled(ratio);
  }
  return out.scaled(pref);
}

// The Jacobi factor Q_{j_{l-1}}(x_l, x_{[l-1]}) at level l (3 <= l <= n),
// with j_prev = j_{l-1} and psum = |j_{l-2}|.
inline SpinorPoly level_factor(const ParameterSet& params, int l, int j_prev, int psum) {
  const int n = params.n;
  const Rational mul = params.get_mu(l);
  const Rational a = psum + params.gamma(range_set(1, l - 1));  // |j_{l-2}| + gamma_{[l-1]}
  const int beta = j_prev / 2;

  SpinorPoly xlsq(n);
  {
    Monomial m(n, 0);
    m[l - 1] = 2;
    xlsq.add_term(m, unit_blade(), 1);
  }
  SpinorPoly u = xlsq - detail::norm2_poly(n, l - 1);
  SpinorPoly v = detail::norm2_poly(n, l);
  const Rational pref = factorial(beta) / pochhammer(mul + Rational(1, 2), beta);

  SpinorPoly out(n);
  if (j_prev % 2 == 0) {
    out += bivariate_substitute(jacobi_homogenized(beta, a - 1, mul - Rational(1, 2)), u, v);
    SpinorPoly cross = detail::axis_poly(n, l).mul(detail::vector_poly(n, l - 1));
    out += cross
               .mul(bivariate_substitute(jacobi_homogenized(beta - 1, a, mul + Rational(1, 2)), u,
                                         v))
               .scaled(-1);
  } else {
    out += detail::vector_poly(n, l - 1).mul(
        bivariate_substitute(jacobi_homogenized(beta, a, mul - Rational(1, 2)), u, v));
    Rational ratio = (beta + a) / (beta + mul + Rational(1, 2));
    out += detail::axis_poly(n, l)
               .mul(bivariate_substitute(jacobi_homogenized(beta, a - 1, mul + Rational(1, 2)), u,
                                         v))
               .scaled(-ratio);
  }
  return out.scaled(pref);
}

// Closed-form counterpart of basis_psi: ordered product of the level factors
// (leftmost l = n) times the seed factor, times v_s on the right.
inline SpinorPoly explicit_psi(const ParameterSet& params, const BasisLabel& label) {
  const int n = params.n;
  const auto& mi = label.multi_index;
  if (static_cast<int>(mi.entries.size()) != n - 1) {
    throw std::invalid_argument("multi-index length != n-1");
  }
  SpinorPoly acc = SpinorPoly::constant(n, 1);
  for (int l = n; l >= 3; --l) {
    acc = acc.mul(level_factor(params, l, mi.entries[l - 2], mi.partial_sum(l - 2)));
  }
  acc = acc.mul(seed_factor(params, mi.entries[0]));
  return acc.clifford_right(label.s);
}

// Eigenvalue of Gamma_{[l]} on Psi_j: (-1)^{|j_{l-1}|}(|j_{l-1}| + gamma_{[l]} - 1/2)
inline Rational tower_eigenvalue(const ParameterSet& params, const MultiIndex& mi, int ell) {
  const int psum = mi.partial_sum(ell - 1);
  Rational lambda = psum + params.gamma(range_set(1, ell)) - Rational(1, 2);
  return psum % 2 == 0 ? lambda : -lambda;
}

inline RelationCheck verify_eigenvalues(const ParameterSet& params, const BasisLabel& label,
                                        int ell) {
  const int n = params.n;
  if (ell < 2 || ell > n) throw std::invalid_argument("need 2 <= ell <= n");
  Realization real(Realization::Kind::clifford, params);
  SpinorPoly psi = basis_psi(params, label);
  SpinorPoly image = gamma_op(params, range_set(1, ell)).apply(psi);
  SpinorPoly expected = psi.scaled(tower_eigenvalue(params, label.multi_index, ell));
  RelationCheck check;
  check.name = "tower_eigenvalue l=" + std::to_string(ell) + " j=" + label.multi_index.to_string();
  check.realization = real.name();
  check.set_a = range_set(1, ell);
  check.k_max = label.multi_index.degree();
  check.passed = image == expected;
  if (!check.passed) check.witness = OperatorMismatch{psi, image, expected};
  return check;
}

// The four power-action identities D^a x^b M = c(a,b) x^{b-a} M for a
// monogenic M of degree l, with exact Pochhammer coefficients.
inline std::vector<RelationCheck> verify_power_actions(const ParameterSet& params,
                                                       const SpinorPoly& monogenic, int j, int k) {
  if (j > k) throw std::invalid_argument("need j <= k");
  const int n = params.n;
  const int l = std::max(monogenic.poly_degree(), 0);
  const Rational g = params.gamma(full_set(n));
  Operator d = dirac_D(params, full_set(n));
  Operator x = position_X(full_set(n));

  auto apply_pow = [&](const Operator& op, int e, SpinorPoly p) {
    for (int t = 0; t < e; ++t) p = op.apply(p);
    return p;
  };
  auto make_check = [&](const char* name, const SpinorPoly& lhs, const SpinorPoly& rhs) {
    RelationCheck check;
    check.name = name;
    check.realization = "clifford";
    check.k_max = l + 2 * k + 1;
    check.passed = lhs == rhs;
    if (!check.passed) check.witness = OperatorMismatch{monogenic, lhs, rhs};
    return check;
  };

  std::vector<RelationCheck> out;
  const Rational pow4j = rational_pow(Rational(2), 2 * j);

  SpinorPoly x2k = apply_pow(x, 2 * k, monogenic);
  {
    Rational c = pow4j * factorial(k) / factorial(k - j) * pochhammer(k - j + l + g, j);
    out.push_back(make_check("power_action even/even", apply_pow(d, 2 * j, x2k),
                             apply_pow(x, 2 * k - 2 * j, monogenic).scaled(c)));
  }
  {
    SpinorPoly lhs = apply_pow(d, 2 * j + 1, x2k);
    SpinorPoly rhs(n);
    if (j < k) {
      Rational c = -2 * pow4j * factorial(k) / factorial(k - j - 1) * pochhammer(k - j + l + g, j);
      rhs = apply_pow(x, 2 * k - 2 * j - 1, monogenic).scaled(c);
    }
    out.push_back(make_check("power_action odd/even", lhs, rhs));
  }
  SpinorPoly x2k1 = x.apply(x2k);
  {
    Rational c = pow4j * factorial(k) / factorial(k - j) * pochhammer(k - j + l + g + 1, j);
    out.push_back(make_check("power_action even/odd", apply_pow(d, 2 * j, x2k1),
                             apply_pow(x, 2 * k - 2 * j + 1, monogenic).scaled(c)));
  }
  {
    Rational c = -2 * pow4j * factorial(k) / factorial(k - j) * pochhammer(k - j + l + g, j + 1);
    out.push_back(make_check("power_action odd/odd", apply_pow(d, 2 * j + 1, x2k1),
                             apply_pow(x, 2 * k - 2 * j, monogenic).scaled(c)));
  }
  return out;
}

// Rank of the span of the basis functions at fixed (k, s); the expected value
// is C(n+k-2, k).
inline int monogenic_span_rank(const ParameterSet& params, int k, Blade s) {
  std::vector<SpinorPoly> funcs;
  for (const auto& mi : multi_indices(params.n, k)) {
    funcs.push_back(basis_psi(params, {mi, s}));
  }
  return coefficient_matrix(funcs).rank();
}

// Direct-sum decomposition P_k (x) Cl_n = sum_j x^j M_{k-j}: assembles the
// union over j and all s and returns its rank; full rank is C(n+k-1,k)*2^n.
inline int fischer_decompose_rank(const ParameterSet& params, int k) {
  const int n = params.n;
  Operator x = position_X(full_set(n));
  std::vector<SpinorPoly> funcs;
  for (int j = 0; j <= k; ++j) {
    for (const auto& mi : multi_indices(n, k - j)) {
      for (const auto& s : all_blades(n)) {
        SpinorPoly f = basis_psi(params, {mi, s});
        for (int t = 0; t < j; ++t) f = x.apply(f);
        funcs.push_back(std::move(f));
      }
    }
  }
  return coefficient_matrix(funcs).rank();
}

// Normalized moment of x^m over the sphere with weight prod |x_i|^{2 mu_i}:
// zero on odd exponents, prod (mu_i+1/2)_{c_i} / (gamma_{[n]})_{|c|} for m=2c.
inline Rational moment(const ParameterSet& params, const Monomial& m) {
  int total_half = 0;
  Rational num = 1;
  for (int i = 0; i < params.n; ++i) {
    if (m[i] % 2 == 1) return 0;
    const int c = m[i] / 2;
    num *= pochhammer(params.get_mu(i + 1) + Rational(1, 2), c);
    total_half += c;
  }
  return num / pochhammer(params.gamma(full_set(params.n)), total_half);
}

// Pairing: blades orthonormal, polynomial parts paired through the sphere
// moments. Defined for homogeneous arguments of equal degree.
inline Rational inner_product(const ParameterSet& params, const SpinorPoly& p,
                              const SpinorPoly& q) {
  if (!p.is_homogeneous() || !q.is_homogeneous()) {
    throw std::invalid_argument("inner product needs homogeneous arguments");
  }
  if (!p.is_zero() && !q.is_zero() && p.poly_degree() != q.poly_degree()) {
    throw std::invalid_argument("degree mismatch");
  }
  Rational out = 0;
  for (const auto& [kp, cp] : p.terms()) {
    for (const auto& [kq, cq] : q.terms()) {
      if (kp.second.bits != kq.second.bits) continue;
      Monomial m(params.n);
      for (int i = 0; i < params.n; ++i) m[i] = kp.first[i] + kq.first[i];
      out += cp * cq * moment(params, m);
    }
  }
  return out;
}

// The cycle pi = (1 2 ... n): pi(i) = i+1, pi(n) = 1.
inline std::vector<int> cycle_permutation(int n) {
  std::vector<int> pi(n);
  for (int i = 1; i <= n; ++i) pi[i - 1] = i % n + 1;
  return pi;
}

inline ParameterSet permuted_parameters(const ParameterSet& params, const std::vector<int>& pi) {
  std::vector<Rational> mu(params.n);
  for (int i = 1; i <= params.n; ++i) mu[i - 1] = params.get_mu(pi[i - 1]);
  return ParameterSet(params.n, mu);
}

// Second eigenbasis: Phi_j = pi(tower built with nu_i = mu_{pi(i)}) v_s. The
// relabeling is applied to the tower only, so both bases share the same right
// factor v_s and span the same space.
inline SpinorPoly basis_phi(const ParameterSet& params, const BasisLabel& label) {
  const auto pi = cycle_permutation(params.n);
  ParameterSet nu = permuted_parameters(params, pi);
  return psi_tower(nu, label.multi_index).permuted(pi).clifford_right(label.s);
}

// Eigenvalue of Gamma_{pi[l]} on Phi_j.
inline Rational phi_eigenvalue(const ParameterSet& params, const MultiIndex& mi, int ell) {
  const auto pi = cycle_permutation(params.n);
  return tower_eigenvalue(permuted_parameters(params, pi), mi, ell);
}

// Raw overlaps O_{a,b} = <Phi_a, Psi_b> plus the diagonal Gram entries of
// both bases; labels are in lexicographic multi-index order.
struct ConnectionData {
  std::vector<MultiIndex> labels;
  RationalMatrix overlaps;
  std::vector<Rational> gram_psi;
  std::vector<Rational> gram_phi;
};

inline ConnectionData connection_matrix(const ParameterSet& params, int k, Blade s) {
  ConnectionData data;
  data.labels = multi_indices(params.n, k);
  const int dim = static_cast<int>(data.labels.size());
  std::vector<SpinorPoly> psi, phi;
  for (const auto& mi : data.labels) {
    psi.push_back(basis_psi(params, {mi, s}));
    phi.push_back(basis_phi(params, {mi, s}));
  }
  data.overlaps = RationalMatrix(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      data.overlaps.at(a, b) = inner_product(params, phi[a], psi[b]);
    }
    data.gram_phi.push_back(inner_product(params, phi[a], phi[a]));
  }
  for (int b = 0; b < dim; ++b) data.gram_psi.push_back(inner_product(params, psi[b], psi[b]));
  return data;
}

// Both full families (all multi-indices, all blades) in a fixed flat order:
// multi-index outer, blade inner.
inline std::vector<SpinorPoly> full_basis_family(const ParameterSet& params, int k,
                                                 bool second_basis) {
  std::vector<SpinorPoly> out;
  for (const auto& mi : multi_indices(params.n, k)) {
    for (const auto& s : all_blades(params.n)) {
      BasisLabel label{mi, s};
      out.push_back(second_basis ? basis_phi(params, label) : basis_psi(params, label));
    }
  }
  return out;
}

// Gram-weighted unitarity on the full space: with C the exact change of basis
// (Phi_a = sum_b C_{b,a} Psi_b), the Gram matrices satisfy Ct G C = G' and the
// raw overlaps satisfy O = Ct G. The two basis families at a single fixed s
// span different subspaces, so the identity only closes over all s.
inline bool verify_connection_unitarity(const ParameterSet& params, int k) {
  std::vector<SpinorPoly> psi = full_basis_family(params, k, false);
  std::vector<SpinorPoly> phi = full_basis_family(params, k, true);
  const int dim = static_cast<int>(psi.size());
  PolyExpander expander(psi);

  std::vector<std::vector<Rational>> coeff;  // coeff[a][b] = C_{b,a}
  for (const auto& f : phi) {
    auto c = expander.expand(f);
    if (!c) return false;
    coeff.push_back(std::move(*c));
  }

  RationalMatrix gram(dim, dim);
  for (int b = 0; b < dim; ++b) {
    for (int c = b; c < dim; ++c) {
      gram.at(b, c) = inner_product(params, psi[b], psi[c]);
      gram.at(c, b) = gram.at(b, c);
    }
  }
  // O = Ct G entry by entry
  std::vector<std::vector<Rational>> gc(dim, std::vector<Rational>(dim, Rational(0)));
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      Rational acc = 0;
      for (int t = 0; t < dim; ++t) {
        if (coeff[a][t] != 0) acc += coeff[a][t] * gram.at(t, b);
      }
      gc[a][b] = acc;
      if (acc != inner_product(params, phi[a], psi[b])) return false;
    }
  }
  // Ct G C = G'
  for (int a = 0; a < dim; ++a) {
    for (int c = 0; c < dim; ++c) {
      Rational acc = 0;
      for (int b = 0; b < dim; ++b) {
        if (coeff[c][b] != 0) acc += gc[a][b] * coeff[c][b];
      }
      if (acc != inner_product(params, phi[a], phi[c])) return false;
    }
  }
  return true;
}

inline SpinorPoly permute_basis(const SpinorPoly& p, const std::vector<int>& pi) {
  return p.permuted(pi);
}

// Independent oracle for the n = 3 connection coefficients. Expanding a fixed
// Phi_a over the full Psi family shows that each eigenvalue block b carries
// exactly one blade component, so the expansion collapses to a scalar column
// beta_{a,b} along a chain of basis functions chi_b = Psi_b^{t_b}. The
// generator Gamma_{{2,3}} acts tridiagonally on that chain; the oracle rebuilds
// each column from the resulting three-term recurrence, seeded at 1 and driven
// by the exact Phi eigenvalue, and compares up to per-column normalization.
inline bool verify_rank_one_recurrence(const ParameterSet& params, int k, Blade s) {
  if (params.n != 3) throw std::invalid_argument("rank-one oracle needs n = 3");
  const auto labels = multi_indices(3, k);
  const int dim = static_cast<int>(labels.size());
  const auto blades = all_blades(3);
  const int width = static_cast<int>(blades.size());

  std::vector<SpinorPoly> psi = full_basis_family(params, k, false);
  PolyExpander expander(psi);
  Operator g23 = gamma_op(params, singleton(2) | singleton(3));

  // expansion of each Phi^s_a over the full family, in blocks of 8
  std::vector<std::vector<Rational>> coeff;
  std::vector<Rational> lambda;
  for (const auto& mi : labels) {
    SpinorPoly phi = basis_phi(params, {mi, s});
    auto c = expander.expand(phi);
    if (!c) return false;
    coeff.push_back(std::move(*c));
    auto ratio = g23.apply(phi).ratio_to(phi);
    if (!ratio) return false;
    lambda.push_back(*ratio);
  }

  // group the Phi labels by the parity that selects the chain blades
  for (int parity = 0; parity <= 1; ++parity) {
    std::vector<int> group;
    for (int a = 0; a < dim; ++a) {
      if (labels[a].entries[0] % 2 == parity) group.push_back(a);
    }
    if (group.empty()) continue;

    // chain blade of each block: the unique position carrying a coefficient
    std::vector<int> chain(dim, -1);
    for (int a : group) {
      for (int b = 0; b < dim; ++b) {
        for (int t = 0; t < width; ++t) {
          if (coeff[a][b * width + t] == 0) continue;
          if (chain[b] == -1) chain[b] = t;
          if (chain[b] != t) return false;  // block carries two blades
        }
      }
    }
    for (int b = 0; b < dim; ++b) {
      if (chain[b] == -1) return false;  // cannot identify the chain
    }

    // tridiagonal matrix of Gamma_{{2,3}} on the chain
    RationalMatrix J(dim, dim);
    for (int b = 0; b < dim; ++b) {
      auto image = expander.expand(g23.apply(psi[b * width + chain[b]]));
      if (!image) return false;
      for (int bp = 0; bp < dim; ++bp) {
        for (int t = 0; t < width; ++t) {
          const Rational& c = (*image)[bp * width + t];
          if (c == 0) continue;
          if (t != chain[bp]) return false;  // image left the chain
          if (bp < b - 1 || bp > b + 1) return false;  // not tridiagonal
          J.at(bp, b) = c;
        }
      }
    }

    // distinct eigenvalues within the group
    for (size_t i = 0; i < group.size(); ++i) {
      for (size_t j = i + 1; j < group.size(); ++j) {
        if (lambda[group[i]] == lambda[group[j]]) return false;
      }
    }

    for (int a : group) {
      std::vector<Rational> u(dim);
      u[0] = 1;
      for (int b = 0; b + 1 < dim; ++b) {
        if (J.at(b, b + 1) == 0) return false;
        Rational acc = (lambda[a] - J.at(b, b)) * u[b];
        if (b > 0) acc -= J.at(b, b - 1) * u[b - 1];
        u[b + 1] = acc / J.at(b, b + 1);
      }
      Rational last = J.at(dim - 1, dim - 1) * u[dim - 1];
      if (dim > 1) last += J.at(dim - 1, dim - 2) * u[dim - 2];
      if (last != lambda[a] * u[dim - 1]) return false;

      // per-column normalization against the recurrence values
      Rational scale = coeff[a][0 * width + chain[0]];
      if (scale == 0) return false;
      for (int b = 0; b < dim; ++b) {
        for (int t = 0; t < width; ++t) {
          Rational expected = t == chain[b] ? scale * u[b] : Rational(0);
          if (coeff[a][b * width + t] != expected) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace dunkl
