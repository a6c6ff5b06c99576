#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blade.hpp"
#include "rational.hpp"

namespace dunkl {

// Exponent vector (a_1,...,a_n) for x_1^{a_1}...x_n^{a_n}.
using Monomial = std::vector<int>;

inline int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Element of P(R^n) (x) Cl_n: a sparse map (monomial, blade) -> rational.
// No zero coefficients are stored; terms iterate in lexicographic
// (monomial, blade) order, which makes serialization canonical.
class SpinorPoly {
 public:
  using Term = std::pair<Monomial, Blade>;
  using TermMap = std::map<Term, Rational>;

  SpinorPoly() = default;
  explicit SpinorPoly(int n) : n_(n) {}

  static SpinorPoly zero(int n) { return SpinorPoly(n); }

  static SpinorPoly term(int n, Monomial m, Blade b, Rational c) {
    if (static_cast<int>(m.size()) != n) throw std::invalid_argument("monomial size != n");
    SpinorPoly p(n);
    if (c != 0) p.terms_.emplace(Term{std::move(m), b}, std::move(c));
    return p;
  }

  static SpinorPoly constant(int n, Rational c) {
    return term(n, Monomial(n, 0), unit_blade(), std::move(c));
  }

  // x_i as a polynomial
  static SpinorPoly coordinate(int n, int i) {
    Monomial m(n, 0);
    m[i - 1] = 1;
    return term(n, std::move(m), unit_blade(), 1);
  }

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  friend bool operator==(const SpinorPoly&, const SpinorPoly&) = default;

  void add_term(const Monomial& m, Blade b, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find({m, b});
    if (it == terms_.end()) {
      terms_.emplace(Term{m, b}, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SpinorPoly& operator+=(const SpinorPoly& other) {
    check_dim(other);
    for (const auto& [key, coeff] : other.terms_) add_term(key.first, key.second, coeff);
    return *this;
  }

  friend SpinorPoly operator+(SpinorPoly a, const SpinorPoly& b) { return a += b; }

  SpinorPoly scaled(const Rational& c) const {
    SpinorPoly out(n_);
    if (c == 0) return out;
    for (const auto& [key, coeff] : terms_) out.terms_.emplace(key, coeff * c);
    return out;
  }

  friend SpinorPoly operator-(SpinorPoly a, const SpinorPoly& b) {
    return a += b.scaled(-1);
  }

  // Multiplication by the coordinate x_i.
  SpinorPoly mul_coordinate(int i) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      Monomial m = key.first;
      m[i - 1] += 1;
      out.terms_.emplace(Term{std::move(m), key.second}, coeff);
    }
    return out;
  }

  // Left multiplication by a blade; the sign from canonical reordering is
  // folded into the coefficient.
  SpinorPoly clifford_left(Blade b) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      auto [sign, product] = blade_mul(b, key.second);
      out.add_term(key.first, product, sign > 0 ? coeff : -coeff);
    }
    return out;
  }

  // Right multiplication by a blade (used to attach the basis vector v_s).
  SpinorPoly clifford_right(Blade b) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      auto [sign, product] = blade_mul(key.second, b);
      out.add_term(key.first, product, sign > 0 ? coeff : -coeff);
    }
    return out;
  }

  // Full noncommutative product (polynomial parts commute, blades do not).
  SpinorPoly mul(const SpinorPoly& other) const {
    check_dim(other);
    SpinorPoly out(n_);
    for (const auto& [ka, ca] : terms_) {
      for (const auto& [kb, cb] : other.terms_) {
        Monomial m(n_);
        for (int i = 0; i < n_; ++i) m[i] = ka.first[i] + kb.first[i];
        auto [sign, product] = blade_mul(ka.second, kb.second);
        Rational c = ca * cb;
        out.add_term(m, product, sign > 0 ? c : -c);
      }
    }
    return out;
  }

  SpinorPoly pow(int e) const {
    SpinorPoly out = constant(n_, 1);
    for (int i = 0; i < e; ++i) out = out.mul(*this);
    return out;
  }

  // Partial derivative with respect to x_i.
  SpinorPoly partial(int i) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      const int a = key.first[i - 1];
      if (a == 0) continue;
      Monomial m = key.first;
      m[i - 1] -= 1;
      out.add_term(m, key.second, coeff * a);
    }
    return out;
  }

  // Reflection r_i: x_i -> -x_i.
  SpinorPoly reflect(int i) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      out.terms_.emplace(key, key.first[i - 1] % 2 == 0 ? coeff : -coeff);
    }
    return out;
  }

  // Exact division by x_i; throws if any term has a_i = 0.
  SpinorPoly divide_coordinate(int i) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      if (key.first[i - 1] == 0) {
        throw std::logic_error("inexact division by x_" + std::to_string(i));
      }
      Monomial m = key.first;
      m[i - 1] -= 1;
      out.terms_.emplace(Term{std::move(m), key.second}, coeff);
    }
    return out;
  }

  // Sets x_i = 0, i.e. keeps only terms with a_i = 0.
  SpinorPoly restrict_coordinate(int i) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      if (key.first[i - 1] == 0) out.terms_.emplace(key, coeff);
    }
    return out;
  }

  bool depends_on(int i) const {
    for (const auto& [key, coeff] : terms_) {
      if (key.first[i - 1] != 0) return true;
    }
    return false;
  }

  // Total polynomial degree, or -1 for the zero polynomial.
  int poly_degree() const {
    int d = -1;
    for (const auto& [key, coeff] : terms_) d = std::max(d, degree(key.first));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [key, coeff] : terms_) {
      const int dk = degree(key.first);
      if (d == -1) d = dk;
      if (dk != d) return false;
    }
    return true;
  }

  // Simultaneous relabeling x_i -> x_{pi(i)}, e_i -> e_{pi(i)}; blades are
  // re-canonicalized with the appropriate sign. pi is 1-based: pi[i-1] = pi(i).
  SpinorPoly permuted(const std::vector<int>& pi) const {
    SpinorPoly out(n_);
    for (const auto& [key, coeff] : terms_) {
      Monomial m(n_, 0);
      for (int i = 1; i <= n_; ++i) m[pi[i - 1] - 1] = key.first[i - 1];
      // image generators in original blade order, then sort counting inversions
      std::vector<int> idx;
      for (int i : set_elements(key.second.bits)) idx.push_back(pi[i - 1]);
      int inversions = 0;
      for (size_t a = 0; a < idx.size(); ++a) {
        for (size_t b = a + 1; b < idx.size(); ++b) {
          if (idx[a] > idx[b]) ++inversions;
        }
      }
      IndexSet bits = 0;
      for (int i : idx) bits |= singleton(i);
      out.add_term(m, Blade{bits}, inversions % 2 == 0 ? coeff : -coeff);
    }
    return out;
  }

  // If *this == c * other for a single rational c (other nonzero), returns c.
  std::optional<Rational> ratio_to(const SpinorPoly& other) const {
    if (other.is_zero()) return std::nullopt;
    if (is_zero()) return Rational(0);
    if (terms_.size() != other.terms_.size()) return std::nullopt;
    auto it = terms_.begin();
    auto jt = other.terms_.begin();
    Rational c = it->second / jt->second;
    for (; it != terms_.end(); ++it, ++jt) {
      if (it->first != jt->first || it->second != c * jt->second) return std::nullopt;
    }
    return c;
  }

  // Canonical text form: one term per line, `a1,...,an | i1 i2 ... | num/den`,
  // lexicographically sorted. The blade field is empty for the unit blade.
  std::string serialize() const {
    std::ostringstream out;
    for (const auto& [key, coeff] : terms_) {
      for (int i = 0; i < n_; ++i) {
        if (i) out << ',';
        out << key.first[i];
      }
      out << " | ";
      bool first = true;
      for (int i : set_elements(key.second.bits)) {
        if (!first) out << ' ';
        out << i;
        first = false;
      }
      out << " | " << format_rational(coeff) << '\n';
    }
    return out.str();
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
      if (!first) out << " + ";
      out << "(" << coeff << ")";
      for (int i = 0; i < n_; ++i) {
        if (key.first[i] > 0) {
          out << "*x" << (i + 1);
          if (key.first[i] > 1) out << "^" << key.first[i];
        }
      }
      if (key.second.bits != 0) out << "*" << key.second.to_string();
      first = false;
    }
    return out.str();
  }

 private:
  void check_dim(const SpinorPoly& other) const {
    if (n_ != other.n_) throw std::invalid_argument("dimension mismatch");
  }

  int n_ = 0;
  TermMap terms_;
};

inline std::vector<Monomial> monomials_of_degree(int n, int k) {
  std::vector<Monomial> out;
  Monomial current(n, 0);
  // lexicographic enumeration by recursion on the first coordinate
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      current[pos] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

inline std::vector<Blade> all_blades(int n) {
  std::vector<Blade> out;
  for (IndexSet bits = 0; bits < (IndexSet{1} << n); ++bits) out.push_back(Blade{bits});
  return out;
}

// All monomial (x) blade pairs of polynomial degree k; a basis of P_k (x) Cl_n
// with C(n+k-1,k) * 2^n elements.
inline std::vector<SpinorPoly> basis_of_graded_component(int n, int k) {
  std::vector<SpinorPoly> out;
  for (const auto& m : monomials_of_degree(n, k)) {
    for (const auto& b : all_blades(n)) {
      out.push_back(SpinorPoly::term(n, m, b, 1));
    }
  }
  return out;
}

// Scalar variant: unit blade only (used by the scalar realization).
inline std::vector<SpinorPoly> scalar_basis_of_graded_component(int n, int k) {
  std::vector<SpinorPoly> out;
  for (const auto& m : monomials_of_degree(n, k)) {
    out.push_back(SpinorPoly::term(n, m, unit_blade(), 1));
  }
  return out;
}

}  // namespace dunkl
