#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "blade.hpp"
#include "params.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace dunkl {

// Composable tree of linear operators on spinor polynomials. Nodes are
// immutable; evaluation is pure. Composition is "rightmost acts first".
class Operator {
 public:
  enum class Kind {
    identity,
    partial,       // d/dx_i
    mul_coord,     // multiplication by x_i
    reflect,       // r_i
    clifford,      // left multiplication by a blade
    scalar,        // multiplication by a rational constant
    dunkl_quot,    // p -> ((1 - r_i) p) / x_i, exact by parity
    sum,
    compose,
  };

  static Operator identity() { return make(Kind::identity); }
  static Operator partial(int i) { return make(Kind::partial, i); }
  static Operator mul_coord(int i) { return make(Kind::mul_coord, i); }
  static Operator reflect(int i) { return make(Kind::reflect, i); }
  static Operator clifford_left(Blade b) {
    auto node = new_node(Kind::clifford);
    node->blade = b;
    return adopt(std::move(node));
  }
  static Operator scalar(Rational c) {
    auto node = new_node(Kind::scalar);
    node->coeff = std::move(c);
    return adopt(std::move(node));
  }
  static Operator zero() { return scalar(0); }
  static Operator dunkl_quotient(int i) { return make(Kind::dunkl_quot, i); }

  static Operator sum(std::vector<Operator> parts) {
    if (parts.empty()) return zero();
    if (parts.size() == 1) return parts.front();
    auto node = new_node(Kind::sum);
    for (auto& p : parts) node->children.push_back(p.node_);
    return adopt(std::move(node));
  }

  static Operator compose(std::vector<Operator> parts) {
    if (parts.empty()) return identity();
    if (parts.size() == 1) return parts.front();
    auto node = new_node(Kind::compose);
    for (auto& p : parts) node->children.push_back(p.node_);
    return adopt(std::move(node));
  }

  friend Operator operator+(const Operator& a, const Operator& b) { return sum({a, b}); }
  friend Operator operator-(const Operator& a, const Operator& b) {
    return sum({a, compose({scalar(-1), b})});
  }
  // a * b applies b first
  friend Operator operator*(const Operator& a, const Operator& b) { return compose({a, b}); }
  friend Operator operator*(const Rational& c, const Operator& b) {
    return compose({scalar(c), b});
  }

  SpinorPoly apply(const SpinorPoly& p) const { return eval(*node_, p); }

  // Prefix-notation debug rendering used in failure reports.
  std::string render() const { return render_node(*node_); }

 private:
  struct Node {
    Kind kind;
    int index = 0;
    Blade blade;
    Rational coeff;
    std::vector<std::shared_ptr<const Node>> children;
  };

  static std::shared_ptr<Node> new_node(Kind k, int index = 0) {
    auto node = std::make_shared<Node>();
    node->kind = k;
    node->index = index;
    return node;
  }

  static Operator adopt(std::shared_ptr<Node> node) {
    Operator op;
    op.node_ = std::move(node);
    return op;
  }

  static Operator make(Kind k, int index = 0) { return adopt(new_node(k, index)); }

  static SpinorPoly eval(const Node& node, const SpinorPoly& p) {
    switch (node.kind) {
      case Kind::identity:
        return p;
      case Kind::partial:
        return p.partial(node.index);
      case Kind::mul_coord:
        return p.mul_coordinate(node.index);
      case Kind::reflect:
        return p.reflect(node.index);
      case Kind::clifford:
        return p.clifford_left(node.blade);
      case Kind::scalar:
        return p.scaled(node.coeff);
      case Kind::dunkl_quot: {
        // every term of (1 - r_i)p has odd exponent in x_i, so the division
        // is exact; divide_coordinate throws otherwise
        SpinorPoly diff = p - p.reflect(node.index);
        return diff.divide_coordinate(node.index);
      }
      case Kind::sum: {
        SpinorPoly out(p.dim());
        for (const auto& child : node.children) out += eval(*child, p);
        return out;
      }
      case Kind::compose: {
        SpinorPoly current = p;
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
          current = eval(**it, current);
        }
        return current;
      }
    }
    throw std::logic_error("unreachable");
  }

  static std::string render_node(const Node& node) {
    switch (node.kind) {
      case Kind::identity:
        return "id";
      case Kind::partial:
        return "d" + std::to_string(node.index);
      case Kind::mul_coord:
        return "x" + std::to_string(node.index);
      case Kind::reflect:
        return "r" + std::to_string(node.index);
      case Kind::clifford:
        return node.blade.to_string();
      case Kind::scalar: {
        std::ostringstream out;
        out << node.coeff;
        return out.str();
      }
      case Kind::dunkl_quot:
        return "(quot " + std::to_string(node.index) + ")";
      case Kind::sum:
      case Kind::compose: {
        std::string out = node.kind == Kind::sum ? "(+ " : "(. ";
        bool first = true;
        for (const auto& child : node.children) {
          if (!first) out += ' ';
          out += render_node(*child);
          first = false;
        }
        return out + ")";
      }
    }
    return "?";
  }

  std::shared_ptr<const Node> node_;
};

inline Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

inline Operator anticommutator(const Operator& a, const Operator& b) {
  return a * b + b * a;
}

// T_i = d/dx_i + mu_i * ((1 - r_i) . ) / x_i
inline Operator dunkl_T(const ParameterSet& params, int i) {
  return Operator::partial(i) + params.get_mu(i) * Operator::dunkl_quotient(i);
}

// D_A = sum_{i in A} e_i T_i
inline Operator dirac_D(const ParameterSet& params, IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    parts.push_back(Operator::clifford_left(generator(i)) * dunkl_T(params, i));
  }
  return Operator::sum(std::move(parts));
}

// x_A = sum_{i in A} e_i x_i
inline Operator position_X(IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    parts.push_back(Operator::clifford_left(generator(i)) * Operator::mul_coord(i));
  }
  return Operator::sum(std::move(parts));
}

// E_A = sum_{i in A} x_i d/dx_i
inline Operator euler(IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    parts.push_back(Operator::mul_coord(i) * Operator::partial(i));
  }
  return Operator::sum(std::move(parts));
}

// Delta_A = sum_{i in A} T_i^2
inline Operator laplace(const ParameterSet& params, IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    Operator t = dunkl_T(params, i);
    parts.push_back(t * t);
  }
  return Operator::sum(std::move(parts));
}

// ||x_A||^2 = sum_{i in A} x_i^2
inline Operator norm2(IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) {
    parts.push_back(Operator::mul_coord(i) * Operator::mul_coord(i));
  }
  return Operator::sum(std::move(parts));
}

inline Operator reflection_product(IndexSet a) {
  std::vector<Operator> parts;
  for (int i : set_elements(a)) parts.push_back(Operator::reflect(i));
  return Operator::compose(std::move(parts));
}

// sCasimir S_A = (1/2)([x_A, D_A] - 1)
inline Operator scasimir(const ParameterSet& params, IndexSet a) {
  Operator x = position_X(a);
  Operator d = dirac_D(params, a);
  return Rational(1, 2) * (commutator(x, d) - Operator::identity());
}

// Gamma_A = S_A prod_{i in A} r_i
inline Operator gamma_op(const ParameterSet& params, IndexSet a) {
  return scasimir(params, a) * reflection_product(a);
}

// M_ij = e_i e_j (x_i T_j - x_j T_i)
inline Operator angular_M(const ParameterSet& params, int i, int j) {
  auto [sign, b] = blade_mul(generator(i), generator(j));
  Operator cl = Rational(sign) * Operator::clifford_left(b);
  Operator inner = Operator::mul_coord(i) * dunkl_T(params, j) -
                   Operator::mul_coord(j) * dunkl_T(params, i);
  return cl * inner;
}

// Gamma_A in expanded form:
// (sum_{2-subsets} M_ij + (|A|-1)/2 + sum_k mu_k r_k) prod_{i in A} r_i
inline Operator gamma_explicit(const ParameterSet& params, IndexSet a) {
  std::vector<Operator> parts;
  const auto elems = set_elements(a);
  for (size_t p = 0; p < elems.size(); ++p) {
    for (size_t q = p + 1; q < elems.size(); ++q) {
      parts.push_back(angular_M(params, elems[p], elems[q]));
    }
  }
  parts.push_back(Operator::scalar(Rational(set_size(a) - 1, 2)));
  for (int k : elems) {
    parts.push_back(params.get_mu(k) * Operator::reflect(k));
  }
  return Operator::sum(std::move(parts)) * reflection_product(a);
}

struct OperatorMismatch {
  SpinorPoly input;
  SpinorPoly lhs_image;
  SpinorPoly rhs_image;
};

// Decides equality of two linear operators by evaluation on every graded
// basis element of P_k (x) Cl_n for k <= k_max. By linearity this certifies
// equality on all of P_{<=k_max} (x) Cl_n.
inline std::optional<OperatorMismatch> operators_differ_on_degree(
    const Operator& lhs, const Operator& rhs, int n, int k_max, bool scalar_basis = false) {
  for (int k = 0; k <= k_max; ++k) {
    const auto basis =
        scalar_basis ? scalar_basis_of_graded_component(n, k) : basis_of_graded_component(n, k);
    for (const auto& p : basis) {
      SpinorPoly a = lhs.apply(p);
      SpinorPoly b = rhs.apply(p);
      if (a != b) return OperatorMismatch{p, std::move(a), std::move(b)};
    }
  }
  return std::nullopt;
}

inline bool operators_equal_on_degree(const Operator& lhs, const Operator& rhs, int n, int k_max,
                                      bool scalar_basis = false) {
  return !operators_differ_on_degree(lhs, rhs, n, k_max, scalar_basis).has_value();
}

}  // namespace dunkl
