#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "blade.hpp"
#include "rational.hpp"

namespace dunkl {

// The dimension n together with the Dunkl parameters mu_1,...,mu_n.
// All mu_i must be positive.
struct ParameterSet {
  int n = 0;
  std::vector<Rational> mu;

  ParameterSet() = default;
  ParameterSet(int dim, std::vector<Rational> values) : n(dim), mu(std::move(values)) {
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("parameter count != n");
    for (const auto& m : mu) {
      if (m <= 0) throw std::invalid_argument("mu_i must be positive");
    }
  }

  const Rational& get_mu(int i) const { return mu.at(i - 1); }

  // gamma_A = |A|/2 + sum_{i in A} mu_i
  Rational gamma(IndexSet a) const {
    Rational result(set_size(a), 2);
    for (int i : set_elements(a)) result += get_mu(i);
    return result;
  }
};

// Seeded sampler: numerators and denominators uniform in [1, 20], so every
// mu_i is positive. Used for the "identities at generic rational points"
// verification strategy; the seed is recorded in the report.
inline ParameterSet sample_parameters(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> mu;
  mu.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto num = static_cast<int>(rng() % 20) + 1;
    const auto den = static_cast<int>(rng() % 20) + 1;
    mu.emplace_back(num, den);
  }
  return ParameterSet(n, std::move(mu));
}

}  // namespace dunkl
