#pragma once

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ladder.hpp"

namespace dunkl {

inline const std::vector<std::string> kAllSuites = {"osp",    "bi",     "casimir",
                                                    "monogenic", "ladder", "connection"};

struct RunConfig {
  int n = 3;
  int k_max = 2;
  std::vector<Rational> mu;
  std::string mu_spec;
  std::vector<std::string> suites = kAllSuites;
  std::string realization = "both";
  std::string out_dir;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool corrupt_sign = false;

  void validate() const {
    if (n < 3) throw std::invalid_argument("need n >= 3");
    if (k_max < 0) throw std::invalid_argument("need k_max >= 0");
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu size != n");
    for (const auto& m : mu) {
      if (m <= 0) throw std::invalid_argument("parameters must be positive");
    }
    if (realization != "clifford" && realization != "scalar" && realization != "both") {
      throw std::invalid_argument("unknown realization");
    }
    if (jobs < 1) throw std::invalid_argument("need jobs >= 1");
    for (const auto& s : suites) {
      if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end() && s != "all") {
        throw std::invalid_argument("unknown suite: " + s);
      }
    }
  }

  bool wants(const std::string& suite) const {
    for (const auto& s : suites) {
      if (s == suite || s == "all") return true;
    }
    return false;
  }

  ParameterSet params() const { return ParameterSet(n, mu); }

  std::vector<Realization> realizations() const {
    std::vector<Realization> out;
    if (realization != "scalar") out.emplace_back(Realization::Kind::clifford, params());
    if (realization != "clifford") out.emplace_back(Realization::Kind::scalar, params());
    return out;
  }
};

// Resolves the --mu flag: "p/q,p/q,..." or "random:<seed>"; an empty spec
// samples from the run seed.
inline std::vector<Rational> resolve_mu(const std::string& spec, int n, std::uint64_t seed) {
  if (spec.empty()) return sample_parameters(n, seed).mu;
  if (spec.rfind("random:", 0) == 0) {
    return sample_parameters(n, std::stoull(spec.substr(7))).mu;
  }
  std::vector<Rational> mu;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string piece = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    auto value = parse_rational(piece);
    if (!value) throw std::invalid_argument("bad rational in --mu: " + piece);
    mu.push_back(*value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(mu.size()) != n) {
    throw std::invalid_argument("--mu needs exactly n entries");
  }
  return mu;
}

struct VerificationReport {
  RunConfig config;
  std::vector<RelationCheck> checks;

  int total() const { return static_cast<int>(checks.size()); }
  int failed() const {
    int bad = 0;
    for (const auto& c : checks) {
      if (!c.passed) ++bad;
    }
    return bad;
  }
  bool all_passed() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    nlohmann::ordered_json cfg;
    cfg["n"] = config.n;
    cfg["k_max"] = config.k_max;
    nlohmann::ordered_json mu = nlohmann::ordered_json::array();
    for (const auto& m : config.mu) mu.push_back(format_rational(m));
    cfg["mu"] = mu;
    cfg["suites"] = config.suites;
    cfg["realization"] = config.realization;
    cfg["seed"] = config.seed;
    cfg["negative_control"] = config.corrupt_sign;
    doc["config"] = cfg;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json row;
      row["name"] = c.name;
      row["realization"] = c.realization;
      row["set_a"] = set_to_string(c.set_a);
      row["set_b"] = set_to_string(c.set_b);
      row["k_max"] = c.k_max;
      row["passed"] = c.passed;
      if (c.witness) {
        nlohmann::ordered_json w;
        w["input"] = c.witness->input.serialize();
        w["lhs_image"] = c.witness->lhs_image.serialize();
        w["rhs_image"] = c.witness->rhs_image.serialize();
        row["witness"] = w;
      }
      rows.push_back(row);
    }
    doc["checks"] = rows;
    nlohmann::ordered_json summary;
    summary["total"] = total();
    summary["failed"] = failed();
    summary["passed"] = total() - failed();
    doc["summary"] = summary;
    return doc;
  }
};

namespace detail {

using CheckTask = std::function<RelationCheck()>;

inline RelationCheck plain_check(const std::string& name, const std::string& realization,
                                 int k_max, bool passed) {
  RelationCheck check;
  check.name = name;
  check.realization = realization;
  check.k_max = k_max;
  check.passed = passed;
  return check;
}

inline void add_osp_tasks(const RunConfig& config, std::vector<CheckTask>& tasks) {
  for (const auto& real : config.realizations()) {
    for (IndexSet a = 1; a <= full_set(config.n); ++a) {
      for (const auto& id : osp_relations(real, a)) {
        tasks.push_back([real, a, id, k = config.k_max] {
          return RelationCheck::from("osp " + id.name, real, a, 0, k,
                                     real.ops_differ(id.lhs, id.rhs, k));
        });
      }
    }
  }
}

inline void add_bi_tasks(const RunConfig& config, std::vector<CheckTask>& tasks) {
  for (const auto& real : config.realizations()) {
    for (IndexSet a = 0; a <= full_set(config.n); ++a) {
      for (IndexSet b = 0; b <= full_set(config.n); ++b) {
        tasks.push_back([real, a, b, k = config.k_max, bad = config.corrupt_sign] {
          return verify_bi_relation(real, a, b, k, bad);
        });
      }
    }
  }
}

inline void add_casimir_tasks(const RunConfig& config, std::vector<CheckTask>& tasks) {
  const int n = config.n;
  for (const auto& real : config.realizations()) {
    for (IndexSet a = 1; a <= full_set(n); ++a) {
      if (set_size(a) >= 2) {
        tasks.push_back([real, a, k = config.k_max] {
          return verify_casimir_Q_value(real, a, k);
        });
      }
      if (set_size(a) >= 3) {
        tasks.push_back([real, a, k = config.k_max] {
          return verify_casimir_C_value(real, a, k);
        });
      }
    }
    for (IndexSet b = 1; b <= full_set(n); ++b) {
      tasks.push_back([real, b, n, k = config.k_max] {
        return verify_casimir_centrality(real, casimir_Q(real, full_set(n)), "casimir_Q_central",
                                         b, k);
      });
      tasks.push_back([real, b, n, k = config.k_max] {
        return verify_casimir_centrality(real, casimir_C(real, full_set(n)), "casimir_C_central",
                                         b, k);
      });
    }
    if (n == 3) {
      tasks.push_back([real, k = config.k_max] {
        bool ok = true;
        for (const auto& c : rank_one_structure_constants(real, k)) ok = ok && c.passed;
        return plain_check("rank_one_structure", real.name(), k, ok);
      });
    }
  }
}

inline void add_monogenic_tasks(const RunConfig& config, std::vector<CheckTask>& tasks) {
  if (config.realization == "scalar") return;
  const ParameterSet params = config.params();
  const int n = config.n;
  for (int k = 0; k <= config.k_max; ++k) {
    tasks.push_back([params, n, k] {
      const Integer expected = binomial(n + k - 2, k);
      bool ok = Integer(monogenic_span_rank(params, k, unit_blade())) == expected;
      Operator d = dirac_D(params, full_set(n));
      for (const auto& mi : multi_indices(n, k)) {
        SpinorPoly psi = basis_psi(params, {mi, unit_blade()});
        ok = ok && d.apply(psi).is_zero() && !psi.is_zero();
      }
      return plain_check("monogenic_kernel_rank k=" + std::to_string(k), "clifford", k, ok);
    });
    tasks.push_back([params, n, k] {
      bool ok = true;
      for (const auto& mi : multi_indices(n, k)) {
        SpinorPoly tower = basis_psi(params, {mi, unit_blade()});
        auto ratio = explicit_psi(params, {mi, unit_blade()}).ratio_to(tower);
        ok = ok && ratio.has_value() && *ratio == 1;
      }
      return plain_check("monogenic_closed_form k=" + std::to_string(k), "clifford", k, ok);
    });
    for (const auto& mi : multi_indices(n, k)) {
      for (int ell = 2; ell <= n; ++ell) {
        tasks.push_back([params, mi, ell] {
          return verify_eigenvalues(params, {mi, unit_blade()}, ell);
        });
      }
    }
    tasks.push_back([params, n, k] {
      const Integer expected = binomial(n + k - 1, k) * (Integer(1) << n);
      bool ok = Integer(fischer_decompose_rank(params, k)) == expected;
      return plain_check("fischer_rank k=" + std::to_string(k), "clifford", k, ok);
    });
    if (k >= 1) {
      tasks.push_back([params, n, k] {
        auto labels = multi_indices(n, k);
        std::vector<SpinorPoly> psi;
        for (const auto& mi : labels) psi.push_back(basis_psi(params, {mi, unit_blade()}));
        bool ok = true;
        for (size_t a = 0; a < psi.size(); ++a) {
          for (size_t b = 0; b < psi.size(); ++b) {
            Rational g = inner_product(params, psi[a], psi[b]);
            ok = ok && (a == b ? g > 0 : g == 0);
          }
        }
        return plain_check("gram_diagonal k=" + std::to_string(k), "clifford", k, ok);
      });
    }
  }
  if (n == 3) {
    for (int j = 0; j <= 2; ++j) {
      for (int k = j; k <= 2; ++k) {
        tasks.push_back([params, j, k] {
          SpinorPoly m = basis_psi(params, {MultiIndex{{1, 1}}, unit_blade()});
          bool ok = true;
          for (const auto& c : verify_power_actions(params, m, j, k)) ok = ok && c.passed;
          return plain_check(
              "power_actions j=" + std::to_string(j) + " k=" + std::to_string(k), "clifford",
              k, ok);
        });
      }
    }
  }
}

inline void add_ladder_tasks(const RunConfig& config, std::vector<CheckTask>& tasks) {
  const int n = config.n;
  for (const auto& real : config.realizations()) {
    for (int ell = 1; ell <= n - 2; ++ell) {
      for (int sign : {1, -1}) {
        for (int j = 1; j <= n; ++j) {
          tasks.push_back([real, ell, sign, j, k = config.k_max] {
            return verify_covariance(real, ell, sign, j, k);
          });
        }
        tasks.push_back([real, ell, sign, k = config.k_max] {
          return verify_square_factorization(real, ell, sign, k);
        });
      }
    }
  }
  if (config.realization == "scalar") return;
  const ParameterSet params = config.params();
  for (int k = 0; k <= config.k_max; ++k) {
    for (int ell = 1; ell <= n - 2; ++ell) {
      for (int sign : {1, -1}) {
        tasks.push_back([params, n, k, ell, sign] {
          bool ok = true;
          for (const auto& mi : multi_indices(n, k)) {
            ok = ok && verify_spectral_consistency(params, ell, sign, {mi, unit_blade()}).passed;
            ok = ok && (alpha_coeff(params, ell, sign, mi) == 0) == alpha_vanishes(ell, sign, mi);
            ok = ok && alpha_coeff(params, ell, sign, mi) <= 0;
            ok = ok && verify_ladder_action(params, ell, sign, {mi, unit_blade()}).passed;
          }
          return plain_check("ladder_labels k=" + std::to_string(k) + " l=" +
                                 std::to_string(ell) + (sign > 0 ? "+" : "-"),
                             "clifford", k, ok);
        });
      }
    }
    tasks.push_back([params, k] { return verify_irreducibility(params, k, unit_blade()); });
  }
  tasks.push_back([real = Realization(Realization::Kind::clifford, params), k = config.k_max] {
    return verify_parity_diagnostic(real, k);
  });
}

inline void add_connection_tasks(const RunConfig& config, std::vector<CheckTask>& tasks) {
  if (config.realization == "scalar") return;
  const ParameterSet params = config.params();
  for (int k = 0; k <= config.k_max; ++k) {
    tasks.push_back([params, k] {
      return plain_check("connection_unitarity k=" + std::to_string(k), "clifford", k,
                         verify_connection_unitarity(params, k));
    });
    if (config.n == 3) {
      for (Blade s : {unit_blade(), generator(2)}) {
        tasks.push_back([params, k, s] {
          return plain_check("connection_recurrence k=" + std::to_string(k) + " s=" +
                                 s.to_string(),
                             "clifford", k, verify_rank_one_recurrence(params, k, s));
        });
      }
    }
  }
}

}  // namespace detail

inline VerificationReport run_suite(const RunConfig& config) {
  config.validate();
  std::vector<detail::CheckTask> tasks;
  if (config.wants("osp")) detail::add_osp_tasks(config, tasks);
  if (config.wants("bi")) detail::add_bi_tasks(config, tasks);
  if (config.wants("casimir")) detail::add_casimir_tasks(config, tasks);
  if (config.wants("monogenic")) detail::add_monogenic_tasks(config, tasks);
  if (config.wants("ladder")) detail::add_ladder_tasks(config, tasks);
  if (config.wants("connection")) detail::add_connection_tasks(config, tasks);

  VerificationReport report;
  report.config = config;
  report.checks.resize(tasks.size());
  const int workers = std::min<int>(config.jobs, static_cast<int>(tasks.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) report.checks[i] = tasks[i]();
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
          report.checks[i] = tasks[i]();
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  return report;
}

// ---- file exports ----------------------------------------------------------

namespace detail {
inline std::string blade_tag(const Blade& s) {
  return s.bits == 0 ? "1" : s.to_string();
}

inline std::string label_tag(const MultiIndex& mi) {
  std::string out;
  for (size_t i = 0; i < mi.entries.size(); ++i) {
    if (i) out += ':';
    out += std::to_string(mi.entries[i]);
  }
  return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}
}  // namespace detail

// One file per (n, k, s), labels in lexicographic multi-index order, each
// basis function in the canonical term-per-line serialization.
inline void export_basis(const ParameterSet& params, int k, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const Blade& s : all_blades(params.n)) {
    std::string body;
    for (const auto& mi : multi_indices(params.n, k)) {
      body += "label " + mi.to_string() + "\n";
      body += basis_psi(params, {mi, s}).serialize();
      body += "\n";
    }
    detail::write_file(dir / ("basis_n" + std::to_string(params.n) + "_k" + std::to_string(k) +
                              "_s" + detail::blade_tag(s) + ".txt"),
                       body);
  }
}

// Ladder-action table over all labels of degree <= k_max at the unit spinor
// component.
inline void export_ladder(const ParameterSet& params, int k_max,
                          const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::string body = "ell, sign, j_from, j_to, coeff_num, coeff_den\n";
  for (int k = 0; k <= k_max; ++k) {
    for (const auto& mi : multi_indices(params.n, k)) {
      for (int ell = 1; ell <= params.n - 2; ++ell) {
        for (int sign : {1, -1}) {
          LadderStep step = ladder_step(params, ell, sign, {mi, unit_blade()});
          body += std::to_string(ell) + ", " + (sign > 0 ? "+" : "-") + ", " +
                  detail::label_tag(step.from) + ", " +
                  (step.coeff != 0 ? detail::label_tag(*step.to) : "-") + ", " +
                  numerator(step.coeff).str() + ", " + denominator(step.coeff).str() + "\n";
        }
      }
    }
  }
  detail::write_file(dir / ("ladder_n" + std::to_string(params.n) + ".csv"), body);
}

// Raw overlap matrix <Phi_a, Psi_b> at fixed s, plus a sidecar with the Gram
// diagonals of both bases.
inline void export_connection(const ParameterSet& params, int k, Blade s,
                              const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  ConnectionData data = connection_matrix(params, k, s);
  const std::string stem =
      "n" + std::to_string(params.n) + "_k" + std::to_string(k) + "_s" + detail::blade_tag(s);
  std::string body = "j_row, j_col, numerator, denominator\n";
  const int dim = static_cast<int>(data.labels.size());
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Rational& q = data.overlaps.at(a, b);
      body += detail::label_tag(data.labels[a]) + ", " + detail::label_tag(data.labels[b]) +
              ", " + numerator(q).str() + ", " + denominator(q).str() + "\n";
    }
  }
  detail::write_file(dir / ("connection_" + stem + ".csv"), body);
  std::string gram = "basis, j, numerator, denominator\n";
  for (int a = 0; a < dim; ++a) {
    gram += "psi, " + detail::label_tag(data.labels[a]) + ", " +
            numerator(data.gram_psi[a]).str() + ", " + denominator(data.gram_psi[a]).str() + "\n";
  }
  for (int a = 0; a < dim; ++a) {
    gram += "phi, " + detail::label_tag(data.labels[a]) + ", " +
            numerator(data.gram_phi[a]).str() + ", " + denominator(data.gram_phi[a]).str() + "\n";
  }
  detail::write_file(dir / ("gram_" + stem + ".csv"), gram);
}

}  // namespace dunkl
