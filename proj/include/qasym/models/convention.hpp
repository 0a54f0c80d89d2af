#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qasym/asymmetry.hpp"
#include "qasym/models/chain.hpp"

namespace qasym {

struct ConventionResult {
  ChainSpec spec;
  /// ||[H_q, X]|| per su_q(2) generator, Frobenius norm.
  std::vector<std::pair<std::string, double>> commutator_norms;
  double max_norm = 0.0;
  bool symmetric = false;
};

struct ConventionReport {
  std::size_t n_sites = 0;
  double gamma = 0.0;
  double tolerance = kSymmetryTolerance;
  /// Every point of the convention grid, in a fixed order.
  std::vector<ConventionResult> all;

  std::vector<ChainSpec> symmetric() const {
    std::vector<ChainSpec> out;
    for (const auto& r : all)
      if (r.symmetric) out.push_back(r.spec);
    return out;
  }
};

inline std::vector<ChainSpec> convention_grid(std::size_t n_sites) {
  std::vector<ChainSpec> grid;
  for (auto p : {PauliConvention::half, PauliConvention::full})
    for (auto b : {BondConvention::open, BondConvention::periodic})
      for (auto s : {BoundarySign::as_written, BoundarySign::reflected})
        grid.push_back(ChainSpec{n_sites, p, b, s});
  return grid;
}

inline ConventionReport compute_convention_report(std::size_t n_sites, double gamma,
                                                  double tol = kSymmetryTolerance) {
  if (n_sites < 2 || n_sites > 10) {
    throw std::invalid_argument("resolve_convention needs 2 <= N <= 10 for a dense check");
  }
  ConventionReport report{n_sites, gamma, tol, {}};
  for (const auto& spec : convention_grid(n_sites)) {
    const auto gens = to_dense(chain_suq2_generators(spec, gamma));
    const auto h = to_dense(h_q(spec, gamma));
    ConventionResult r{spec, {}, 0.0, false};
    for (const auto& x : gens.generators()) {
      const double n = detail::commutator_norm(h, x.op);
      r.commutator_norms.emplace_back(x.label, n);
      r.max_norm = std::max(r.max_norm, n);
    }
    r.symmetric = r.max_norm < tol;
    report.all.push_back(std::move(r));
  }
  return report;
}

/// Dense search of the convention grid {half, full} x {open, periodic} x
/// {as-written, reflected boundary} for the specs where the deformed chain
/// Hamiltonian commutes with the chain su_q(2) generators. Results are cached
/// per (N, gamma, tol).
inline ConventionReport resolve_convention(std::size_t n_sites, double gamma,
                                           double tol = kSymmetryTolerance) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, double, double>, ConventionReport> cache;
  const auto key = std::make_tuple(n_sites, gamma, tol);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  ConventionReport report = compute_convention_report(n_sites, gamma, tol);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(report)).first->second;
}

}  // namespace qasym
