#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

#include "qasym/asymmetry.hpp"
#include "qasym/models/chain.hpp"

namespace qasym {

struct BenchRow {
  std::size_t n_sites = 0;
  double gamma = 0.0;
  double seconds = 0.0;
  double value = 0.0;
  std::size_t hamiltonian_terms = 0;
};

/// Wall time of one tensor-backend asymmetry evaluation per chain length.
inline std::vector<BenchRow> bench_tensor_chain(const std::vector<std::size_t>& sizes, double gamma,
                                                ChainSpec conv = resolved_chain_spec(2)) {
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    conv.n_sites = n;
    const auto start = std::chrono::steady_clock::now();
    const auto gens = chain_su2_generators(conv);
    const auto h = h_q(conv, gamma);
    const double value = asymmetry(gens, h).total;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    rows.push_back({n, gamma, dt.count(), value, h.size()});
  }
  return rows;
}

}  // namespace qasym
