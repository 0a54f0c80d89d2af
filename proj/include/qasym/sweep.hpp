#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qasym/asymmetry.hpp"
#include "qasym/closed_forms.hpp"
#include "qasym/models/chain.hpp"
#include "qasym/models/coproduct.hpp"
#include "qasym/models/fock.hpp"
#include "qasym/verify.hpp"

namespace qasym {

enum class SweepModel { fock, casimir, chain, chain_inf };
enum class BackendChoice { dense, tensor, automatic };

inline std::string_view to_string(SweepModel m) {
  switch (m) {
    case SweepModel::fock: return "fock";
    case SweepModel::casimir: return "casimir";
    case SweepModel::chain: return "chain";
    case SweepModel::chain_inf: return "chain-inf";
  }
  return "?";
}

/// Largest chain that `automatic` evaluates densely (2^N <= 4096).
inline constexpr std::size_t kAutoDenseMaxSites = 12;

inline bool use_dense(BackendChoice b, std::size_t n_sites) {
  if (b == BackendChoice::dense) return true;
  if (b == BackendChoice::tensor) return false;
  return n_sites <= kAutoDenseMaxSites;
}

/// One model instance: the sweep parameter is M (fock), N or "inf" (chain),
/// and empty for casimir.
struct ModelPoint {
  SweepModel model = SweepModel::casimir;
  int fock_m = 2;
  ChainLength chain_n;  // nullopt: N -> infinity
  ChainSpec conv = resolved_chain_spec(2);
  BackendChoice backend = BackendChoice::automatic;
  Variant variant = Variant::corrected;

  std::string param_label() const {
    switch (model) {
      case SweepModel::fock: return std::to_string(fock_m);
      case SweepModel::casimir: return "-";
      case SweepModel::chain: return chain_n ? std::to_string(*chain_n) : "inf";
      case SweepModel::chain_inf: return "inf";
    }
    return "";
  }
};

struct PointResult {
  double value = std::numeric_limits<double>::quiet_NaN();
  std::string backend;
  std::optional<AsymmetryReport> report;  // absent for closed-form points
  std::string note;
};

inline PointResult closed_form_point(const ModelPoint& p, double gamma) {
  return {cf_chain(std::nullopt, gamma, p.variant, p.conv), "closed-form", std::nullopt, ""};
}

/// Evaluate one (model, gamma) point. Propagates ScalarOperatorError.
inline PointResult evaluate_point(const ModelPoint& p, double gamma) {
  switch (p.model) {
    case SweepModel::fock: {
      const FockSubspaceSpec spec{p.fock_m};
      auto r = asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, gamma));
      r.model_params["M"] = std::to_string(p.fock_m);
      return {r.total, r.backend, r, ""};
    }
    case SweepModel::casimir: {
      auto r = asymmetry(coproduct_su2(), qcasimir_matrix(gamma));
      return {r.total, r.backend, r, ""};
    }
    case SweepModel::chain:
    case SweepModel::chain_inf: {
      if (p.model == SweepModel::chain_inf || !p.chain_n) return closed_form_point(p, gamma);
      ChainSpec spec = p.conv;
      spec.n_sites = *p.chain_n;
      const auto gens = chain_su2_generators(spec);
      const auto h = h_q(spec, gamma);
      AsymmetryReport r = use_dense(p.backend, spec.n_sites) ? asymmetry(to_dense(gens), to_dense(h))
                                                             : asymmetry(gens, h);
      r.model_params["N"] = std::to_string(spec.n_sites);
      r.model_params["convention"] = spec.label();
      return {r.total, r.backend, r, ""};
    }
  }
  throw std::logic_error("unknown model");
}

struct SweepRow {
  std::string model;
  std::string param;
  double gamma = 0.0;
  double asymmetry = 0.0;
  std::string backend;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepJob {
  SweepModel model = SweepModel::casimir;
  std::vector<ModelPoint> points;  // one per parameter value, in output order
  double gamma_min = -3.0;
  double gamma_max = 3.0;
  std::size_t steps = 61;

  void validate() const {
    if (steps < 2) throw std::invalid_argument("steps must be >= 2");
    if (!(gamma_min < gamma_max)) throw std::invalid_argument("gamma-min must be < gamma-max");
    if (points.empty()) throw std::invalid_argument("sweep has no model parameters");
  }
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> footnotes;
};

/// Run fn(i) for i in [0, n) on `threads` workers. The first exception is
/// rethrown after all workers stop.
inline void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (err) std::rethrow_exception(err);
}

/// Thread count from `flag` (0 = unset), else ASYM_THREADS, else 1.
inline std::size_t resolve_threads(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("ASYM_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1;
}

/// Rows ordered by parameter, then gamma ascending. Fock gamma = 0 points are
/// scalar-degenerate and emitted as NaN with a footnote.
inline SweepResult run_sweep(const SweepJob& job, std::size_t threads = 1) {
  job.validate();
  const std::vector<double> grid = linspace(job.gamma_min, job.gamma_max, job.steps);
  const std::size_t n = job.points.size() * grid.size();
  SweepResult out;
  out.rows.resize(n);
  std::vector<std::string> notes(n);
  parallel_for(n, threads, [&](std::size_t idx) {
    const ModelPoint& p = job.points[idx / grid.size()];
    const double g = grid[idx % grid.size()];
    SweepRow& row = out.rows[idx];
    row.model = std::string(to_string(job.model == SweepModel::chain_inf ? SweepModel::chain : job.model));
    row.param = p.param_label();
    row.gamma = g;
    try {
      const PointResult r = evaluate_point(p, g);
      row.asymmetry = r.value;
      row.backend = r.backend;
    } catch (const ScalarOperatorError&) {
      row.asymmetry = std::numeric_limits<double>::quiet_NaN();
      row.backend = "dense";
      notes[idx] = "model=" + row.model + " param=" + row.param +
                   " gamma=0: H' is proportional to the identity (q = 1), asymmetry undefined";
    }
  });
  for (auto& s : notes)
    if (!s.empty()) out.footnotes.push_back(std::move(s));
  return out;
}

}  // namespace qasym
