#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "qasym/asymmetry.hpp"
#include "qasym/closed_forms.hpp"
#include "qasym/models/chain.hpp"
#include "qasym/models/coproduct.hpp"
#include "qasym/models/fock.hpp"

namespace qasym {

inline constexpr double kVerifyRelTolerance = 1e-9;

struct FockModel {
  int M = 2;
};
struct CasimirModel {};
struct ChainModel {
  ChainSpec spec;
};
using VerifiableModel = std::variant<FockModel, CasimirModel, ChainModel>;

/// Least-squares fit oracle ~ ratio * closed_form.
struct RatioFit {
  double ratio = std::numeric_limits<double>::quiet_NaN();
  /// RMS of (oracle - ratio * cf) relative to RMS of oracle.
  double residual = std::numeric_limits<double>::quiet_NaN();
};

inline RatioFit fit_constant_ratio(const std::vector<double>& oracle, const std::vector<double>& cf) {
  double oc = 0.0, cc = 0.0, oo = 0.0;
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    if (!std::isfinite(oracle[i]) || !std::isfinite(cf[i])) continue;
    oc += oracle[i] * cf[i];
    cc += cf[i] * cf[i];
    oo += oracle[i] * oracle[i];
  }
  RatioFit fit;
  if (cc == 0.0 || oo == 0.0) return fit;
  fit.ratio = oc / cc;
  double rr = 0.0;
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    if (!std::isfinite(oracle[i]) || !std::isfinite(cf[i])) continue;
    const double e = oracle[i] - fit.ratio * cf[i];
    rr += e * e;
  }
  fit.residual = std::sqrt(rr / oo);
  return fit;
}

struct VariantComparison {
  ClosedFormVariant variant;
  std::vector<double> values;
  double max_abs_diff = 0.0;
  double max_rel_diff = 0.0;
  RatioFit fit;
  bool matches = false;
};

struct DiscrepancyReport {
  std::string model;
  std::map<std::string, std::string> params;
  std::vector<double> gammas;
  std::vector<double> oracle;
  VariantComparison as_written;
  VariantComparison corrected;
  double tolerance = kVerifyRelTolerance;
};

/// Uniform grid over [lo, hi], endpoints included.
inline std::vector<double> linspace(double lo, double hi, std::size_t steps) {
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < steps; ++i) {
    out[i] = i + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return out;
}

/// Default verification grid: 24 points on [0.25, 3].
inline std::vector<double> default_verify_grid() { return linspace(0.25, 3.0, 24); }

/// Direct-matrix asymmetry for one model point.
inline double oracle_value(const VerifiableModel& model, double gamma) {
  return std::visit(
      [gamma](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FockModel>) {
          const FockSubspaceSpec spec{m.M};
          return asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, gamma)).total;
        } else if constexpr (std::is_same_v<M, CasimirModel>) {
          return asymmetry(coproduct_su2(), qcasimir_matrix(gamma)).total;
        } else {
          return asymmetry(to_dense(chain_su2_generators(m.spec)), to_dense(h_q(m.spec, gamma))).total;
        }
      },
      model);
}

inline double closed_form_value(const VerifiableModel& model, double gamma, Variant v) {
  return std::visit(
      [gamma, v](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FockModel>) {
          return cf_fock(m.M, gamma, v);
        } else if constexpr (std::is_same_v<M, CasimirModel>) {
          return cf_casimir(gamma, v);
        } else {
          return cf_chain(m.spec.n_sites, gamma, v, m.spec);
        }
      },
      model);
}

inline ClosedFormModel model_kind(const VerifiableModel& m) {
  if (std::holds_alternative<FockModel>(m)) return ClosedFormModel::fock;
  if (std::holds_alternative<CasimirModel>(m)) return ClosedFormModel::casimir;
  return ClosedFormModel::chain;
}

/// Compare both closed-form variants against the dense oracle on a gamma
/// grid. Sizes must be dense-verifiable (Fock M <= 8, chain N <= 10).
inline DiscrepancyReport verify(const VerifiableModel& model, const std::vector<double>& gammas,
                                double rel_tol = kVerifyRelTolerance) {
  DiscrepancyReport rep;
  rep.model = std::string(to_string(model_kind(model)));
  rep.gammas = gammas;
  rep.tolerance = rel_tol;
  if (const auto* f = std::get_if<FockModel>(&model)) {
    if (f->M > 8) throw std::invalid_argument("verify: Fock M must be <= 8");
    rep.params["M"] = std::to_string(f->M);
  } else if (const auto* c = std::get_if<ChainModel>(&model)) {
    if (c->spec.n_sites > 10) throw std::invalid_argument("verify: chain N must be <= 10");
    rep.params["N"] = std::to_string(c->spec.n_sites);
    rep.params["convention"] = c->spec.label();
  }
  for (double g : gammas) rep.oracle.push_back(oracle_value(model, g));

  auto compare = [&](Variant v) {
    VariantComparison cmp;
    cmp.variant = describe(model_kind(model), v);
    bool all_ok = true;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      const double cf = closed_form_value(model, gammas[i], v);
      cmp.values.push_back(cf);
      const double diff = std::abs(rep.oracle[i] - cf);
      const double rel = diff / std::max(std::abs(rep.oracle[i]), 1e-300);
      if (!std::isfinite(diff)) {
        all_ok = false;
        cmp.max_abs_diff = cmp.max_rel_diff = std::numeric_limits<double>::infinity();
        continue;
      }
      cmp.max_abs_diff = std::max(cmp.max_abs_diff, diff);
      cmp.max_rel_diff = std::max(cmp.max_rel_diff, rel);
      // absolute floor for oracle values that vanish
      if (rel > rel_tol && diff > rel_tol) all_ok = false;
    }
    cmp.fit = fit_constant_ratio(rep.oracle, cmp.values);
    cmp.matches = all_ok;
    return cmp;
  };
  rep.as_written = compare(Variant::as_written);
  rep.corrected = compare(Variant::corrected);
  return rep;
}

}  // namespace qasym
