#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "qasym/asymmetry.hpp"
#include "qasym/models/convention.hpp"
#include "qasym/sweep.hpp"
#include "qasym/verify.hpp"

namespace qasym::io {

using nlohmann::json;

// NaN and infinities become null
inline json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline json to_json(const AsymmetryReport& r) {
  json per = json::array();
  for (const auto& [label, v] : r.per_generator) per.push_back({{"generator", label}, {"norm_sq", v}});
  return {{"value", r.total},
          {"per_generator", per},
          {"norm_sq_traceless", r.norm_sq_traceless},
          {"backend", r.backend},
          {"hermitian_input", r.hermitian_input},
          {"model_params", r.model_params}};
}

inline json to_json(const VariantComparison& c) {
  json vals = json::array();
  for (double v : c.values) vals.push_back(number_or_null(v));
  return {{"variant", std::string(to_string(c.variant.variant))},
          {"corrections", c.variant.corrections},
          {"values", vals},
          {"max_abs_diff", number_or_null(c.max_abs_diff)},
          {"max_rel_diff", number_or_null(c.max_rel_diff)},
          {"fit_ratio", number_or_null(c.fit.ratio)},
          {"fit_residual", number_or_null(c.fit.residual)},
          {"matches_oracle", c.matches}};
}

inline json to_json(const DiscrepancyReport& r) {
  return {{"model", r.model},
          {"params", r.params},
          {"gammas", r.gammas},
          {"oracle", r.oracle},
          {"tolerance", r.tolerance},
          {"as_written", to_json(r.as_written)},
          {"corrected", to_json(r.corrected)}};
}

inline json to_json(const ConventionReport& r) {
  json all = json::array();
  for (const auto& c : r.all) {
    json norms = json::object();
    for (const auto& [label, v] : c.commutator_norms) norms[label] = v;
    all.push_back({{"convention", c.spec.label()},
                   {"commutator_norms", norms},
                   {"max_norm", c.max_norm},
                   {"symmetric", c.symmetric}});
  }
  json winners = json::array();
  for (const auto& s : r.symmetric()) winners.push_back(s.label());
  return {{"N", r.n_sites}, {"gamma", r.gamma}, {"tolerance", r.tolerance}, {"grid", all}, {"symmetric", winners}};
}

inline json to_json(const SweepResult& s) {
  json rows = json::array();
  for (const auto& r : s.rows) {
    json row = {{"model", r.model},
                {"param", r.param},
                {"gamma", r.gamma},
                {"asymmetry", number_or_null(r.asymmetry)},
                {"backend", r.backend}};
    if (std::isnan(r.asymmetry)) row["note"] = "scalar-degenerate, see footnotes";
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}, {"footnotes", s.footnotes}};
}

}  // namespace qasym::io
