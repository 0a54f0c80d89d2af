#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qasym/errors.hpp"
#include "qasym/generator_set.hpp"
#include "qasym/operator.hpp"

namespace qasym {

inline constexpr double kScalarEpsilon = 1e-12;
inline constexpr double kSymmetryTolerance = 1e-10;

struct AsymmetryReport {
  double total = 0.0;
  /// ||[h, X_j]||^2 for each generator, in generator order.
  std::vector<std::pair<std::string, double>> per_generator;
  /// ||h - tr(h)/d I||^2
  double norm_sq_traceless = 0.0;
  std::string backend;
  bool hermitian_input = true;
  std::map<std::string, std::string> model_params;
};

namespace detail {

template <OperatorBackend Op>
double commutator_norm(const Op& a, const Op& b) {
  const Op c = commutator(a, b);
  return std::sqrt(std::max(0.0, frobenius_inner(c, c).real()));
}

template <OperatorBackend Op>
bool hermitian(const Op& h) {
  const Op diff = subtract(h, adjoint(h));
  return normalized_norm_sq(diff) <= 1e-24 * std::max(1.0, normalized_norm_sq(h));
}

}  // namespace detail

/// Asymmetry degree of h with respect to the algebra spanned by g:
///
///   A(g, h) = sum_j ||[h, X_j]||^2 / ||h - tr(h)/d I||^2.
///
/// All norms are computed as tr(.)/d internally so long tensor chains do not
/// overflow; the reported norms are rescaled to the actual Frobenius values.
/// Throws ScalarOperatorError when the traceless part of h vanishes (the
/// ratio is 0/0 there). `scalar_eps` bounds ||h~||^2 from below.
template <OperatorBackend Op>
AsymmetryReport asymmetry(const GeneratorSet<Op>& g, const Op& h,
                          double scalar_eps = kScalarEpsilon) {
  if (!same_shape(h, g.generators().front().op)) {
    throw DimensionMismatch("operator vs generator set '" + g.name() + "'");
  }
  const double d = hilbert_dimension(h);
  const double denom = normalized_norm_sq(traceless(h));
  if (!(denom * d > scalar_eps)) {
    throw ScalarOperatorError(
        "operator is proportional to the identity (||h - tr(h)/d I||^2 = " +
        std::to_string(denom * d) + "); the asymmetry degree is 0/0");
  }
  AsymmetryReport r;
  r.backend = std::string(backend_traits<Op>::name);
  r.norm_sq_traceless = denom * d;
  r.hermitian_input = detail::hermitian(h);
  double numer = 0.0;
  for (const auto& x : g.generators()) {
    const double n = normalized_norm_sq(commutator(h, x.op));
    numer += n;
    r.per_generator.emplace_back(x.label, n * d);
  }
  r.total = numer / denom;
  r.model_params["generators"] = g.name();
  return r;
}

struct SymmetryCheck {
  bool symmetric = false;
  double max_norm = 0.0;
  std::string worst_generator;
};

/// True iff max_j ||[h, X_j]|| <= tol (Frobenius norm, not normalized).
template <OperatorBackend Op>
SymmetryCheck is_symmetric(const GeneratorSet<Op>& g, const Op& h,
                           double tol = kSymmetryTolerance) {
  SymmetryCheck out;
  for (const auto& x : g.generators()) {
    const double n = detail::commutator_norm(h, x.op);
    if (n >= out.max_norm) {
      out.max_norm = n;
      out.worst_generator = x.label;
    }
  }
  out.symmetric = out.max_norm <= tol;
  return out;
}

/// |A(g, h + lambda I) - A(g, h)| <= tol for every lambda.
template <OperatorBackend Op>
bool check_shift_invariance(const GeneratorSet<Op>& g, const Op& h,
                            const std::vector<double>& lambdas, double tol = 1e-10) {
  const double base = asymmetry(g, h).total;
  return std::all_of(lambdas.begin(), lambdas.end(), [&](double lambda) {
    return std::abs(asymmetry(g, shift(h, lambda)).total - base) <= tol;
  });
}

namespace detail {

template <OperatorBackend Op>
void require_commutes_with(const GeneratorSet<Op>& g, const Op& t, double tol) {
  for (const auto& x : g.generators()) {
    const double n = commutator_norm(t, x.op);
    if (n > tol) {
      throw PreconditionViolation("transformation does not commute with generator '" +
                                  x.label + "' (||[T,X]|| = " + std::to_string(n) + ")");
    }
  }
}

}  // namespace detail

/// Conjugation by a unitary T that commutes with every generator leaves the
/// asymmetry unchanged. Returns whether |A(g, T h T^dagger) - A(g, h)| <= tol.
/// Throws PreconditionViolation when T is not unitary or does not commute.
template <OperatorBackend Op>
bool check_unitary_invariance(const GeneratorSet<Op>& g, const Op& h, const Op& t,
                              double tol = 1e-9, double precondition_tol = 1e-10) {
  const Op tdt = multiply(adjoint(t), t);
  const Op defect = subtract(tdt, identity_like(t));
  const double unitarity = std::sqrt(normalized_norm_sq(defect));
  if (unitarity > precondition_tol) {
    throw PreconditionViolation("transformation is not unitary (||T^dagger T - I||/sqrt(d) = " +
                                std::to_string(unitarity) + ")");
  }
  detail::require_commutes_with(g, t, precondition_tol);
  const Op conj = multiply(multiply(t, h), adjoint(t));
  return std::abs(asymmetry(g, conj).total - asymmetry(g, h).total) <= tol;
}

/// A(g, T h T^-1) - A(g, h) for an invertible T commuting with g. The sign is
/// reported, not asserted.
inline double explore_monotonicity(const GeneratorSet<DenseOperator>& g,
                                   const DenseOperator& h, const DenseOperator& t,
                                   double precondition_tol = 1e-10) {
  Eigen::FullPivLU<DenseMatrix> lu(t.matrix());
  if (!lu.isInvertible()) throw PreconditionViolation("transformation is singular");
  detail::require_commutes_with(g, t, precondition_tol);
  const DenseOperator conj(t.matrix() * h.matrix() * lu.inverse());
  return asymmetry(g, conj).total - asymmetry(g, h).total;
}

}  // namespace qasym
