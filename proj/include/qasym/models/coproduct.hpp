#pragma once

#include <cmath>
#include <string>

#include "qasym/dense_operator.hpp"
#include "qasym/generator_set.hpp"
#include "qasym/q_number.hpp"
#include "qasym/site_matrix.hpp"

namespace qasym {

// Two-spin representations. Basis order: |up up>, |up down>, |down up>,
// |down down>, first tensor factor most significant.

namespace detail {
inline DenseOperator site(const SiteMatrix& m) { return DenseOperator(DenseMatrix(m)); }
}  // namespace detail

/// J+- = s+- (x) I + I (x) s+-, J3 = sz (x) I + I (x) sz.
inline GeneratorSet<DenseOperator> coproduct_su2(PauliConvention c = PauliConvention::half) {
  const DenseOperator id = DenseOperator::identity(2);
  auto sum = [&](const SiteMatrix& m) {
    return add(kron(detail::site(m), id), kron(id, detail::site(m)));
  };
  return GeneratorSet<DenseOperator>(
      "su2-coproduct-" + std::string(to_string(c)),
      {{"J+", sum(pauli::plus(c))}, {"J-", sum(pauli::minus(c))}, {"J3", sum(pauli::z(c))}});
}

/// J'+- = s+- (x) q^{sz} + q^{-sz} (x) s+-, J'3 = J3, half-convention spins.
inline GeneratorSet<DenseOperator> coproduct_suq2(double gamma) {
  constexpr auto c = PauliConvention::half;
  const DenseOperator right = detail::site(pauli::q_power_sz(gamma, 1.0));
  const DenseOperator left = detail::site(pauli::q_power_sz(gamma, -1.0));
  auto deformed = [&](const SiteMatrix& m) {
    return add(kron(detail::site(m), right), kron(left, detail::site(m)));
  };
  const DenseOperator id = DenseOperator::identity(2);
  const DenseOperator z = detail::site(pauli::z(c));
  return GeneratorSet<DenseOperator>(
      "suq2-coproduct",
      {{"J'+", deformed(pauli::plus(c))},
       {"J'-", deformed(pauli::minus(c))},
       {"J3", add(kron(z, id), kron(id, z))}},
      gamma);
}

/// The q-deformed Casimir on two spins:
///
///   diag([3/2]_q^2, e^{-gamma} + [1/2]_q^2, e^{gamma} + [1/2]_q^2, [3/2]_q^2)
///   with 1 on the (|up down>, |down up>) off-diagonal.
///
/// e^{-gamma} sits on |up down> and e^{gamma} on |down up>; this is the only
/// placement that commutes with coproduct_suq2(gamma). It equals
/// J'- J'+ + [J3 + 1/2]_q^2.
inline DenseOperator qcasimir_matrix(double gamma) {
  const double outer = std::pow(q_number(1.5, gamma), 2);
  const double half_sq = std::pow(q_number(0.5, gamma), 2);
  DenseMatrix m = DenseMatrix::Zero(4, 4);
  m(0, 0) = outer;
  m(1, 1) = std::exp(-gamma) + half_sq;
  m(2, 2) = std::exp(gamma) + half_sq;
  m(3, 3) = outer;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  return DenseOperator(std::move(m));
}

/// J1^2 + J2^2 + J3^2 from a {J+, J-, J3}-labelled set, J1 = (J+ + J-)/2,
/// J2 = (J+ - J-)/2i. Works for the deformed labels J'+ / J'- as well.
template <OperatorBackend Op>
Op su2_casimir(const GeneratorSet<Op>& g) {
  const auto& gens = g.generators();
  if (gens.size() != 3) throw std::invalid_argument("su2_casimir expects {J+, J-, J3}");
  const Op& jp = gens[0].op;
  const Op& jm = gens[1].op;
  const Op& j3 = gens[2].op;
  // J1^2 + J2^2 = (J+ J- + J- J+)/2
  const Op perp = scale(add(multiply(jp, jm), multiply(jm, jp)), 0.5);
  return add(perp, multiply(j3, j3));
}

}  // namespace qasym
