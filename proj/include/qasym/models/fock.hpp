#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "qasym/dense_operator.hpp"
#include "qasym/generator_set.hpp"
#include "qasym/q_number.hpp"

namespace qasym {

/// Two-mode Fock states |m1, M - m1> with fixed total excitation M.
/// Basis index k corresponds to m1 = k, so the dimension is M + 1.
struct FockSubspaceSpec {
  int M = 1;

  std::size_t dim() const { return static_cast<std::size_t>(M) + 1; }
  void validate() const {
    if (M < 1) throw std::invalid_argument("Fock subspace needs M >= 1, got " + std::to_string(M));
  }
};

/// J+ = a1^dagger a2, J- = a2^dagger a1, J3 = (N1 - N2)/2 on the M-subspace.
inline GeneratorSet<DenseOperator> fock_su2_generators(const FockSubspaceSpec& spec) {
  spec.validate();
  const auto d = static_cast<Eigen::Index>(spec.dim());
  DenseMatrix jp = DenseMatrix::Zero(d, d);
  DenseMatrix j3 = DenseMatrix::Zero(d, d);
  for (Eigen::Index m1 = 0; m1 < d; ++m1) {
    const Eigen::Index m2 = spec.M - m1;
    j3(m1, m1) = 0.5 * static_cast<double>(m1 - m2);
    // J+|m1, m2> = sqrt((m1 + 1) m2) |m1 + 1, m2 - 1>
    if (m2 > 0) jp(m1 + 1, m1) = std::sqrt(static_cast<double>((m1 + 1) * m2));
  }
  DenseMatrix jm = jp.adjoint();
  return GeneratorSet<DenseOperator>(
      "su2-fock-M" + std::to_string(spec.M),
      {{"J+", DenseOperator(std::move(jp))},
       {"J-", DenseOperator(std::move(jm))},
       {"J3", DenseOperator(std::move(j3))}});
}

/// H' = b1^dagger b1 + b2^dagger b2 restricted to the M-subspace:
/// diag([m1]_q + [M - m1]_q).
inline DenseOperator fock_qhamiltonian(const FockSubspaceSpec& spec, double gamma) {
  spec.validate();
  Eigen::VectorXcd diag(static_cast<Eigen::Index>(spec.dim()));
  for (int m1 = 0; m1 <= spec.M; ++m1) {
    diag(m1) = q_number(m1, gamma) + q_number(spec.M - m1, gamma);
  }
  return DenseOperator::diagonal(diag);
}

}  // namespace qasym
