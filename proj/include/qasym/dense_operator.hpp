#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "qasym/errors.hpp"
#include "qasym/scalar.hpp"

namespace qasym {

using DenseMatrix = Eigen::MatrixXcd;

/// Square complex matrix acting on a d-dimensional Hilbert space.
///
/// Immutable after construction; every arithmetic helper returns a new value.
class DenseOperator {
 public:
  DenseOperator() = default;

  explicit DenseOperator(DenseMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw DimensionMismatch("dense operator must be square, got " +
                              std::to_string(m_.rows()) + "x" +
                              std::to_string(m_.cols()));
    }
  }

  /// Row-major nested initializer, mostly for tests.
  DenseOperator(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const auto d = static_cast<Eigen::Index>(rows.size());
    m_.resize(d, d);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Eigen::Index>(row.size()) != d) {
        throw DimensionMismatch("ragged initializer");
      }
      Eigen::Index j = 0;
      for (const auto& v : row) m_(i, j++) = v;
      ++i;
    }
  }

  static DenseOperator identity(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return DenseOperator(DenseMatrix::Identity(n, n));
  }
  static DenseOperator zero(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return DenseOperator(DenseMatrix::Zero(n, n));
  }
  static DenseOperator diagonal(const Eigen::VectorXcd& diag) {
    return DenseOperator(DenseMatrix(diag.asDiagonal()));
  }

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Scalar operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const DenseMatrix& matrix() const { return m_; }

 private:
  DenseMatrix m_;
};

namespace detail {
inline void require_same_dim(const DenseOperator& a, const DenseOperator& b,
                             const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}
}  // namespace detail

inline DenseOperator add(const DenseOperator& a, const DenseOperator& b) {
  detail::require_same_dim(a, b, "add");
  return DenseOperator(a.matrix() + b.matrix());
}

inline DenseOperator subtract(const DenseOperator& a, const DenseOperator& b) {
  detail::require_same_dim(a, b, "subtract");
  return DenseOperator(a.matrix() - b.matrix());
}

inline DenseOperator scale(const DenseOperator& a, Scalar s) {
  return DenseOperator(s * a.matrix());
}

inline DenseOperator multiply(const DenseOperator& a, const DenseOperator& b) {
  detail::require_same_dim(a, b, "multiply");
  return DenseOperator(a.matrix() * b.matrix());
}

inline DenseOperator adjoint(const DenseOperator& a) {
  return DenseOperator(a.matrix().adjoint());
}

/// ab - ba
inline DenseOperator commutator(const DenseOperator& a,
                                const DenseOperator& b) {
  detail::require_same_dim(a, b, "commutator");
  DenseMatrix ab = a.matrix() * b.matrix();
  ab.noalias() -= b.matrix() * a.matrix();
  return DenseOperator(std::move(ab));
}

inline DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  DenseMatrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return DenseOperator(std::move(out));
}

inline Scalar trace(const DenseOperator& a) { return a.matrix().trace(); }

/// tr(a^dagger b)
inline Scalar frobenius_inner(const DenseOperator& a, const DenseOperator& b) {
  detail::require_same_dim(a, b, "frobenius_inner");
  // sum_ij conj(a_ij) b_ij
  return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
}

inline double frobenius_norm_sq(const DenseOperator& a) {
  return a.matrix().squaredNorm();
}

inline double hilbert_dimension(const DenseOperator& a) {
  return static_cast<double>(a.dim());
}

/// tr(a^dagger b) / d
inline Scalar normalized_inner(const DenseOperator& a, const DenseOperator& b) {
  return frobenius_inner(a, b) / hilbert_dimension(a);
}

inline DenseOperator identity_like(const DenseOperator& a) {
  return DenseOperator::identity(a.dim());
}

/// a - tr(a)/d I
inline DenseOperator traceless(const DenseOperator& a) {
  const Scalar shift = trace(a) / hilbert_dimension(a);
  DenseMatrix m = a.matrix();
  m.diagonal().array() -= shift;
  return DenseOperator(std::move(m));
}

inline bool same_shape(const DenseOperator& a, const DenseOperator& b) {
  return a.dim() == b.dim();
}

inline double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
  detail::require_same_dim(a, b, "max_abs_diff");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const DenseOperator& a, double tol = 1e-12) {
  return (a.matrix() - a.matrix().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline bool is_finite(const DenseOperator& a) { return a.matrix().allFinite(); }

}  // namespace qasym
