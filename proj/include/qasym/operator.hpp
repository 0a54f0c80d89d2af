#pragma once

#include <concepts>
#include <string_view>

#include "qasym/dense_operator.hpp"
#include "qasym/scalar.hpp"
#include "qasym/tensor_operator.hpp"

namespace qasym {

/// What the asymmetry engine needs from a backend.
template <class Op>
concept OperatorBackend = requires(const Op& a, const Op& b, Scalar s) {
  { add(a, b) } -> std::same_as<Op>;
  { subtract(a, b) } -> std::same_as<Op>;
  { scale(a, s) } -> std::same_as<Op>;
  { multiply(a, b) } -> std::same_as<Op>;
  { adjoint(a) } -> std::same_as<Op>;
  { commutator(a, b) } -> std::same_as<Op>;
  { traceless(a) } -> std::same_as<Op>;
  { identity_like(a) } -> std::same_as<Op>;
  { trace(a) } -> std::same_as<Scalar>;
  { frobenius_inner(a, b) } -> std::same_as<Scalar>;
  { normalized_inner(a, b) } -> std::same_as<Scalar>;
  { hilbert_dimension(a) } -> std::same_as<double>;
  { same_shape(a, b) } -> std::same_as<bool>;
};

template <class Op>
struct backend_traits;

template <>
struct backend_traits<DenseOperator> {
  static constexpr std::string_view name = "dense";
};

template <>
struct backend_traits<TensorOperator> {
  static constexpr std::string_view name = "tensor";
};

/// h + lambda I
template <OperatorBackend Op>
Op shift(const Op& h, double lambda) {
  return add(h, scale(identity_like(h), lambda));
}

/// Normalized squared Frobenius norm, ||a||^2 / d.
template <OperatorBackend Op>
double normalized_norm_sq(const Op& a) {
  return normalized_inner(a, a).real();
}

static_assert(OperatorBackend<DenseOperator>);
static_assert(OperatorBackend<TensorOperator>);

}  // namespace qasym
