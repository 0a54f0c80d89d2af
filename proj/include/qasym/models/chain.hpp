#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qasym/generator_set.hpp"
#include "qasym/site_matrix.hpp"
#include "qasym/tensor_operator.hpp"

namespace qasym {

enum class BondConvention { open, periodic };

/// Sign of the boundary field (q - q^-1)/2 (s^z_1 - s^z_N). `reflected`
/// negates it, which is the same Hamiltonian with sites relabelled
/// j -> N + 1 - j.
enum class BoundarySign { as_written, reflected };

inline std::string_view to_string(BondConvention b) {
  return b == BondConvention::open ? "open" : "periodic";
}
inline std::string_view to_string(BoundarySign b) {
  return b == BoundarySign::as_written ? "as-written" : "reflected";
}

struct ChainSpec {
  std::size_t n_sites = 2;
  PauliConvention pauli = PauliConvention::full;
  BondConvention bonds = BondConvention::open;
  BoundarySign boundary = BoundarySign::reflected;

  void validate() const {
    if (n_sites < 2) throw std::invalid_argument("chain needs N >= 2, got " + std::to_string(n_sites));
  }

  std::string label() const {
    return std::string(to_string(pauli)) + "/" + std::string(to_string(bonds)) + "/" +
           std::string(to_string(boundary));
  }

  /// Nearest-neighbour pairs (i, i+1); periodic adds (N-1, 0).
  std::vector<std::pair<std::size_t, std::size_t>> bond_list() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t nb = bonds == BondConvention::open ? n_sites - 1 : n_sites;
    for (std::size_t j = 0; j < nb; ++j) out.emplace_back(j, (j + 1) % n_sites);
    return out;
  }

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// The convention under which the deformed chain Hamiltonian commutes with
/// the chain su_q(2) generators: full Pauli matrices, open bonds, reflected
/// boundary sign. Fixed by resolve_convention over N = 3..10.
inline ChainSpec resolved_chain_spec(std::size_t n_sites) {
  return ChainSpec{n_sites, PauliConvention::full, BondConvention::open, BoundarySign::reflected};
}

namespace detail {

inline TensorOperator chain_sum(const ChainSpec& spec, const SiteMatrix& m, Scalar coeff) {
  std::vector<TensorTerm> terms;
  for (std::size_t j = 0; j < spec.n_sites; ++j) {
    std::vector<SiteMatrix> f(spec.n_sites, SiteMatrix::Identity());
    f[j] = m;
    terms.push_back({coeff, std::move(f)});
  }
  return TensorOperator(spec.n_sites, std::move(terms));
}

// coeff * sum_j L..L (x) m_j (x) R..R
inline TensorOperator dressed_sum(const ChainSpec& spec, const SiteMatrix& m,
                                  const SiteMatrix& left, const SiteMatrix& right, Scalar coeff) {
  std::vector<TensorTerm> terms;
  for (std::size_t j = 0; j < spec.n_sites; ++j) {
    std::vector<SiteMatrix> f(spec.n_sites);
    for (std::size_t k = 0; k < spec.n_sites; ++k) f[k] = k < j ? left : (k == j ? m : right);
    terms.push_back({coeff, std::move(f)});
  }
  return TensorOperator(spec.n_sites, std::move(terms));
}

inline void append_bond(std::vector<TensorTerm>& terms, std::size_t n, std::size_t i,
                        std::size_t j, const SiteMatrix& m, Scalar coeff) {
  std::vector<SiteMatrix> f(n, SiteMatrix::Identity());
  f[i] = m;
  f[j] = f[j] * m;
  terms.push_back({coeff, std::move(f)});
}

}  // namespace detail

/// J+- = (1/2) sum_j s^+-_j, J3 = (1/2) sum_j s^z_j in the chain's convention.
inline GeneratorSet<TensorOperator> chain_su2_generators(const ChainSpec& spec) {
  spec.validate();
  const auto c = spec.pauli;
  return GeneratorSet<TensorOperator>(
      "su2-chain-N" + std::to_string(spec.n_sites),
      {{"J+", detail::chain_sum(spec, pauli::plus(c), 0.5)},
       {"J-", detail::chain_sum(spec, pauli::minus(c), 0.5)},
       {"J3", detail::chain_sum(spec, pauli::z(c), 0.5)}});
}

/// J'+- = (1/2) sum_j q^{-sz} (x) ... (x) s^+-_j (x) q^{sz} (x) ..., J'3 = J3.
/// The exponent always uses the half-convention sz.
inline GeneratorSet<TensorOperator> chain_suq2_generators(const ChainSpec& spec, double gamma) {
  spec.validate();
  const auto c = spec.pauli;
  const SiteMatrix left = pauli::q_power_sz(gamma, -1.0);
  const SiteMatrix right = pauli::q_power_sz(gamma, 1.0);
  return GeneratorSet<TensorOperator>(
      "suq2-chain-N" + std::to_string(spec.n_sites),
      {{"J'+", detail::dressed_sum(spec, pauli::plus(c), left, right, 0.5)},
       {"J'-", detail::dressed_sum(spec, pauli::minus(c), left, right, 0.5)},
       {"J3", detail::chain_sum(spec, pauli::z(c), 0.5)}},
      gamma);
}

/// sum over bonds of s^x s^x + s^y s^y + s^z s^z.
inline TensorOperator h_xxx(const ChainSpec& spec) {
  spec.validate();
  const auto c = spec.pauli;
  std::vector<TensorTerm> terms;
  for (auto [i, j] : spec.bond_list()) {
    detail::append_bond(terms, spec.n_sites, i, j, pauli::x(c), 1.0);
    detail::append_bond(terms, spec.n_sites, i, j, pauli::y(c), 1.0);
    detail::append_bond(terms, spec.n_sites, i, j, pauli::z(c), 1.0);
  }
  return compress(TensorOperator(spec.n_sites, std::move(terms)));
}

/// sum over bonds of s^x s^x + s^y s^y + (q + q^-1)/2 s^z s^z
///   + sign (q - q^-1)/2 (s^z_1 - s^z_N).
inline TensorOperator h_q(const ChainSpec& spec, double gamma) {
  spec.validate();
  const auto c = spec.pauli;
  const double anisotropy = std::cosh(gamma);
  const double sign = spec.boundary == BoundarySign::as_written ? 1.0 : -1.0;
  const double field = sign * std::sinh(gamma);
  std::vector<TensorTerm> terms;
  for (auto [i, j] : spec.bond_list()) {
    detail::append_bond(terms, spec.n_sites, i, j, pauli::x(c), 1.0);
    detail::append_bond(terms, spec.n_sites, i, j, pauli::y(c), 1.0);
    detail::append_bond(terms, spec.n_sites, i, j, pauli::z(c), anisotropy);
  }
  const std::size_t last = spec.n_sites - 1;
  for (auto [site, s] : {std::pair{std::size_t{0}, 1.0}, std::pair{last, -1.0}}) {
    std::vector<SiteMatrix> f(spec.n_sites, SiteMatrix::Identity());
    f[site] = pauli::z(c);
    terms.push_back({s * field, std::move(f)});
  }
  return compress(TensorOperator(spec.n_sites, std::move(terms)));
}

}  // namespace qasym
