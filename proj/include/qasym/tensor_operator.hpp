#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qasym/dense_operator.hpp"
#include "qasym/errors.hpp"
#include "qasym/scalar.hpp"
#include "qasym/site_matrix.hpp"

namespace qasym {

/// coeff * (factors[0] (x) factors[1] (x) ... (x) factors[N-1]).
/// Identity factors are stored explicitly.
struct TensorTerm {
  Scalar coeff{1.0, 0.0};
  std::vector<SiteMatrix> factors;
};

inline constexpr std::size_t kDefaultDenseCap = std::size_t{1} << 14;

/// Operator on an N-site spin-1/2 chain held as a sum of site-factored terms.
/// Inner products factorize over sites, so nothing of size 2^N is ever built
/// unless to_dense is requested.
class TensorOperator {
 public:
  TensorOperator() = default;

  explicit TensorOperator(std::size_t n_sites, std::vector<TensorTerm> terms = {})
      : n_sites_(n_sites), terms_(std::move(terms)) {
    if (n_sites_ == 0) throw std::invalid_argument("n_sites must be positive");
    for (const auto& t : terms_) {
      if (t.factors.size() != n_sites_) {
        throw DimensionMismatch("term has " + std::to_string(t.factors.size()) +
                                " factors, operator has " +
                                std::to_string(n_sites_) + " sites");
      }
    }
  }

  static TensorOperator identity(std::size_t n_sites) {
    return TensorOperator(
        n_sites, {TensorTerm{1.0, std::vector<SiteMatrix>(n_sites, SiteMatrix::Identity())}});
  }

  static TensorOperator zero(std::size_t n_sites) { return TensorOperator(n_sites); }

  /// coeff * I (x) ... (x) m_site (x) ... (x) I
  static TensorOperator site_operator(std::size_t n_sites, std::size_t site,
                                      const SiteMatrix& m, Scalar coeff = 1.0) {
    std::vector<SiteMatrix> f(n_sites, SiteMatrix::Identity());
    f.at(site) = m;
    return TensorOperator(n_sites, {TensorTerm{coeff, std::move(f)}});
  }

  /// coeff * a_i b_j (sites i != j)
  static TensorOperator two_site_operator(std::size_t n_sites, std::size_t i,
                                          const SiteMatrix& a, std::size_t j,
                                          const SiteMatrix& b, Scalar coeff = 1.0) {
    std::vector<SiteMatrix> f(n_sites, SiteMatrix::Identity());
    f.at(i) = a;
    f.at(j) = f.at(j) * b;
    return TensorOperator(n_sites, {TensorTerm{coeff, std::move(f)}});
  }

  std::size_t n_sites() const { return n_sites_; }
  const std::vector<TensorTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::size_t n_sites_ = 1;
  std::vector<TensorTerm> terms_;
};

namespace detail {

inline void require_same_sites(const TensorOperator& a, const TensorOperator& b,
                               const char* op) {
  if (a.n_sites() != b.n_sites()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.n_sites()) +
                            " sites vs " + std::to_string(b.n_sites()));
  }
}

inline bool factors_close(const std::vector<SiteMatrix>& a,
                          const std::vector<SiteMatrix>& b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] - b[i]).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

// Rescale each factor so its largest entry (first one, ties broken by index)
// is exactly 1, moving the scale into the coefficient. Returns false for a
// zero term.
inline bool canonicalize(TensorTerm& t) {
  for (auto& f : t.factors) {
    double max_abs = 0.0;
    for (Eigen::Index k = 0; k < 4; ++k) max_abs = std::max(max_abs, std::abs(f(k)));
    if (max_abs == 0.0) return false;
    Eigen::Index pivot = 0;
    while (std::abs(f(pivot)) < max_abs * (1.0 - 1e-12)) ++pivot;
    const Scalar p = f(pivot);
    if (p != Scalar(1.0)) {
      f /= p;
      f(pivot) = 1.0;
      t.coeff *= p;
    }
  }
  return true;
}

inline std::size_t quantized_hash(const std::vector<SiteMatrix>& factors) {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::int64_t v) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& f : factors) {
    for (Eigen::Index k = 0; k < 4; ++k) {
      mix(std::llround(f(k).real() * 1e9));
      mix(std::llround(f(k).imag() * 1e9));
    }
  }
  return h;
}

}  // namespace detail

inline constexpr double kFactorTolerance = 1e-12;
inline constexpr double kCoeffDropTolerance = 1e-15;

/// Merge terms whose factor lists are proportional and drop negligible terms.
/// Term order follows first occurrence, so the result is deterministic.
inline TensorOperator compress(const TensorOperator& t) {
  std::vector<TensorTerm> out;
  out.reserve(t.size());
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;
  for (TensorTerm term : t.terms()) {
    if (term.coeff == Scalar(0.0) || !detail::canonicalize(term)) continue;
    const std::size_t h = detail::quantized_hash(term.factors);
    auto& bucket = buckets[h];
    bool merged = false;
    for (std::size_t idx : bucket) {
      if (detail::factors_close(out[idx].factors, term.factors, kFactorTolerance)) {
        out[idx].coeff += term.coeff;
        merged = true;
        break;
      }
    }
    if (!merged) {
      bucket.push_back(out.size());
      out.push_back(std::move(term));
    }
  }
  std::erase_if(out, [](const TensorTerm& x) { return std::abs(x.coeff) < kCoeffDropTolerance; });
  return TensorOperator(t.n_sites(), std::move(out));
}

inline TensorOperator add(const TensorOperator& a, const TensorOperator& b) {
  detail::require_same_sites(a, b, "add");
  std::vector<TensorTerm> terms = a.terms();
  terms.insert(terms.end(), b.terms().begin(), b.terms().end());
  return compress(TensorOperator(a.n_sites(), std::move(terms)));
}

inline TensorOperator scale(const TensorOperator& a, Scalar s) {
  std::vector<TensorTerm> terms = a.terms();
  for (auto& t : terms) t.coeff *= s;
  return compress(TensorOperator(a.n_sites(), std::move(terms)));
}

inline TensorOperator subtract(const TensorOperator& a, const TensorOperator& b) {
  return add(a, scale(b, -1.0));
}

inline TensorOperator multiply(const TensorOperator& a, const TensorOperator& b) {
  detail::require_same_sites(a, b, "multiply");
  const std::size_t n = a.n_sites();
  std::vector<TensorTerm> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      TensorTerm p{ta.coeff * tb.coeff, std::vector<SiteMatrix>(n)};
      for (std::size_t i = 0; i < n; ++i) p.factors[i].noalias() = ta.factors[i] * tb.factors[i];
      terms.push_back(std::move(p));
    }
  }
  return compress(TensorOperator(n, std::move(terms)));
}

inline TensorOperator adjoint(const TensorOperator& a) {
  std::vector<TensorTerm> terms = a.terms();
  for (auto& t : terms) {
    t.coeff = std::conj(t.coeff);
    for (auto& f : t.factors) f = f.adjoint().eval();
  }
  return TensorOperator(a.n_sites(), std::move(terms));
}

namespace detail {

// Sites where a term's factor is not the identity, ascending.
inline std::vector<std::size_t> support(const TensorTerm& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.factors.size(); ++i)
    if (t.factors[i] != SiteMatrix::Identity()) out.push_back(i);
  return out;
}

inline std::vector<std::vector<std::size_t>> supports(const TensorOperator& t) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(t.size());
  for (const auto& term : t.terms()) out.push_back(support(term));
  return out;
}

// Ascending union of two ascending index lists.
inline void merge_support(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                          std::vector<std::size_t>& out) {
  out.clear();
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

inline bool overlaps(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

}  // namespace detail

/// ab - ba. Term pairs whose factors commute site by site contribute nothing
/// and are skipped; pairs with disjoint supports are skipped without forming
/// any product.
inline TensorOperator commutator(const TensorOperator& a, const TensorOperator& b) {
  detail::require_same_sites(a, b, "commutator");
  const std::size_t n = a.n_sites();
  const auto sa = detail::supports(a);
  const auto sb = detail::supports(b);
  std::vector<TensorTerm> terms;
  std::vector<std::size_t> sites;
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    const auto& ta = a.terms()[ia];
    for (std::size_t ib = 0; ib < b.size(); ++ib) {
      if (!detail::overlaps(sa[ia], sb[ib])) continue;
      const auto& tb = b.terms()[ib];
      detail::merge_support(sa[ia], sb[ib], sites);
      bool all_commute = true;
      for (std::size_t i : sites) {
        if (ta.factors[i] * tb.factors[i] != tb.factors[i] * ta.factors[i]) {
          all_commute = false;
          break;
        }
      }
      if (all_commute) continue;
      const Scalar c = ta.coeff * tb.coeff;
      TensorTerm ab{c, ta.factors};
      TensorTerm ba{-c, ta.factors};
      for (std::size_t i : sites) {
        ab.factors[i].noalias() = ta.factors[i] * tb.factors[i];
        ba.factors[i].noalias() = tb.factors[i] * ta.factors[i];
      }
      terms.push_back(std::move(ab));
      terms.push_back(std::move(ba));
    }
  }
  return compress(TensorOperator(n, std::move(terms)));
}

inline Scalar trace(const TensorOperator& a) {
  Scalar total = 0.0;
  for (const auto& t : a.terms()) {
    Scalar p = t.coeff;
    for (const auto& f : t.factors) p *= f.trace();
    total += p;
  }
  return total;
}

namespace detail {
// sum_{terms} conj(c_a) c_b prod_sites w tr(f_a^dagger f_b). Sites where both
// factors are the identity contribute (2w) each and are folded into one power.
inline Scalar factorized_inner(const TensorOperator& a, const TensorOperator& b,
                               double site_weight) {
  const auto sa = supports(a);
  const auto sb = supports(b);
  const auto n = static_cast<int>(a.n_sites());
  std::vector<std::size_t> sites;
  Scalar total = 0.0;
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    const auto& ta = a.terms()[ia];
    for (std::size_t ib = 0; ib < b.size(); ++ib) {
      const auto& tb = b.terms()[ib];
      merge_support(sa[ia], sb[ib], sites);
      Scalar p = std::conj(ta.coeff) * tb.coeff;
      for (std::size_t i : sites) {
        const Scalar s = (ta.factors[i].conjugate().cwiseProduct(tb.factors[i])).sum();
        if (s == Scalar(0.0)) {
          p = 0.0;
          break;
        }
        p *= s * site_weight;
      }
      if (p == Scalar(0.0)) continue;
      total += p * std::pow(2.0 * site_weight, n - static_cast<int>(sites.size()));
    }
  }
  return total;
}
}  // namespace detail

/// tr(a^dagger b) over the full 2^N space, computed as per-site trace products.
inline Scalar frobenius_inner(const TensorOperator& a, const TensorOperator& b) {
  detail::require_same_sites(a, b, "frobenius_inner");
  return detail::factorized_inner(a, b, 1.0);
}

/// tr(a^dagger b) / 2^N. Stays O(1) in magnitude for long chains.
inline Scalar normalized_inner(const TensorOperator& a, const TensorOperator& b) {
  detail::require_same_sites(a, b, "normalized_inner");
  return detail::factorized_inner(a, b, 0.5);
}

inline double frobenius_norm_sq(const TensorOperator& a) {
  return frobenius_inner(a, a).real();
}

inline double hilbert_dimension(const TensorOperator& a) {
  return std::ldexp(1.0, static_cast<int>(a.n_sites()));
}

inline TensorOperator identity_like(const TensorOperator& a) {
  return TensorOperator::identity(a.n_sites());
}

inline TensorOperator traceless(const TensorOperator& a) {
  // tr(a)/2^N as a product of normalized per-site traces
  Scalar mean = 0.0;
  for (const auto& t : a.terms()) {
    Scalar p = t.coeff;
    for (const auto& f : t.factors) p *= 0.5 * f.trace();
    mean += p;
  }
  std::vector<TensorTerm> terms = a.terms();
  terms.push_back(TensorTerm{-mean, std::vector<SiteMatrix>(a.n_sites(), SiteMatrix::Identity())});
  return compress(TensorOperator(a.n_sites(), std::move(terms)));
}

inline bool same_shape(const TensorOperator& a, const TensorOperator& b) {
  return a.n_sites() == b.n_sites();
}

inline bool is_finite(const TensorOperator& a) {
  for (const auto& t : a.terms()) {
    if (!is_finite(t.coeff)) return false;
    for (const auto& f : t.factors)
      if (!f.allFinite()) return false;
  }
  return true;
}

/// Sum of coeff * kron(factors). Throws when 2^N exceeds `cap`.
inline DenseOperator to_dense(const TensorOperator& t, std::size_t cap = kDefaultDenseCap) {
  const std::size_t n = t.n_sites();
  if (n >= 63 || (std::size_t{1} << n) > cap) {
    throw DimensionCapExceeded("to_dense: 2^" + std::to_string(n) +
                               " exceeds cap " + std::to_string(cap));
  }
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseMatrix out = DenseMatrix::Zero(d, d);
  for (const auto& term : t.terms()) {
    DenseMatrix acc(1, 1);
    acc(0, 0) = term.coeff;
    for (const auto& f : term.factors) {
      DenseMatrix next(acc.rows() * 2, acc.cols() * 2);
      for (Eigen::Index i = 0; i < acc.rows(); ++i)
        for (Eigen::Index j = 0; j < acc.cols(); ++j)
          next.block<2, 2>(2 * i, 2 * j) = acc(i, j) * f;
      acc = std::move(next);
    }
    out += acc;
  }
  return DenseOperator(std::move(out));
}

}  // namespace qasym
