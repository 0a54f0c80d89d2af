#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qasym/errors.hpp"
#include "qasym/operator.hpp"

namespace qasym {

template <OperatorBackend Op>
struct NamedOperator {
  std::string label;
  Op op;
};

/// A concrete representation {X_j} of an algebra basis.
template <OperatorBackend Op>
class GeneratorSet {
 public:
  GeneratorSet(std::string name, std::vector<NamedOperator<Op>> gens, double gamma = 0.0)
      : name_(std::move(name)), gens_(std::move(gens)), gamma_(gamma) {
    if (gens_.empty()) throw std::invalid_argument("generator set '" + name_ + "' is empty");
    for (const auto& g : gens_) {
      if (!same_shape(g.op, gens_.front().op)) {
        throw DimensionMismatch("generator '" + g.label + "' in set '" + name_ + "'");
      }
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<NamedOperator<Op>>& generators() const { return gens_; }
  double gamma() const { return gamma_; }
  double dim() const { return hilbert_dimension(gens_.front().op); }
  std::size_t size() const { return gens_.size(); }

  const Op& at(const std::string& label) const {
    for (const auto& g : gens_)
      if (g.label == label) return g.op;
    throw std::out_of_range("no generator '" + label + "' in set '" + name_ + "'");
  }

  template <class F>
  auto transform(F&& f) const {
    using Out = decltype(f(gens_.front().op));
    std::vector<NamedOperator<Out>> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) out.push_back({g.label, f(g.op)});
    return GeneratorSet<Out>(name_, std::move(out), gamma_);
  }

 private:
  std::string name_;
  std::vector<NamedOperator<Op>> gens_;
  double gamma_;
};

inline GeneratorSet<DenseOperator> to_dense(const GeneratorSet<TensorOperator>& g,
                                            std::size_t cap = kDefaultDenseCap) {
  return g.transform([cap](const TensorOperator& t) { return to_dense(t, cap); });
}

}  // namespace qasym
