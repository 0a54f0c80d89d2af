#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qasym/asymmetry.hpp"
#include "qasym/closed_forms.hpp"
#include "qasym/models/convention.hpp"
#include "qasym/verify.hpp"

using namespace qasym;

namespace {

const std::vector<double> kSignedGrid = {-3.0, -2.0, -1.0, -0.5, -0.25, 0.25, 0.5, 1.0, 2.0, 3.0};

double dense_chain(const ChainSpec& spec, double g) {
  return asymmetry(to_dense(chain_su2_generators(spec)), to_dense(h_q(spec, g))).total;
}

}  // namespace

// ---- Fock -------------------------------------------------------------------

TEST(CfFock, CorrectedIsTwelveForM2) {
  for (double g : kSignedGrid) EXPECT_NEAR(cf_fock(2, g, Variant::corrected), 12.0, 12.0 * 1e-9) << g;
}

TEST(CfFock, CorrectedNormTermHandAlgebra) {
  // R_corr = 8 (cosh g - 1)^2 / 3 for M = 2
  for (double g : {0.5, 1.0, 2.0}) {
    const double c = std::cosh(g) - 1.0;
    EXPECT_NEAR(cf_fock_norm_term(2, g, Variant::corrected), 8.0 * c * c / 3.0, 1e-12 * (1.0 + c * c));
  }
}

TEST(CfFock, AsWrittenNormGoesNegative) {
  EXPECT_NEAR(cf_fock_norm_term(2, 1e-6, Variant::as_written), -4.0, 1e-9);
  EXPECT_LT(cf_fock_norm_term(2, 0.25, Variant::as_written), 0.0);
  EXPECT_LT(cf_fock(2, 0.25, Variant::as_written), 0.0);
}

TEST(CfFock, CorrectedMatchesOracleUpToM6) {
  for (int m = 2; m <= 6; ++m)
    for (double g : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
      const FockSubspaceSpec spec{m};
      const double oracle = asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, g)).total;
      EXPECT_NEAR(cf_fock(m, g, Variant::corrected), oracle, 1e-9 * oracle) << "M=" << m << " gamma=" << g;
    }
}

TEST(CfFock, AsWrittenDisagreesWithOracle) {
  const auto rep = verify(FockModel{2}, default_verify_grid());
  EXPECT_FALSE(rep.as_written.matches);
  EXPECT_TRUE(rep.corrected.matches);
  for (double v : rep.oracle) EXPECT_NEAR(v, 12.0, 1e-9);
}

TEST(CfFock, Preconditions) {
  EXPECT_THROW(cf_fock(1, 1.0, Variant::corrected), std::invalid_argument);
  EXPECT_THROW(cf_fock(3, 0.0, Variant::as_written), std::invalid_argument);
}

// ---- Casimir ----------------------------------------------------------------

TEST(CfCasimir, Values) {
  EXPECT_EQ(cf_casimir(0.0), 0.0);
  EXPECT_NEAR(cf_casimir(1.0), 1.8770438737926112, 1e-14);
}

TEST(CfCasimir, MatchesOracleOn101Points) {
  const auto grid = linspace(-5.0, 5.0, 101);
  for (double g : grid) {
    EXPECT_NEAR(asymmetry(coproduct_su2(), qcasimir_matrix(g)).total, cf_casimir(g), 1e-10) << g;
  }
}

TEST(CfCasimir, MonotoneAndBounded) {
  double prev = 0.0;
  for (double g = 0.05; g <= 30.0; g += 0.05) {
    const double v = cf_casimir(g);
    EXPECT_GE(v, prev);
    EXPECT_LT(v, 16.0 / 3.0);
    prev = v;
  }
  EXPECT_NEAR(cf_casimir(40.0), 16.0 / 3.0, 1e-12);
}

// ---- chain ------------------------------------------------------------------

TEST(CfChain, ZeroAtGammaZero) {
  for (std::size_t n : {2u, 3u, 10u, 1000u})
    for (auto v : {Variant::as_written, Variant::corrected}) EXPECT_EQ(cf_chain(n, 0.0, v), 0.0);
  EXPECT_EQ(cf_chain(std::nullopt, 0.0, Variant::as_written), 0.0);
  EXPECT_EQ(cf_chain(std::nullopt, 0.0, Variant::corrected), 0.0);
}

TEST(CfChain, LimitValue) {
  EXPECT_NEAR(cf_chain(std::nullopt, 2.0, Variant::as_written), 0.4723084097212235, 1e-14);
  const double c = std::cosh(2.0);
  EXPECT_NEAR(cf_chain(std::nullopt, 2.0, Variant::as_written), (c - 1) * (c - 1) / (c * c + 2), 1e-15);
}

TEST(CfChain, LimitMatchesLargeN) {
  for (auto v : {Variant::as_written, Variant::corrected})
    for (double g : linspace(-3.0, 3.0, 25)) {
      EXPECT_NEAR(cf_chain(std::size_t{10000}, g, v), cf_chain(std::nullopt, g, v), 1e-3) << g;
    }
}

TEST(CfChain, ConvergesAsOneOverN) {
  for (auto v : {Variant::as_written, Variant::corrected})
    for (double g : {0.5, 1.0, 3.0}) {
      const double inf = cf_chain(std::nullopt, g, v);
      const double c3 = 1e3 * std::abs(cf_chain(std::size_t{1000}, g, v) - inf);
      const double c4 = 1e4 * std::abs(cf_chain(std::size_t{10000}, g, v) - inf);
      EXPECT_NEAR(c4, c3, 0.05 * c3) << g;
      for (std::size_t n : {10u, 50u, 100u, 5000u})
        EXPECT_LE(std::abs(cf_chain(n, g, v) - inf), 2.0 * c4 / static_cast<double>(n));
    }
}

TEST(CfChain, MonotoneInN) {
  for (auto v : {Variant::as_written, Variant::corrected})
    for (double g : {0.5, 1.0, 2.0, 3.0}) {
      const double a3 = cf_chain(std::size_t{3}, g, v);
      const double a50 = cf_chain(std::size_t{50}, g, v);
      const double ainf = cf_chain(std::nullopt, g, v);
      EXPECT_GE((a3 - a50) * (a50 - ainf), 0.0) << g;
    }
}

TEST(CfChain, CorrectedMatchesOracleForEveryConvention) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& spec : convention_grid(n))
      for (double g : {0.25, 1.0, 2.7}) {
        const double oracle = dense_chain(spec, g);
        EXPECT_NEAR(cf_chain(n, g, Variant::corrected, spec), oracle, 1e-9 * oracle)
            << spec.label() << " N=" << n << " gamma=" << g;
      }
}

TEST(CfChain, HalfPeriodicIsTwiceAsWritten) {
  const ChainSpec spec{5, PauliConvention::half, BondConvention::periodic, BoundarySign::as_written};
  const auto rep = verify(ChainModel{spec}, default_verify_grid());
  EXPECT_TRUE(rep.corrected.matches);
  EXPECT_NEAR(rep.as_written.fit.ratio, 2.0, 1e-12);
  EXPECT_LT(rep.as_written.fit.residual, 1e-12);
}

TEST(CfChain, ResolvedConventionRatioIsNotConstant) {
  const auto rep = verify(ChainModel{resolved_chain_spec(4)}, default_verify_grid());
  EXPECT_TRUE(rep.corrected.matches);
  EXPECT_FALSE(rep.as_written.matches);
  EXPECT_TRUE(std::isfinite(rep.as_written.fit.ratio));
  EXPECT_GT(rep.as_written.fit.residual, 1e-3);
}

// ---- shared properties ------------------------------------------------------

TEST(ClosedForms, EvenInGamma) {
  for (double g = 0.25; g <= 5.0; g += 0.25)
    for (auto v : {Variant::as_written, Variant::corrected}) {
      EXPECT_EQ(cf_casimir(g, v), cf_casimir(-g, v));
      for (int m = 2; m <= 5; ++m) EXPECT_NEAR(cf_fock(m, g, v), cf_fock(m, -g, v), 1e-10 * std::abs(cf_fock(m, g, v)));
      for (std::size_t n : {2u, 3u, 50u}) EXPECT_EQ(cf_chain(n, g, v), cf_chain(n, -g, v));
      EXPECT_EQ(cf_chain(std::nullopt, g, v), cf_chain(std::nullopt, -g, v));
    }
}

TEST(ClosedForms, DescribeListsCorrections) {
  EXPECT_TRUE(describe(ClosedFormModel::fock, Variant::as_written).corrections.empty());
  EXPECT_EQ(describe(ClosedFormModel::fock, Variant::corrected).corrections.size(), 2u);
  EXPECT_TRUE(describe(ClosedFormModel::casimir, Variant::corrected).corrections.empty());
  EXPECT_FALSE(describe(ClosedFormModel::chain, Variant::corrected).corrections.empty());
}

// ---- verify -----------------------------------------------------------------

TEST(Verify, CasimirConfirmed) {
  const auto rep = verify(CasimirModel{}, default_verify_grid());
  EXPECT_EQ(rep.model, "casimir");
  EXPECT_LT(rep.as_written.max_abs_diff, 1e-10);
  EXPECT_TRUE(rep.as_written.matches);
  EXPECT_NEAR(rep.as_written.fit.ratio, 1.0, 1e-12);
}

TEST(Verify, ChainN4Resolved) {
  const auto rep = verify(ChainModel{resolved_chain_spec(4)}, default_verify_grid());
  EXPECT_EQ(rep.params.at("convention"), "full/open/reflected");
  EXPECT_LT(rep.corrected.max_rel_diff, 1e-9);
  EXPECT_EQ(rep.oracle.size(), 24u);
  EXPECT_EQ(rep.as_written.values.size(), 24u);
}

TEST(Verify, GridAndFit) {
  const auto grid = default_verify_grid();
  EXPECT_EQ(grid.size(), 24u);
  EXPECT_EQ(grid.front(), 0.25);
  EXPECT_EQ(grid.back(), 3.0);
  const auto fit = fit_constant_ratio({2.0, 4.0, 6.0}, {1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(fit.ratio, 2.0);
  EXPECT_NEAR(fit.residual, 0.0, 1e-15);
}

TEST(Verify, SizeLimits) {
  EXPECT_THROW(verify(FockModel{9}, {1.0}), std::invalid_argument);
  EXPECT_THROW(verify(ChainModel{resolved_chain_spec(11)}, {1.0}), std::invalid_argument);
}

TEST(Verify, ScalarPropagatesForFockAtZero) {
  EXPECT_THROW(verify(FockModel{3}, {0.0, 1.0}), ScalarOperatorError);
}
