#include <cmath>
#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "qasym/io/number_format.hpp"
#include "qasym/io/report_json.hpp"
#include "qasym/io/sweep_csv.hpp"
#include "qasym/sweep.hpp"

using namespace qasym;

namespace {

SweepJob chain_job(std::size_t steps = 61) {
  SweepJob job;
  job.model = SweepModel::chain;
  for (ChainLength n : {ChainLength{3}, ChainLength{50}, ChainLength{}}) {
    ModelPoint p;
    p.model = SweepModel::chain;
    p.chain_n = n;
    job.points.push_back(p);
  }
  job.steps = steps;
  return job;
}

std::string to_csv(const SweepResult& r) {
  std::ostringstream os;
  io::write_sweep_csv(os, r.rows);
  return os.str();
}

}  // namespace

TEST(NumberFormat, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 12.0, -2.5e17, 1.8770438737926112}) {
    EXPECT_EQ(io::parse_double(io::format_double(v)), v);
  }
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(12.0), "12");
  EXPECT_TRUE(std::isnan(io::parse_double(io::format_double(std::nan("")))));
}

TEST(Sweep, ParamLabels) {
  ModelPoint p;
  EXPECT_EQ(p.param_label(), "-");
  p.model = SweepModel::fock;
  p.fock_m = 4;
  EXPECT_EQ(p.param_label(), "4");
  p.model = SweepModel::chain;
  EXPECT_EQ(p.param_label(), "inf");
  p.chain_n = 7;
  EXPECT_EQ(p.param_label(), "7");
}

TEST(Sweep, AutoBackendThreshold) {
  EXPECT_TRUE(use_dense(BackendChoice::automatic, 12));
  EXPECT_FALSE(use_dense(BackendChoice::automatic, 13));
  EXPECT_TRUE(use_dense(BackendChoice::dense, 20));
  EXPECT_FALSE(use_dense(BackendChoice::tensor, 2));
}

TEST(Sweep, JobValidation) {
  SweepJob job = chain_job();
  job.steps = 1;
  EXPECT_THROW(run_sweep(job), std::invalid_argument);
  job = chain_job();
  job.gamma_min = 1.0;
  job.gamma_max = 1.0;
  EXPECT_THROW(run_sweep(job), std::invalid_argument);
  job = chain_job();
  job.points.clear();
  EXPECT_THROW(run_sweep(job), std::invalid_argument);
}

TEST(Sweep, RowOrderAndBackends) {
  const auto r = run_sweep(chain_job(5));
  ASSERT_EQ(r.rows.size(), 15u);
  EXPECT_EQ(r.rows[0].param, "3");
  EXPECT_EQ(r.rows[0].backend, "dense");
  EXPECT_EQ(r.rows[5].param, "50");
  EXPECT_EQ(r.rows[5].backend, "tensor");
  EXPECT_EQ(r.rows[10].param, "inf");
  EXPECT_EQ(r.rows[10].backend, "closed-form");
  EXPECT_EQ(r.rows[0].gamma, -3.0);
  EXPECT_EQ(r.rows[4].gamma, 3.0);
  for (const auto& row : r.rows) EXPECT_EQ(row.model, "chain");
}

TEST(Sweep, ChainCurvesEvenAndIncreasing) {
  const auto r = run_sweep(chain_job(61));
  for (std::size_t c = 0; c < 3; ++c) {
    const auto* rows = &r.rows[c * 61];
    EXPECT_LT(std::abs(rows[30].asymmetry), 1e-12);  // gamma = 0
    for (std::size_t i = 0; i < 61; ++i) {
      EXPECT_GE(rows[i].asymmetry, 0.0);
      EXPECT_NEAR(rows[i].asymmetry, rows[60 - i].asymmetry, 1e-10);
    }
    for (std::size_t i = 31; i < 61; ++i) EXPECT_GT(rows[i].asymmetry, rows[i - 1].asymmetry);
  }
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  const auto one = to_csv(run_sweep(chain_job(21), 1));
  EXPECT_EQ(one, to_csv(run_sweep(chain_job(21), 4)));
  EXPECT_EQ(one, to_csv(run_sweep(chain_job(21), 64)));
}

TEST(Sweep, FockZeroIsNanWithFootnote) {
  SweepJob job;
  job.model = SweepModel::fock;
  ModelPoint p;
  p.model = SweepModel::fock;
  p.fock_m = 3;
  job.points = {p};
  job.gamma_min = -1.0;
  job.gamma_max = 1.0;
  job.steps = 5;
  const auto r = run_sweep(job, 2);
  ASSERT_EQ(r.rows.size(), 5u);
  EXPECT_TRUE(std::isnan(r.rows[2].asymmetry));
  EXPECT_EQ(r.footnotes.size(), 1u);
  EXPECT_FALSE(std::isnan(r.rows[1].asymmetry));
  const auto j = io::to_json(r);
  EXPECT_TRUE(j["rows"][2]["asymmetry"].is_null());
  EXPECT_EQ(j["footnotes"].size(), 1u);
}

TEST(Sweep, CsvRoundTrip) {
  const auto r = run_sweep(chain_job(13));
  std::istringstream in(to_csv(r));
  const auto back = io::read_sweep_csv(in);
  ASSERT_EQ(back.size(), r.rows.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i], r.rows[i]);
    EXPECT_NEAR(back[i].asymmetry, r.rows[i].asymmetry, 1e-15);
  }
}

TEST(Sweep, CsvHeader) {
  std::ostringstream os;
  io::write_sweep_csv(os, {});
  EXPECT_EQ(os.str(), "model,param,gamma,asymmetry,backend\n");
  std::istringstream bad("x,y\n");
  EXPECT_THROW(io::read_sweep_csv(bad), std::runtime_error);
}

TEST(Sweep, ThreadsFromEnvironment) {
  ::setenv("ASYM_THREADS", "3", 1);
  EXPECT_EQ(resolve_threads(0), 3u);
  EXPECT_EQ(resolve_threads(5), 5u);
  ::setenv("ASYM_THREADS", "junk", 1);
  EXPECT_EQ(resolve_threads(0), 1u);
  ::unsetenv("ASYM_THREADS");
  EXPECT_EQ(resolve_threads(0), 1u);
}

TEST(Sweep, ParallelForPropagatesErrors) {
  EXPECT_THROW(parallel_for(100, 4, [](std::size_t i) {
                 if (i == 37) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}
