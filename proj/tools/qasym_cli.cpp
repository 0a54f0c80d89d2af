// qasym: asymmetry degrees, gamma sweeps, closed-form verification, deformed
// sphere meshes and tensor-backend timings from the command line.
//
// Exit codes: 0 ok, 2 usage, 3 scalar-degenerate operator, 4 I/O,
// 5 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qasym/bench.hpp"
#include "qasym/io/mesh_io.hpp"
#include "qasym/io/report_json.hpp"
#include "qasym/io/sweep_csv.hpp"
#include "qasym/qasym.hpp"
#include "qasym/sweep.hpp"

namespace {

using namespace qasym;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 2, kScalar = 3, kIo = 4, kVerifyFailed = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string model = "casimir";
  std::string m_values = "2";
  std::string n_values = "4";
  std::string backend = "auto";
  std::string pauli = "full";
  std::string bonds = "open";
  std::string boundary = "reflected";
  std::string variant = "corrected";
  double tol = kSymmetryTolerance;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("empty list '" + s + "'");
  return out;
}

int parse_positive_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size() || v < 1) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + " '" + s + "'");
  }
}

SweepModel parse_model(const std::string& s) {
  if (s == "fock") return SweepModel::fock;
  if (s == "casimir") return SweepModel::casimir;
  if (s == "chain") return SweepModel::chain;
  if (s == "chain-inf") return SweepModel::chain_inf;
  throw UsageError("unknown model '" + s + "'");
}

ChainSpec parse_convention(const CommonOptions& o) {
  ChainSpec spec;
  spec.pauli = o.pauli == "half" ? PauliConvention::half : PauliConvention::full;
  spec.bonds = o.bonds == "periodic" ? BondConvention::periodic : BondConvention::open;
  spec.boundary = o.boundary == "as-written" ? BoundarySign::as_written : BoundarySign::reflected;
  return spec;
}

ModelPoint base_point(const CommonOptions& o) {
  ModelPoint p;
  p.model = parse_model(o.model);
  p.conv = parse_convention(o);
  p.backend = o.backend == "dense"    ? BackendChoice::dense
              : o.backend == "tensor" ? BackendChoice::tensor
                                      : BackendChoice::automatic;
  p.variant = o.variant == "as-written" ? Variant::as_written : Variant::corrected;
  return p;
}

/// One ModelPoint per listed parameter value.
std::vector<ModelPoint> expand_points(const CommonOptions& o) {
  const ModelPoint base = base_point(o);
  std::vector<ModelPoint> out;
  switch (base.model) {
    case SweepModel::fock:
      for (const auto& m : split_list(o.m_values)) {
        ModelPoint p = base;
        p.fock_m = parse_positive_int(m, "M");
        out.push_back(p);
      }
      break;
    case SweepModel::casimir:
    case SweepModel::chain_inf:
      out.push_back(base);
      break;
    case SweepModel::chain:
      for (const auto& n : split_list(o.n_values)) {
        ModelPoint p = base;
        if (n == "inf") {
          p.chain_n = std::nullopt;
        } else {
          const int v = parse_positive_int(n, "N");
          if (v < 2) throw UsageError("chain needs N >= 2");
          p.chain_n = static_cast<std::size_t>(v);
        }
        out.push_back(p);
      }
      break;
  }
  return out;
}

void add_model_options(CLI::App* cmd, CommonOptions& o, bool lists) {
  cmd->add_option("--model", o.model, "fock | casimir | chain | chain-inf")
      ->check(CLI::IsMember({"fock", "casimir", "chain", "chain-inf"}));
  cmd->add_option("--M", o.m_values, lists ? "Fock excitation numbers, comma separated" : "Fock excitation number");
  cmd->add_option("--N", o.n_values, lists ? "chain lengths, comma separated; 'inf' for the limit" : "chain length or 'inf'");
  cmd->add_option("--backend", o.backend, "dense | tensor | auto")->check(CLI::IsMember({"dense", "tensor", "auto"}));
  cmd->add_option("--pauli", o.pauli, "half | full")->check(CLI::IsMember({"half", "full"}));
  cmd->add_option("--bonds", o.bonds, "open | periodic")->check(CLI::IsMember({"open", "periodic"}));
  cmd->add_option("--boundary", o.boundary, "as-written | reflected boundary field sign")
      ->check(CLI::IsMember({"as-written", "reflected"}));
  cmd->add_option("--variant", o.variant, "closed-form variant for N = inf: as-written | corrected")
      ->check(CLI::IsMember({"as-written", "corrected"}));
}

/// Opens `path` for writing, or returns nullptr for stdout when empty.
std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*f) throw IoError("cannot open '" + path + "' for writing");
  return f;
}

void finish(std::ofstream* f, const std::string& path) {
  if (!f) {
    std::cout.flush();
    return;
  }
  f->flush();
  if (!*f) throw IoError("write to '" + path + "' failed");
}

// ---- compute ---------------------------------------------------------------

int cmd_compute(const CommonOptions& o, double gamma) {
  const auto points = expand_points(o);
  if (points.size() != 1) throw UsageError("compute takes a single M or N");
  const ModelPoint& p = points.front();
  const PointResult r = evaluate_point(p, gamma);

  json params = json::object();
  if (p.model == SweepModel::fock) params["M"] = p.fock_m;
  if (p.model == SweepModel::chain || p.model == SweepModel::chain_inf) {
    params["N"] = p.param_label();
    if (!p.chain_n || p.model == SweepModel::chain_inf) params["variant"] = std::string(to_string(p.variant));
  }
  json out = {{"model", o.model},
              {"params", params},
              {"gamma", gamma},
              {"value", r.value},
              {"backend", r.backend},
              {"convention", p.model == SweepModel::chain || p.model == SweepModel::chain_inf
                                 ? json(p.conv.label())
                                 : json(nullptr)}};
  if (r.report) {
    const json rep = io::to_json(*r.report);
    out["per_generator"] = rep["per_generator"];
    out["norm_sq_traceless"] = r.report->norm_sq_traceless;
    out["hermitian_input"] = r.report->hermitian_input;
    double max_norm = 0.0;
    for (const auto& [label, n2] : r.report->per_generator) max_norm = std::max(max_norm, std::sqrt(n2));
    out["symmetric"] = max_norm <= o.tol;
  } else {
    out["per_generator"] = json::array();
    out["norm_sq_traceless"] = nullptr;
  }
  std::cout << out.dump(2) << '\n';
  return kOk;
}

// ---- sweep -----------------------------------------------------------------

int cmd_sweep(const CommonOptions& o, double gmin, double gmax, std::size_t steps, const std::string& format,
              const std::string& out_path, std::size_t threads) {
  SweepJob job;
  job.model = parse_model(o.model);
  job.points = expand_points(o);
  job.gamma_min = gmin;
  job.gamma_max = gmax;
  job.steps = steps;
  try {
    job.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format != "csv" && format != "json") throw UsageError("sweep format must be csv or json");
  auto file = open_out(out_path);
  const SweepResult result = run_sweep(job, resolve_threads(threads));
  std::ostream& os = file ? *file : std::cout;
  if (format == "csv") {
    io::write_sweep_csv(os, result.rows);
  } else {
    os << io::to_json(result).dump(2) << '\n';
  }
  finish(file.get(), out_path);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyCase {
  std::string name;
  VerifiableModel model;
  bool require_as_written = false;  // casimir: the as-written formula must hold
};

int cmd_verify(const std::string& out_path, double rel_tol) {
  std::vector<VerifyCase> cases;
  cases.push_back({"casimir", CasimirModel{}, true});
  for (int m = 2; m <= 6; ++m) cases.push_back({"fock M=" + std::to_string(m), FockModel{m}});
  for (std::size_t n = 3; n <= 6; ++n) {
    cases.push_back({"chain N=" + std::to_string(n) + " " + resolved_chain_spec(n).label(),
                     ChainModel{resolved_chain_spec(n)}});
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    const ChainSpec spec{n, PauliConvention::half, BondConvention::periodic, BoundarySign::as_written};
    cases.push_back({"chain N=" + std::to_string(n) + " " + spec.label(), ChainModel{spec}});
  }

  const auto grid = default_verify_grid();
  json reports = json::array();
  bool ok = true;
  std::cout << "closed-form verification, gamma in [0.25, 3], " << grid.size() << " points, rel tol "
            << io::format_double(rel_tol) << "\n";
  for (const auto& c : cases) {
    const DiscrepancyReport rep = verify(c.model, grid, rel_tol);
    const bool pass = rep.corrected.matches && (!c.require_as_written || rep.as_written.matches);
    ok = ok && pass;
    json j = io::to_json(rep);
    j["case"] = c.name;
    j["pass"] = pass;
    reports.push_back(std::move(j));
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << ": corrected max rel diff "
              << io::format_double(rep.corrected.max_rel_diff) << "; as-written "
              << (rep.as_written.matches ? "matches" : "deviates") << " (max rel diff "
              << io::format_double(rep.as_written.max_rel_diff) << ", oracle/as-written ratio "
              << io::format_double(rep.as_written.fit.ratio) << ", residual "
              << io::format_double(rep.as_written.fit.residual) << ")\n";
  }
  const ConventionReport conv = resolve_convention(4, 1.0);
  json doc = {{"tolerance", rel_tol}, {"reports", reports}, {"convention_search", io::to_json(conv)}, {"pass", ok}};
  auto file = open_out(out_path);
  if (file) {
    *file << doc.dump(2) << '\n';
    finish(file.get(), out_path);
    std::cout << "report written to " << out_path << "\n";
  }
  std::cout << (ok ? "all corrected variants match the oracle\n" : "verification FAILED\n");
  return ok ? kOk : kVerifyFailed;
}

// ---- mesh ------------------------------------------------------------------

int cmd_mesh(double gamma, double radius, const std::string& res, const std::string& format,
             const std::string& out_path) {
  const auto parts = split_list(res);
  if (parts.size() != 2) throw UsageError("--res expects NZ,NPHI");
  SurfaceSpec spec{gamma, radius, static_cast<std::size_t>(parse_positive_int(parts[0], "n_z")),
                   static_cast<std::size_t>(parse_positive_int(parts[1], "n_phi"))};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (format != "obj" && format != "csv") throw UsageError("mesh format must be obj or csv");
  auto file = open_out(out_path);
  const Mesh mesh = deformed_sphere_mesh(spec);
  std::ostream& os = file ? *file : std::cout;
  if (format == "obj") {
    io::write_obj(os, mesh, spec);
  } else {
    io::write_point_cloud_csv(os, mesh);
  }
  finish(file.get(), out_path);
  return kOk;
}

// ---- bench -----------------------------------------------------------------

int cmd_bench(const std::string& sizes, double gamma, double limit_seconds) {
  std::vector<std::size_t> ns;
  for (const auto& s : split_list(sizes)) {
    const int v = parse_positive_int(s, "N");
    if (v < 2) throw UsageError("chain needs N >= 2");
    ns.push_back(static_cast<std::size_t>(v));
  }
  const auto rows = bench_tensor_chain(ns, gamma);
  std::cout << "N,gamma,seconds,asymmetry,hamiltonian_terms\n";
  bool ok = true;
  for (const auto& r : rows) {
    std::cout << r.n_sites << ',' << io::format_double(r.gamma) << ',' << io::format_double(r.seconds) << ','
              << io::format_double(r.value) << ',' << r.hamiltonian_terms << '\n';
    if (r.n_sites == 100 && r.seconds >= limit_seconds) {
      std::cerr << "tensor backend took " << r.seconds << " s at N = 100 (limit " << limit_seconds << " s)\n";
      ok = false;
    }
    if (r.n_sites <= 10) {
      const ChainSpec spec = resolved_chain_spec(r.n_sites);
      const double dense = asymmetry(to_dense(chain_su2_generators(spec)), to_dense(h_q(spec, gamma))).total;
      const double rel = std::abs(dense - r.value) / std::max(std::abs(dense), 1e-300);
      std::cerr << "N = " << r.n_sites << ": tensor vs dense relative difference " << io::format_double(rel) << "\n";
      if (rel >= 1e-10) ok = false;
    }
  }
  return ok ? kOk : kVerifyFailed;
}

// ---- models ----------------------------------------------------------------

int cmd_models() {
  std::cout << "fock       deformed oscillator H' on the (M+1)-dim Fock subspace vs su(2)   params: --M\n"
               "casimir    q-deformed two-spin Casimir vs su(2) co-product                 params: none\n"
               "chain      deformed XXZ chain with boundary field vs chain su(2)            params: --N (list, 'inf')\n"
               "chain-inf  N -> infinity closed form of the chain model                    params: --variant\n"
               "resolved chain convention: "
            << resolved_chain_spec(2).label() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic asymmetry degree of operators with respect to su(2) generator sets"};
  app.require_subcommand(1);

  CommonOptions compute_opts;
  double compute_gamma = 1.0;
  auto* compute = app.add_subcommand("compute", "asymmetry of one model at one gamma (JSON on stdout)");
  add_model_options(compute, compute_opts, false);
  compute->add_option("--gamma", compute_gamma, "deformation gamma = log q");
  compute->add_option("--tol", compute_opts.tol, "symmetry tolerance on ||[H, X]||");

  CommonOptions sweep_opts;
  double gmin = -3.0, gmax = 3.0;
  std::size_t steps = 61, threads = 0;
  std::string sweep_format = "csv", sweep_out;
  auto* sweep = app.add_subcommand("sweep", "gamma sweep to CSV or JSON");
  add_model_options(sweep, sweep_opts, true);
  sweep->add_option("--gamma-min", gmin);
  sweep->add_option("--gamma-max", gmax);
  sweep->add_option("--steps", steps, "grid points, endpoints included");
  sweep->add_option("--format", sweep_format, "csv | json");
  sweep->add_option("--out", sweep_out, "output path (stdout if omitted)");
  sweep->add_option("--threads", threads, "worker threads (default: ASYM_THREADS or 1)");

  std::string verify_out = "verify_report.json";
  double verify_tol = kVerifyRelTolerance;
  auto* verify_cmd = app.add_subcommand("verify", "compare closed forms against the matrix oracle");
  verify_cmd->add_option("--out", verify_out, "JSON report path ('-' for none)");
  verify_cmd->add_option("--tol", verify_tol, "relative tolerance for corrected variants");

  double mesh_gamma = 0.0, mesh_radius = 1.0;
  std::string mesh_res = "32,64", mesh_format = "obj", mesh_out;
  auto* mesh = app.add_subcommand("mesh", "deformed sphere mesh");
  mesh->add_option("--gamma", mesh_gamma);
  mesh->add_option("--radius", mesh_radius);
  mesh->add_option("--res", mesh_res, "NZ,NPHI");
  mesh->add_option("--format", mesh_format, "obj | csv");
  mesh->add_option("--out", mesh_out, "output path (stdout if omitted)");

  std::string bench_sizes = "10,50,100,200";
  double bench_gamma = 1.0, bench_limit = 10.0;
  auto* bench = app.add_subcommand("bench", "tensor-backend timings for long chains");
  bench->add_option("--N", bench_sizes, "chain lengths, comma separated");
  bench->add_option("--gamma", bench_gamma);
  bench->add_option("--limit", bench_limit, "seconds allowed at N = 100");

  auto* models = app.add_subcommand("models", "list built-in models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(compute_opts, compute_gamma);
    if (*sweep) return cmd_sweep(sweep_opts, gmin, gmax, steps, sweep_format, sweep_out, threads);
    if (*verify_cmd) return cmd_verify(verify_out, verify_tol);
    if (*mesh) return cmd_mesh(mesh_gamma, mesh_radius, mesh_res, mesh_format, mesh_out);
    if (*bench) return cmd_bench(bench_sizes, bench_gamma, bench_limit);
    if (*models) return cmd_models();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScalarOperatorError& e) {
    std::cerr << "error: scalar-degenerate operator (H' is proportional to the identity on the M = 1 "
                 "subspace or at q = 1): "
              << e.what() << "\n";
    return kScalar;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const DimensionCapExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --backend tensor)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
