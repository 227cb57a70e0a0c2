// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: solve LPCC1 files, generate instance families,
// and sweep benchmark manifests into CSV tables.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpcc/bench.hpp"
#include "lpcc/generators.hpp"

namespace {

using namespace lpcc;

int log_level() {
  const char* v = std::getenv("LPCC_LOG");
  return v ? std::atoi(v) : 0;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct SolveFlags {
  std::string path;
  double gap = 1e-6;
  double comp_tol = 1e-6;
  double time_limit = 3600.0;
  long node_limit = 0;
  int strong_depth = 7;
  std::string weights = "1,0.5,0.25,0.5";
  int recovery_depth = 5;
  int recovery_breadth = 0;  // 0 selects the number of pairs
  bool no_cuts = false;
  bool no_recovery = false;
  int disj_rounds = -1;
  int disj_per_round = 3;
  int simple_rounds = -1;
  int bound_passes = 4;
  int bound_pairs = 5;
  bool json_line = false;
};

SolverParams to_params(const SolveFlags& f) {
  SolverParams p;
  p.rel_gap = f.gap;
  p.comp_tol = f.comp_tol;
  p.time_limit = f.time_limit;
  p.node_limit = f.node_limit;
  p.weights.strong_depth = f.strong_depth;
  int used = 0;
  const int got = std::sscanf(f.weights.c_str(), "%lf,%lf,%lf,%lf%n",
                              &p.weights.violation, &p.weights.scaled,
                              &p.weights.pseudocost, &p.weights.satisfaction,
                              &used);
  if (got != 4 || f.weights[used] != '\0') {
    throw CLI::ValidationError("--weights wants four comma-separated numbers");
  }
  p.preprocess.comp_tol = f.comp_tol;
  p.preprocess.recovery.depth = f.recovery_depth;
  p.preprocess.recovery.breadth = f.recovery_breadth;
  p.preprocess.use_cuts = !f.no_cuts;
  p.preprocess.use_recovery = !f.no_recovery;
  p.preprocess.disj_rounds = f.disj_rounds;
  p.preprocess.disj_per_round = f.disj_per_round;
  p.preprocess.simple_rounds = f.simple_rounds;
  p.preprocess.bound_passes = f.bound_passes;
  p.preprocess.bound_pairs = f.bound_pairs;
  return p;
}

int cmd_solve(const SolveFlags& flags) {
  LpccInstance inst;
  try {
    inst = read_instance(flags.path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (log_level() >= 1) {
    std::cerr << "solving " << flags.path << " (n=" << inst.n
              << " m=" << inst.m << " k=" << inst.k << ")\n";
  }
  SolveReport rep;
  try {
    rep = solve_lpcc(inst, to_params(flags));
  } catch (const CLI::Error&) {
    throw;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (flags.json_line) {
    nlohmann::ordered_json line;
    line["status"] = status_name(rep.status);
    line["obj"] = rep.upper_bound;
    line["lb"] = rep.lower_bound;
    line["ub"] = rep.upper_bound;
    line["gap"] = rep.gap;
    line["nodes"] = rep.nodes;
    line["lp_solves"] = rep.lp_solves;
    line["cuts_simple"] = rep.cuts_simple;
    line["cuts_disj"] = rep.cuts_disjunctive;
    line["cuts_bound"] = rep.cuts_bound;
    line["t_preprocess"] = rep.preprocess_seconds;
    line["t_total"] = rep.total_seconds;
    std::cout << line.dump() << "\n";
  } else {
    std::cout << status_name(rep.status) << " obj=" << fmt(rep.upper_bound)
              << " lb=" << fmt(rep.lower_bound)
              << " ub=" << fmt(rep.upper_bound) << " gap=" << fmt(rep.gap)
              << " nodes=" << rep.nodes << "\n"
              << "lp_solves=" << rep.lp_solves
              << " cuts_simple=" << rep.cuts_simple
              << " cuts_disj=" << rep.cuts_disjunctive
              << " cuts_bound=" << rep.cuts_bound << "\n"
              << "preprocess_s=" << fmt(rep.preprocess_seconds)
              << " total_s=" << fmt(rep.total_seconds) << "\n";
  }
  return rep.status == SolveStatus::Limit ? 2 : 0;
}

// Writes instance plus a one-line JSON sidecar; prints the path and seed.
int emit_instance(const std::string& out_dir, const std::string& stem,
                  const GeneratedInstance& gen, nlohmann::ordered_json meta,
                  std::uint64_t seed) {
  namespace fs = std::filesystem;
  try {
    if (!out_dir.empty()) fs::create_directories(out_dir);
    const fs::path base = fs::path(out_dir.empty() ? "." : out_dir) / stem;
    const std::string inst_path = base.string() + ".lpcc";
    write_instance(inst_path, gen.instance);

    meta["n"] = gen.instance.n;
    meta["m"] = gen.instance.m;
    meta["k"] = gen.instance.k;
    if (gen.witness) {
      meta["witness_objective"] = gen.witness->objective;
    } else {
      meta["witness_objective"] = nullptr;
    }
    std::ofstream mf(base.string() + ".meta");
    if (!mf) {
      std::cerr << "error: cannot write " << base.string() << ".meta\n";
      return 1;
    }
    mf << meta.dump() << "\n";
    std::cout << "wrote " << inst_path << " seed=" << seed << " n="
              << gen.instance.n << " m=" << gen.instance.m
              << " k=" << gen.instance.k << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_bench(const std::string& manifest_path, int jobs,
              const std::string& runs_path, const std::string& profile_path) {
  std::ifstream in(manifest_path);
  if (!in) {
    std::cerr << "error: cannot read " << manifest_path << "\n";
    return 1;
  }
  std::ostringstream text;
  text << in.rdbuf();

  BenchManifest manifest;
  try {
    manifest = parse_manifest(text.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (log_level() >= 1) {
    std::cerr << "bench: " << manifest.instances.size() << " instances x "
              << manifest.configs.size() << " configs, jobs=" << jobs << "\n";
  }
  const std::vector<BenchRun> rows = run_bench(manifest, jobs);

  std::ofstream runs_out(runs_path);
  if (!runs_out) {
    std::cerr << "error: cannot write " << runs_path << "\n";
    return 1;
  }
  write_runs_csv(runs_out, rows);
  std::ofstream profile_out(profile_path);
  if (!profile_out) {
    std::cerr << "error: cannot write " << profile_path << "\n";
    return 1;
  }
  write_profile_csv(profile_out, performance_profile(rows));

  int errors = 0;
  for (const BenchRun& r : rows) errors += r.status == "ERROR" ? 1 : 0;
  std::cout << "wrote " << rows.size() << " runs to " << runs_path
            << " and the profile to " << profile_path;
  if (errors > 0) std::cout << " (" << errors << " errored)";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Branch-and-cut solver for LPs with complementarity constraints"};
  app.require_subcommand(1);
  int rc = 0;

  SolveFlags sf;
  CLI::App* solve = app.add_subcommand("solve", "Solve an LPCC1 file");
  solve->add_option("file", sf.path, "LPCC1 instance file")->required();
  solve->add_option("--gap", sf.gap, "Relative optimality gap");
  solve->add_option("--comp-tol", sf.comp_tol, "Complementarity tolerance");
  solve->add_option("--time-limit", sf.time_limit, "Seconds, 0 disables");
  solve->add_option("--node-limit", sf.node_limit, "Nodes, 0 disables");
  solve->add_option("--strong-depth", sf.strong_depth,
                    "Strong-branch depths 1..D; 0 disables");
  solve->add_option("--weights", sf.weights,
                    "violation,scaled,pseudocost,satisfaction");
  solve->add_option("--recovery-depth", sf.recovery_depth,
                    "Descent steps per recovery walk");
  solve->add_option("--recovery-breadth", sf.recovery_breadth,
                    "Recovery walks; 0 means one per pair");
  solve->add_flag("--no-cuts", sf.no_cuts, "Skip the cut phases");
  solve->add_flag("--no-recovery", sf.no_recovery,
                  "Skip feasibility recovery");
  solve->add_option("--disj-rounds", sf.disj_rounds,
                    "Disjunctive cut rounds; -1 means m/100");
  solve->add_option("--disj-per-round", sf.disj_per_round,
                    "Disjunctive cuts per round");
  solve->add_option("--simple-rounds", sf.simple_rounds,
                    "Simple cut rounds; -1 means m/10");
  solve->add_option("--bound-passes", sf.bound_passes,
                    "Bound refinement passes");
  solve->add_option("--bound-pairs", sf.bound_pairs,
                    "Pairs refined per bound pass");
  solve->add_flag("--json-line", sf.json_line,
                  "One machine-readable JSON line");
  solve->callback([&] { rc = cmd_solve(sf); });

  CLI::App* gen = app.add_subcommand("generate", "Write instance files");
  gen->require_subcommand(1);
  std::string out_dir;
  gen->add_option("--out", out_dir, "Output directory (default .)")
      ->capture_default_str();

  RandomLpccConfig rc_cfg;
  CLI::App* grandom = gen->add_subcommand("lpcc", "Random family");
  grandom->fallthrough();
  grandom->add_option("--n", rc_cfg.n, "x variables")->required();
  grandom->add_option("--m", rc_cfg.m, "complementarity pairs")->required();
  grandom->add_option("--k", rc_cfg.k, "side rows")->required();
  grandom->add_option("--rank", rc_cfg.rank_m, "PSD rank of M")->required();
  grandom->add_option("--dense", rc_cfg.dense, "Density percent");
  grandom->add_option("--seed", rc_cfg.seed, "RNG seed")->required();
  grandom->callback([&] {
    char stem[128];
    std::snprintf(stem, sizeof(stem), "lpcc_n%d_m%d_k%d_r%d_d%g_s%llu",
                  rc_cfg.n, rc_cfg.m, rc_cfg.k, rc_cfg.rank_m, rc_cfg.dense,
                  static_cast<unsigned long long>(rc_cfg.seed));
    nlohmann::ordered_json meta;
    meta["family"] = "lpcc";
    meta["rank"] = rc_cfg.rank_m;
    meta["dense"] = rc_cfg.dense;
    meta["seed"] = rc_cfg.seed;
    try {
      rc = emit_instance(out_dir, stem, gen_random_lpcc(rc_cfg),
                         std::move(meta), rc_cfg.seed);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = 1;
    }
  });

  BilevelConfig bl_cfg;
  CLI::App* gbilevel = gen->add_subcommand("bilevel", "Two-stage family");
  gbilevel->fallthrough();
  gbilevel->add_option("--dimv", bl_cfg.dim_v, "first-stage dim")->required();
  gbilevel->add_option("--dimg", bl_cfg.dim_g, "inner row count")->required();
  gbilevel->add_option("--dimb", bl_cfg.dim_b, "outer row count")->required();
  gbilevel->add_option("--rankq", bl_cfg.rank_q, "PSD rank of Q")->required();
  gbilevel->add_option("--seed", bl_cfg.seed, "RNG seed")->required();
  gbilevel->callback([&] {
    bl_cfg.dim_x = bl_cfg.dim_v;
    char stem[128];
    std::snprintf(stem, sizeof(stem), "bilevel_v%d_g%d_b%d_q%d_s%llu",
                  bl_cfg.dim_v, bl_cfg.dim_g, bl_cfg.dim_b, bl_cfg.rank_q,
                  static_cast<unsigned long long>(bl_cfg.seed));
    nlohmann::ordered_json meta;
    meta["family"] = "bilevel";
    meta["dimv"] = bl_cfg.dim_v;
    meta["dimg"] = bl_cfg.dim_g;
    meta["dimb"] = bl_cfg.dim_b;
    meta["rankq"] = bl_cfg.rank_q;
    meta["seed"] = bl_cfg.seed;
    try {
      rc = emit_instance(out_dir, stem, gen_bilevel(bl_cfg), std::move(meta),
                         bl_cfg.seed);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = 1;
    }
  });

  InverseQpConfig iq_cfg;
  CLI::App* ginvqp = gen->add_subcommand("invqp", "Inverse-QP family");
  ginvqp->fallthrough();
  ginvqp->add_option("--mt", iq_cfg.m_tilde, "inner rows")->required();
  ginvqp->add_option("--nt", iq_cfg.n_tilde, "inner dim")->required();
  ginvqp->add_option("--seed", iq_cfg.seed, "RNG seed")->required();
  ginvqp->callback([&] {
    char stem[128];
    std::snprintf(stem, sizeof(stem), "invqp_mt%d_nt%d_s%llu", iq_cfg.m_tilde,
                  iq_cfg.n_tilde,
                  static_cast<unsigned long long>(iq_cfg.seed));
    nlohmann::ordered_json meta;
    meta["family"] = "invqp";
    meta["mt"] = iq_cfg.m_tilde;
    meta["nt"] = iq_cfg.n_tilde;
    meta["seed"] = iq_cfg.seed;
    try {
      rc = emit_instance(out_dir, stem, gen_inverse_qp(iq_cfg),
                         std::move(meta), iq_cfg.seed);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      rc = 1;
    }
  });

  std::string manifest_path, runs_path = "runs.csv",
                             profile_path = "profile.csv";
  int jobs = 1;
  CLI::App* bench = app.add_subcommand("bench", "Sweep a manifest into CSV");
  bench->add_option("manifest", manifest_path, "JSON manifest")->required();
  bench->add_option("--jobs", jobs, "Parallel solves");
  bench->add_option("--runs", runs_path, "Per-run CSV path")
      ->capture_default_str();
  bench->add_option("--profile", profile_path, "Profile CSV path")
      ->capture_default_str();
  bench->callback(
      [&] { rc = cmd_bench(manifest_path, jobs, runs_path, profile_path); });

  CLI11_PARSE(app, argc, argv);
  return rc;
}
