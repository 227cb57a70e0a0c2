// SPDX-License-Identifier: Apache-2.0
//
// Benchmark harness: runs a manifest of instances against named solver
// configurations and writes two CSV files, the per-run table and the
// time-based performance profile.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lpcc/bnb.hpp"

namespace lpcc {

// One row of the per-run table.
struct BenchRun {
  std::string instance;
  std::string config;
  std::string status;  // OPTIMAL / INFEASIBLE / UNBOUNDED / LIMIT / ERROR
  double obj = kInf;
  double lb = -kInf;
  double ub = kInf;
  double rel_gap = kInf;
  long nodes = 0;
  long lp_solves = 0;
  int cuts_simple = 0;
  int cuts_disj = 0;
  int cuts_bound = 0;
  double t_preprocess = 0.0;
  double t_total = 0.0;
};

// Quotes the field if it contains a comma, quote, or line break, doubling
// embedded quotes; anything else passes through untouched.
std::string csv_field(const std::string& raw);

std::string status_name(SolveStatus status);

BenchRun to_bench_run(const std::string& instance, const std::string& config,
                      const SolveReport& report);

// Header line plus one line per run, in the given order.
void write_runs_csv(std::ostream& out, const std::vector<BenchRun>& runs);

struct ProfilePoint {
  std::string config;
  double ratio = 1.0;
  double fraction = 0.0;
};

// Time-based performance profile over the run table.  For every instance
// with at least one certified run (OPTIMAL, INFEASIBLE, or UNBOUNDED), each
// config's ratio is t_total over the fastest certified time, floored at 1;
// LIMIT, ERROR, and missing runs count as +inf.  Points come out grouped by
// config in first-appearance order, ratios ascending, fraction the share of
// profiled instances at or below the ratio.
std::vector<ProfilePoint> performance_profile(const std::vector<BenchRun>& runs);

void write_profile_csv(std::ostream& out,
                       const std::vector<ProfilePoint>& points);

struct BenchManifest {
  std::vector<std::string> instances;  // LPCC1 file paths
  std::vector<std::pair<std::string, SolverParams>> configs;
};

// JSON object {"instances": [paths], "configs": {name: {key: value}}}.
// Config keys: gap, comp_tol, time_limit, node_limit, strong_depth,
// weights (array of 4), epsilon, recovery_depth, recovery_breadth, no_cuts,
// no_recovery, disj_rounds, disj_per_round, simple_rounds, bound_passes,
// bound_pairs.  Configs keep their order of appearance.  Throws ParseError
// on malformed JSON or an unrecognized key.
BenchManifest parse_manifest(const std::string& text);

// Full cross product, instance-major (all configs of the first instance,
// then the second, ...).  jobs > 1 runs solves on that many threads; rows
// keep the manifest order regardless.  A failed run (unreadable file,
// solver exception) becomes a status=ERROR row and the sweep continues.
std::vector<BenchRun> run_bench(const BenchManifest& manifest, int jobs = 1);

}  // namespace lpcc
