// SPDX-License-Identifier: Apache-2.0

#include "lpcc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "lpcc/errors.hpp"

namespace lpcc {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

bool certified(const std::string& status) {
  return status == "OPTIMAL" || status == "INFEASIBLE" ||
         status == "UNBOUNDED";
}

double json_number(const nlohmann::ordered_json& v, const std::string& key) {
  if (!v.is_number()) throw ParseError("config key " + key + " wants a number", 0);
  return v.get<double>();
}

void apply_config_key(SolverParams& p, const std::string& key,
                      const nlohmann::ordered_json& v) {
  if (key == "gap") {
    p.rel_gap = json_number(v, key);
  } else if (key == "comp_tol") {
    p.comp_tol = json_number(v, key);
    p.preprocess.comp_tol = p.comp_tol;
  } else if (key == "time_limit") {
    p.time_limit = json_number(v, key);
  } else if (key == "node_limit") {
    p.node_limit = static_cast<long>(json_number(v, key));
  } else if (key == "strong_depth") {
    p.weights.strong_depth = static_cast<int>(json_number(v, key));
  } else if (key == "epsilon") {
    p.weights.epsilon = json_number(v, key);
  } else if (key == "weights") {
    if (!v.is_array() || v.size() != 4) {
      throw ParseError("config key weights wants an array of 4 numbers", 0);
    }
    p.weights.violation = json_number(v[0], key);
    p.weights.scaled = json_number(v[1], key);
    p.weights.pseudocost = json_number(v[2], key);
    p.weights.satisfaction = json_number(v[3], key);
  } else if (key == "recovery_depth") {
    p.preprocess.recovery.depth = static_cast<int>(json_number(v, key));
  } else if (key == "recovery_breadth") {
    p.preprocess.recovery.breadth = static_cast<int>(json_number(v, key));
  } else if (key == "no_cuts") {
    if (!v.is_boolean()) throw ParseError("config key no_cuts wants a bool", 0);
    p.preprocess.use_cuts = !v.get<bool>();
  } else if (key == "no_recovery") {
    if (!v.is_boolean()) {
      throw ParseError("config key no_recovery wants a bool", 0);
    }
    p.preprocess.use_recovery = !v.get<bool>();
  } else if (key == "disj_rounds") {
    p.preprocess.disj_rounds = static_cast<int>(json_number(v, key));
  } else if (key == "disj_per_round") {
    p.preprocess.disj_per_round = static_cast<int>(json_number(v, key));
  } else if (key == "simple_rounds") {
    p.preprocess.simple_rounds = static_cast<int>(json_number(v, key));
  } else if (key == "bound_passes") {
    p.preprocess.bound_passes = static_cast<int>(json_number(v, key));
  } else if (key == "bound_pairs") {
    p.preprocess.bound_pairs = static_cast<int>(json_number(v, key));
  } else {
    throw ParseError("unknown config key: " + key, 0);
  }
}

}  // namespace

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n\r") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal:
      return "OPTIMAL";
    case SolveStatus::Infeasible:
      return "INFEASIBLE";
    case SolveStatus::UnboundedBelow:
      return "UNBOUNDED";
    case SolveStatus::Limit:
      return "LIMIT";
  }
  return "ERROR";
}

BenchRun to_bench_run(const std::string& instance, const std::string& config,
                      const SolveReport& report) {
  BenchRun run;
  run.instance = instance;
  run.config = config;
  run.status = status_name(report.status);
  run.obj = report.upper_bound;
  run.lb = report.lower_bound;
  run.ub = report.upper_bound;
  run.rel_gap = report.gap;
  run.nodes = report.nodes;
  run.lp_solves = report.lp_solves;
  run.cuts_simple = report.cuts_simple;
  run.cuts_disj = report.cuts_disjunctive;
  run.cuts_bound = report.cuts_bound;
  run.t_preprocess = report.preprocess_seconds;
  run.t_total = report.total_seconds;
  return run;
}

void write_runs_csv(std::ostream& out, const std::vector<BenchRun>& runs) {
  out << "instance,config,status,obj,lb,ub,rel_gap,nodes,lp_solves,"
         "cuts_simple,cuts_disj,cuts_bound,t_preprocess,t_total\n";
  for (const BenchRun& r : runs) {
    out << csv_field(r.instance) << ',' << csv_field(r.config) << ','
        << csv_field(r.status) << ',' << fmt(r.obj) << ',' << fmt(r.lb) << ','
        << fmt(r.ub) << ',' << fmt(r.rel_gap) << ',' << r.nodes << ','
        << r.lp_solves << ',' << r.cuts_simple << ',' << r.cuts_disj << ','
        << r.cuts_bound << ',' << fmt(r.t_preprocess) << ','
        << fmt(r.t_total) << '\n';
  }
}

std::vector<ProfilePoint> performance_profile(
    const std::vector<BenchRun>& runs) {
  std::vector<std::string> configs, instances;
  for (const BenchRun& r : runs) {
    if (std::find(configs.begin(), configs.end(), r.config) == configs.end()) {
      configs.push_back(r.config);
    }
    if (std::find(instances.begin(), instances.end(), r.instance) ==
        instances.end()) {
      instances.push_back(r.instance);
    }
  }

  std::map<std::pair<std::string, std::string>, const BenchRun*> table;
  for (const BenchRun& r : runs) table[{r.instance, r.config}] = &r;

  // Only instances somebody certified can rank the configs.
  std::vector<std::pair<std::string, double>> best;
  for (const std::string& inst : instances) {
    double t = kInf;
    for (const std::string& cfg : configs) {
      const auto it = table.find({inst, cfg});
      if (it != table.end() && certified(it->second->status)) {
        t = std::min(t, it->second->t_total);
      }
    }
    if (t < kInf) best.emplace_back(inst, std::max(t, 1e-12));
  }

  std::vector<ProfilePoint> points;
  if (best.empty()) return points;
  for (const std::string& cfg : configs) {
    std::vector<double> ratios;
    ratios.reserve(best.size());
    for (const auto& [inst, t_best] : best) {
      const auto it = table.find({inst, cfg});
      if (it == table.end() || !certified(it->second->status)) {
        ratios.push_back(kInf);
      } else {
        ratios.push_back(std::max(1.0, it->second->t_total / t_best));
      }
    }
    std::sort(ratios.begin(), ratios.end());
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      points.push_back(
          {cfg, ratios[i], static_cast<double>(i + 1) / ratios.size()});
    }
  }
  return points;
}

void write_profile_csv(std::ostream& out,
                       const std::vector<ProfilePoint>& points) {
  out << "config,ratio,fraction\n";
  for (const ProfilePoint& p : points) {
    out << csv_field(p.config) << ',' << fmt(p.ratio) << ','
        << fmt(p.fraction) << '\n';
  }
}

BenchManifest parse_manifest(const std::string& text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
  if (!doc.is_object()) throw ParseError("manifest wants a JSON object", 0);

  BenchManifest manifest;
  for (const auto& [key, value] : doc.items()) {
    if (key == "instances") {
      if (!value.is_array()) {
        throw ParseError("manifest instances wants an array", 0);
      }
      for (const auto& item : value) {
        if (!item.is_string()) {
          throw ParseError("manifest instances wants strings", 0);
        }
        manifest.instances.push_back(item.get<std::string>());
      }
    } else if (key == "configs") {
      if (!value.is_object()) {
        throw ParseError("manifest configs wants an object", 0);
      }
      for (const auto& [name, body] : value.items()) {
        if (!body.is_object()) {
          throw ParseError("config " + name + " wants an object", 0);
        }
        SolverParams params;
        for (const auto& [ckey, cval] : body.items()) {
          apply_config_key(params, ckey, cval);
        }
        manifest.configs.emplace_back(name, params);
      }
    } else {
      throw ParseError("unknown manifest key: " + key, 0);
    }
  }
  return manifest;
}

std::vector<BenchRun> run_bench(const BenchManifest& manifest, int jobs) {
  const std::size_t nc = manifest.configs.size();
  std::vector<BenchRun> rows(manifest.instances.size() * nc);
  if (rows.empty()) return rows;

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= rows.size()) return;
      const std::string& path = manifest.instances[t / nc];
      const auto& [name, params] = manifest.configs[t % nc];
      try {
        const LpccInstance inst = read_instance(path);
        rows[t] = to_bench_run(path, name, solve_lpcc(inst, params));
      } catch (const std::exception&) {
        rows[t].instance = path;
        rows[t].config = name;
        rows[t].status = "ERROR";
      }
    }
  };

  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return rows;
}

}  // namespace lpcc
