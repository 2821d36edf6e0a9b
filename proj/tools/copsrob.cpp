// Copyright 2026 The copsrob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "copsrob/copsrob.hpp"
#include "json.hpp"

#ifndef COPSROB_VERSION
#define COPSROB_VERSION "0.0.0"
#endif

namespace {

using copsrob::Graph;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kBudget = 2, kVerifyFailed = 3 };

// Parse/usage problems in user input, reported with exit code 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string extension(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot + 1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph(const std::string& file, const std::string& gen) {
  if (file.empty() == gen.empty()) throw InputError("exactly one of --in and --gen is required");
  try {
    if (!gen.empty()) return copsrob::gen::generate(gen);
    std::string ext = extension(file);
    std::string text = slurp(file);
    if (ext == "g6") {
      std::istringstream lines(text);
      std::string first;
      std::getline(lines, first);
      return copsrob::parse_graph6(first);
    }
    if (ext == "edges") return copsrob::parse_edgelist(text);
    if (ext == "dot") throw InputError("DOT is an output-only format");
    throw InputError("unrecognized graph file extension '." + ext + "' (expected .g6 or .edges)");
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string render(const Graph& g, const std::string& format) {
  if (format == "graph6" || format == "g6") return copsrob::emit_graph6(g) + "\n";
  if (format == "edges") return copsrob::emit_edgelist(g);
  if (format == "dot") return copsrob::emit_dot(g);
  throw InputError("unknown format '" + format + "'");
}

// Writes to --out (format from its extension unless --format is given) or stdout.
void write_graphs(const std::vector<Graph>& graphs, const std::string& out, std::string format) {
  if (format.empty()) format = out.empty() ? "graph6" : extension(out);
  std::string text;
  for (const Graph& g : graphs) text += render(g, format);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

json report_header(const std::vector<std::string>& argv, std::uint64_t seed) {
  json r;
  r["command"] = argv;
  r["version"] = COPSROB_VERSION;
  r["seed"] = seed;
  return r;
}

json describe(const Graph& g) { return {{"graph6", copsrob::emit_graph6(g)}, {"order", g.order()}, {"size", g.size()}}; }

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

int cmd_copnum(const Graph& g, int kmax, std::uint64_t budget, json report) {
  copsrob::SolveOptions opts{budget};
  if (kmax < 1) kmax = g.order();
  json by_k = json::object();
  std::optional<int> number;
  std::optional<int> time;
  for (int k = 1; k <= kmax && !number; ++k) {
    auto res = copsrob::solve(g, k, opts);
    by_k[std::to_string(k)] = optional_int(res.capture_time());
    if (res.cop_win()) {
      number = k;
      time = res.capture_time();
      report["best_initial"] = *res.best_initial();
    }
  }
  report["instance"] = describe(g);
  report["cop_number"] = optional_int(number);
  report["capture_time"] = optional_int(time);
  report["capture_time_by_k"] = by_k;
  std::cout << report.dump(2) << "\n";
  if (!number) {
    std::cerr << "no k <= " << kmax << " is a cop win\n";
    return kBudget;
  }
  return kOk;
}

int cmd_freecheck(const Graph& g, const std::string& family_spec, json report) {
  copsrob::Family family;
  try {
    family = copsrob::parse_family(family_spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  report["instance"] = describe(g);
  report["family"] = family_spec;
  bool free = true;
  json hits = json::array();
  for (const auto& p : family) {
    if (auto w = copsrob::find_induced(g, p)) {
      free = false;
      json map = json::object();
      for (std::size_t i = 0; i < w->size(); ++i) map[std::to_string(i)] = (*w)[i];
      hits.push_back({{"pattern", p.name}, {"witness", map}});
    }
  }
  report["free"] = free;
  if (!free) report["witnesses"] = hits;
  std::cout << report.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const std::string& theorem, int nmax, int jobs, json report) {
  auto r = copsrob::run_theorem(theorem, nmax, jobs, report["seed"].get<std::uint64_t>());
  report["theorem"] = theorem;
  report["nmax"] = nmax;
  report["jobs"] = jobs;
  report["instances"] = r.instances;
  report["passed"] = r.passed;
  report["budget_hits"] = r.budget_hits;
  report["max_steps"] = r.max_steps;
  report["seconds"] = r.seconds;
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"graph6", f.graph6}, {"reason", f.reason}});
  report["failures"] = fails;
  report["pass"] = r.ok();
  std::cout << report.dump(2) << "\n";
  if (r.ok()) return kOk;
  std::cerr << r.failures.size() << " of " << r.instances << " instances failed\n";
  return r.failures.size() > r.budget_hits ? kVerifyFailed : kBudget;
}

Graph transform(const Graph& g, const std::string& spec) {
  if (spec == "cliquesub") return copsrob::clique_substitution(g).graph;
  if (spec.rfind("subdivide:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(spec.substr(10));
    } catch (const std::exception&) {
      throw InputError("bad subdivision count in '" + spec + "'");
    }
    return copsrob::subdivide(g, k);
  }
  throw InputError("unknown transform '" + spec + "' (expected cliquesub or subdivide:k)");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  CLI::App app{"Cops and robbers: exact solver, strategies and verification campaigns"};
  app.set_version_flag("--version", COPSROB_VERSION);
  app.require_subcommand(1);

  std::string in, gen, family, theorem, out, format, spec;
  int kmax = 0, nmax = 7, jobs = 1, order = 0;
  std::uint64_t budget = 50'000'000, seed = 1;

  auto* copnum = app.add_subcommand("copnum", "Exact cop number and capture time");
  copnum->add_option("--in", in, "Graph file (.g6 or .edges)");
  copnum->add_option("--gen", gen, "Generator spec, e.g. cycle:6");
  copnum->add_option("--kmax", kmax, "Largest k to try (default: order)");
  copnum->add_option("--budget", budget, "State budget per solve");

  auto* freecheck = app.add_subcommand("freecheck", "Induced-subgraph freeness against a family");
  freecheck->add_option("--in", in, "Graph file (.g6 or .edges)");
  freecheck->add_option("--gen", gen, "Generator spec");
  freecheck->add_option("--family", family, "Family spec, e.g. claw,bull")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--theorem", theorem,
                     "cl1|cl2|cl3|pkfree:k|clawnet:n|monotone|layers:a..d|predict|trainchase[:count]")
      ->required();
  verify->add_option("--nmax", nmax, "Largest order enumerated");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized campaigns");

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated graph");
  gen_cmd->add_option("spec", spec, "Generator spec")->required();
  auto* transform_cmd = app.add_subcommand("transform", "Apply cliquesub or subdivide:k");
  transform_cmd->add_option("op", spec, "cliquesub or subdivide:k")->required();
  transform_cmd->add_option("--in", in, "Graph file (.g6 or .edges)");
  transform_cmd->add_option("--gen", gen, "Generator spec");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All connected graphs of one order");
  enumerate_cmd->add_option("n", order, "Order")->required();
  for (auto* c : {gen_cmd, transform_cmd, enumerate_cmd}) {
    c->add_option("--out", out, "Output file; format from extension (.g6, .edges, .dot)");
    c->add_option("--format", format, "graph6, edges or dot");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    json header = report_header(args, seed);
    if (*copnum) return cmd_copnum(read_graph(in, gen), kmax, budget, header);
    if (*freecheck) return cmd_freecheck(read_graph(in, gen), family, header);
    if (*verify) return cmd_verify(theorem, nmax, jobs, header);
    if (*gen_cmd) {
      Graph g;
      try {
        g = copsrob::gen::generate(spec);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      write_graphs({g}, out, format);
    } else if (*transform_cmd) {
      Graph g = read_graph(in, gen);
      Graph t;
      try {
        t = transform(g, spec);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      write_graphs({t}, out, format);
    } else if (*enumerate_cmd) {
      if (order < 1 || order > copsrob::kEnumerateMaxOrder)
        throw InputError("enumerate supports 1 <= n <= " + std::to_string(copsrob::kEnumerateMaxOrder));
      write_graphs(copsrob::enumerate_connected(order), out, format);
    }
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const copsrob::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
