// groupeq: decide satisfiability of a system of equations and
// inequations (with recognisable constraints) over a structured group.
//
//   groupeq <group.json> <system.sys> [flags]
//
// Exit codes: 0 sat, 1 unsat, 2 unknown, 3 error.

#include "groupeq/group_io.hpp"
#include "groupeq/solve.hpp"
#include "groupeq/system_parser.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace groupeq;

int main(int argc, char** argv) {
  CLI::App app{"satisfiability of equations over structured groups"};
  std::string group_path, system_path;
  long long branch_budget = 1'000'000;
  int bound = -1;
  bool witness = true;
  bool trace = false;
  bool via_embedding = false;
  std::string format = "json";
  app.add_option("group-file", group_path, "group description (JSON)")->required();
  app.add_option("system-file", system_path, "system of equations/inequations")->required();
  app.add_option("--bound", bound, "override the free-group search bound");
  app.add_option("--branch-budget", branch_budget, "max branches before unknown");
  app.add_flag("--witness,!--no-witness", witness, "emit a witness for sat (default on)");
  app.add_flag("--trace", trace, "human-readable trace on stderr");
  app.add_flag("--via-embedding", via_embedding,
               "route extensions through the wreath-product embedding");
  app.add_option("--format", format, "output format (json)");
  CLI11_PARSE(app, argc, argv);

  nlohmann::json out;
  try {
    if (format != "json") throw std::invalid_argument("unsupported format: " + format);
    GroupEnv env = load_group_file(group_path);
    if (trace)
      std::cerr << "loaded group '" << env.name << "' with " << env.labels.size()
                << " labels, " << env.recsets.size() << " recsets\n";
    std::ifstream in(system_path);
    if (!in) throw std::runtime_error("cannot open system file: " + system_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    System sys = parse_system(text, env);
    if (trace)
      std::cerr << "system: " << sys.variables.size() << " vars, " << sys.equations.size()
                << " equations, " << sys.inequations.size() << " inequations, "
                << sys.constraints.size() << " constraints\n";

    SolveOptions opts;
    opts.branch_budget = branch_budget;
    opts.via_embedding = via_embedding;
    if (bound >= 0) opts.free_bound = bound;
    SolveStats stats;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = solve(env.structure, sys, opts, &stats);
    auto t1 = std::chrono::steady_clock::now();

    if (v.is_sat() && !check_witness(env.structure, sys, v.witness))
      throw std::logic_error("internal error: witness fails the checker");

    out["verdict"] = v.is_sat() ? "sat" : v.is_unsat() ? "unsat" : "unknown";
    if (v.is_sat() && witness) {
      nlohmann::json w = nlohmann::json::object();
      for (const auto& [var, val] : v.witness) w[var] = value_to_json_labeled(env, val);
      out["witness"] = w;
    }
    if (v.is_unknown()) out["reason"] = v.reason;
    out["branches_explored"] = stats.branches;
    out["time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::cout << out.dump() << "\n";
    if (trace) std::cerr << "verdict=" << out["verdict"] << " branches=" << stats.branches << "\n";
    return v.is_sat() ? 0 : v.is_unsat() ? 1 : 2;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", e.what()}};
    std::cout << err.dump() << "\n";
    return 3;
  }
}
