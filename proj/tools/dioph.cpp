// Command-line driver: verification, searches, descent, exponent bounds,
// congruence sieve, and reproduction of the embedded reference tables.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "dioph/report.hpp"

namespace {

void add_common(CLI::App* cmd, dioph::RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--parallelism", cfg.parallelism, "Worker threads");
  cmd->add_option("--precision", cfg.precision_digits, "Working precision in decimal digits");
  cmd->add_option("--cache", cfg.cache_path, "Sieve cache file (or set DIOPH_CACHE)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and table reproducer for x^2 + q^(2m) = 2 y^p"};
  app.require_subcommand(1);

  dioph::RunConfig cfg;
  cfg.parallelism = std::max(1u, std::thread::hardware_concurrency());

  std::string x, q, y, modulus = "";
  unsigned long m = 0, p = 0;

  auto* verify = app.add_subcommand("verify", "Check one candidate solution");
  verify->add_option("--x", x)->required();
  verify->add_option("--q", q)->required();
  verify->add_option("--m", m)->required();
  verify->add_option("--y", y)->required();
  verify->add_option("--p", p)->required();
  add_common(verify, cfg);

  unsigned long qm_max = 501, p_max = 50, y_max = 5000;
  auto* search = app.add_subcommand("search", "Scan a solution box by squareness testing");
  search->add_option("--qm-max", qm_max);
  search->add_option("--p-max", p_max);
  search->add_option("--y-max", y_max);
  add_common(search, cfg);

  auto* decompose = app.add_subcommand("decompose", "Descent witnesses of a solution");
  decompose->add_option("--x", x)->required();
  decompose->add_option("--q", q)->required();
  decompose->add_option("--m", m)->required();
  decompose->add_option("--y", y)->required();
  decompose->add_option("--p", p)->required();
  add_common(decompose, cfg);

  std::string baker_case = "all", liou_y;
  unsigned long ceiling = 100000;
  auto* baker = app.add_subcommand("baker", "Exponent bounds from the two-log lower bound");
  baker->add_option("--case", baker_case, "qm503, pq, m40, m100, m250 or all");
  baker->add_option("--ceiling", ceiling, "Upper end of the downward prime scan");
  baker->add_option("--liouville-y-min", liou_y, "Evaluate the Liouville branch at this y");
  add_common(baker, cfg);

  std::string sets, moduli, qopt = "3";
  auto* sieve = app.add_subcommand("sieve", "Congruence sieve and CRT elimination");
  sieve->add_option("--p", p)->required();
  sieve->add_option("--sets", sets, "A-set orders, e.g. 5,27,34");
  sieve->add_option("--moduli", moduli, "Raw sieve moduli, e.g. 242,866");
  sieve->add_option("--q", qopt, "Sieve base prime (default 3)");
  add_common(sieve, cfg);

  std::string target, reproduce_case = "all";
  auto* reproduce = app.add_subcommand("reproduce", "Recompute a reference table and diff it");
  reproduce
      ->add_option("--target", target,
                   "lemma-small, remark-table, baker-bounds, table3, table4, q3-p3, fixed-y")
      ->required();
  reproduce->add_option("--p", p, "Restrict table3/table4 to one prime");
  reproduce->add_option("--case", reproduce_case, "Restrict baker-bounds to one case");
  add_common(reproduce, cfg);

  std::string table_name;
  auto* table = app.add_subcommand("table", "Print an embedded reference table");
  table->add_option("--name", table_name)->required();
  add_common(table, cfg);

  unsigned long t_max = 20, period_bound = 1000;
  auto* recurrence = app.add_subcommand("recurrence", "The 4r_{t-1} - r_{t-2} sequence");
  recurrence->add_option("--t-max", t_max);
  recurrence->add_option("--modulus", modulus);
  recurrence->add_option("--period-bound", period_bound);
  add_common(recurrence, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dioph::kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  nlohmann::json& pr = cfg.params;
  if (sub == verify || sub == decompose) {
    pr = {{"x", x}, {"q", q}, {"m", m}, {"y", y}, {"p", p}};
  } else if (sub == search) {
    pr = {{"qm_max", qm_max}, {"p_max", p_max}, {"y_max", y_max}};
  } else if (sub == baker) {
    if (!liou_y.empty()) pr["liouville_y_min"] = liou_y;
    else {
      pr["case"] = baker_case;
      pr["ceiling"] = ceiling;
    }
  } else if (sub == sieve) {
    pr["p"] = p;
    if (!moduli.empty()) {
      pr["moduli"] = moduli;
      pr["q"] = qopt;
    } else if (!sets.empty()) {
      pr["sets"] = sets;
    } else {
      std::cerr << "sieve: need --sets or --moduli\n";
      return dioph::kExitUsage;
    }
  } else if (sub == reproduce) {
    pr["target"] = target;
    if (reproduce->count("--p")) pr["p"] = p;
    if (reproduce->count("--case")) pr["case"] = reproduce_case;
  } else if (sub == table) {
    pr["name"] = table_name;
  } else if (sub == recurrence) {
    pr["t_max"] = t_max;
    pr["period_bound"] = period_bound;
    if (!modulus.empty()) pr["modulus"] = modulus;
  }

  dioph::Report rep = dioph::run_command(cfg);
  std::cout << rep.render(cfg.format);
  return rep.exit_code;
}
