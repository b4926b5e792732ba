#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

using multiphase::cli::Format;
using multiphase::cli::ProbeChoice;
using multiphase::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Global multiphase estimation: mutual information, bounds and probes"};
  app.require_subcommand(1);

  RunConfig config;
  std::string n_range, k_range, probe, format;
  double tol = 0.0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "number of phases")->capture_default_str();
    sub->add_option("--n", config.n, "number of resources N");
    sub->add_option("--n-range", n_range, "N sweep first:last[:step]");
    sub->add_option("--probe", probe, "probe family")->check(CLI::IsMember({"product", "hb", "both"}));
    sub->add_option("--tol", tol, "absolute tolerance (command default if omitted)");
    sub->add_option("--out", config.out, "output file (stdout if omitted)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", config.seed, "random seed")->capture_default_str();
    sub->add_flag("--radians", config.radians, "angles in radians instead of turns");
    sub->add_option("--budget", config.budget, "integrand evaluation budget (0: default)");
    sub->add_flag("--quiet", config.quiet, "no progress on stderr");
  };

  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"scan-mi", "mutual information over an N range"},
      {"bounds", "Heisenberg bounds and regime asymptotes"},
      {"crossover", "smallest N where the Holland-Burnett probe overtakes the product probe"},
      {"entanglement", "geometric measure of entanglement of a probe"},
      {"optimize", "search for the best real non-negative probe (JSON)"},
      {"density", "sample the conditional density g"},
      {"cost", "Bayesian Holevo-sine or surprise cost, continuous and discrete"},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub);
    sub->callback([&config, name = std::string(e.name)] { config.command = name; });
    const std::string name = e.name;
    if (name == "bounds") {
      sub->add_option("--k-range", k_range, "k sweep first:last[:step] at fixed --n");
      sub->add_flag("--diagonal", config.diagonal, "sweep k = N over --n-range");
    } else if (name == "optimize") {
      sub->add_option("--starts", config.starts, "number of starting points")->capture_default_str();
    } else if (name == "density") {
      sub->add_option("--samples", config.samples, "grid points per axis");
      sub->add_option("--at", config.at, "evaluate at one point instead of a grid")->delimiter(',');
    } else if (name == "cost") {
      sub->add_option("--cost", config.cost, "cost function")
          ->check(CLI::IsMember({"holevo-sine", "surprise"}))
          ->capture_default_str();
      sub->add_option("--mode", config.mode, "estimator mode")
          ->check(CLI::IsMember({"continuous", "discrete", "both"}))
          ->capture_default_str();
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return multiphase::cli::kExitValidation;
  }

  try {
    if (!n_range.empty()) config.n_range = multiphase::cli::parse_range(n_range);
    if (!k_range.empty()) config.k_range = multiphase::cli::parse_range(k_range);
  } catch (const multiphase::cli::ValidationError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return multiphase::cli::kExitValidation;
  }
  if (probe == "product") config.probe = ProbeChoice::product;
  if (probe == "hb") config.probe = ProbeChoice::hb;
  if (probe == "both") config.probe = ProbeChoice::both;
  if (format == "csv") config.format = Format::csv;
  if (format == "json") config.format = Format::json;
  if (tol != 0.0) config.tol = tol;
  return multiphase::cli::execute(config, std::cout, std::cerr);
}
