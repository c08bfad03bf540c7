// rieszlab command-line front end.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rieszlab/config.hpp"
#include "rieszlab/errors.hpp"

int main(int argc, char** argv) {
  using rieszlab::Error;
  using rieszlab::ErrorKind;

  CLI::App app{"Riesz product and lacunary inequality workbench"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed, budget_ms;
  std::optional<unsigned> threads;
  std::optional<double> tol;
  std::optional<std::string> out;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--seed", seed, "base seed");
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--tol", tol, "quadrature tolerance");
  app.add_option("--budget-ms", budget_ms, "wall-clock budget, checked between instances");
  app.add_option("--out", out, "output directory");

  const std::map<std::string, std::string> about{
      {"riesz", "expand Riesz products and check their structure"},
      {"norms", "L^p norms of Riesz products, exact and by quadrature"},
      {"verify", "check the main inequality or one auxiliary statement"},
      {"estimate-constants", "search for extreme ratios and tabulate constants"},
      {"counterexample", "norm growth against the separable product"},
      {"montecarlo", "i.i.d. twin moments by seeded sampling"},
      {"transfer", "L1 contraction under shifted Riesz convolution"},
  };
  std::string target = "all";
  for (const auto& name : rieszlab::command_names()) {
    auto* sub = app.add_subcommand(name, about.at(name));
    if (name == "verify") sub->add_option("target", target, "statement id, T1.1 or all");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    nlohmann::json j = config_path.empty() ? nlohmann::json::object() : rieszlab::load_config_file(config_path);
    if (!j.is_object()) throw Error(ErrorKind::ConfigInvalid, "config must be a JSON object");
    j["command"] = app.get_subcommands().front()->get_name();
    if (j["command"] == "verify" && (!j.contains("target") || target != "all")) j["target"] = target;
    if (seed) j["seed"] = *seed;
    if (threads) j["threads"] = *threads;
    if (tol) j["tol"] = *tol;
    if (budget_ms) j["budget_ms"] = *budget_ms;
    if (out) j["out"] = *out;
    const auto cfg = rieszlab::parse_config(j);
    return rieszlab::run_config(cfg, std::cerr);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.kind() == ErrorKind::ConfigInvalid ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
