// uol: run online-learning games, regret sweeps, diagonalizations,
// priority constructions, coloring games and closure tables.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "uol/experiment.hpp"

namespace {

struct Flags {
  std::string config_file;
  bool dump = false;
  std::optional<std::string> cls, learner, adversary, order, registry, graph, out;
  std::optional<std::uint64_t> seed, fuel, rounds, trials, multiplier;
  std::optional<std::size_t> horizon, timesteps, budget;
  std::optional<double> noise;
};

void add_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config_file, "Config file (section.key = value)");
  sub->add_flag("--dump-config", f.dump, "Print the effective config and exit");
  sub->add_option("--class", f.cls, "Hypothesis class");
  sub->add_option("--learner", f.learner, "Learner");
  sub->add_option("--adversary", f.adversary, "Adversary");
  sub->add_option("--order", f.order, "Point order");
  sub->add_option("--registry", f.registry, "Learner registry (diag, construct or a file)");
  sub->add_option("--graph", f.graph, "Graph (named graph or a file)");
  sub->add_option("--seed", f.seed, "Seed");
  sub->add_option("--fuel", f.fuel, "Step budget per prediction");
  sub->add_option("--rounds", f.rounds, "Rounds per game");
  sub->add_option("--trials", f.trials, "Monte Carlo trials");
  sub->add_option("--noise", f.noise, "Label noise rate for noisy adversaries");
  sub->add_option("--horizon", f.horizon, "Word length for closure tables");
  sub->add_option("--timesteps", f.timesteps, "Timesteps for the priority construction");
  sub->add_option("--multiplier", f.multiplier, "Probe budget multiplier for the priority construction");
  sub->add_option("--budget", f.budget, "Search budget of class oracles");
  sub->add_option("--out", f.out, "Output path ('-' for stdout)");
}

uol::ExperimentConfig effective_config(const std::string& command, const Flags& f) {
  uol::ExperimentConfig c;
  if (!f.config_file.empty()) {
    std::ifstream in(f.config_file);
    if (!in) throw uol::ConfigError("cannot read config '" + f.config_file + "'");
    std::stringstream s;
    s << in.rdbuf();
    c = uol::ExperimentConfig::parse(s.str());
  }
  c.command = command;
  if (f.cls) c.class_name = *f.cls;
  if (f.learner) c.learner = *f.learner;
  if (f.adversary) c.adversary = *f.adversary;
  if (f.order) c.order = *f.order;
  if (f.registry) c.registry = *f.registry;
  if (f.graph) c.graph = *f.graph;
  if (f.out) c.out = *f.out;
  if (f.seed) c.seed = *f.seed;
  if (f.fuel) c.fuel = *f.fuel;
  if (f.rounds) c.rounds = *f.rounds;
  if (f.trials) c.trials = *f.trials;
  if (f.multiplier) c.multiplier = *f.multiplier;
  if (f.horizon) c.horizon = *f.horizon;
  if (f.timesteps) c.timesteps = *f.timesteps;
  if (f.budget) c.budget = *f.budget;
  if (f.noise) c.set("adversary.noise", std::to_string(*f.noise));
  return c;
}

bool write_to(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal online learning simulator"};
  app.require_subcommand(1);
  Flags flags;
  const char* commands[][2] = {
      {"run", "Play one game and write its transcript"},
      {"regret", "Estimate expected regret over Monte Carlo trials (CSV)"},
      {"diag", "Evil sequences against a learner registry"},
      {"construct", "Run the priority construction and write its trace"},
      {"color", "Coloring extension and a coloring game"},
      {"closure", "Closure table for all words up to the horizon"},
  };
  for (auto& c : commands) add_flags(app.add_subcommand(c[0], c[1]), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(uol::Status::kConfigError);
  }

  std::string command = app.get_subcommands().front()->get_name();
  uol::ExperimentConfig cfg;
  try {
    cfg = effective_config(command, flags);
  } catch (const uol::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return static_cast<int>(uol::Status::kConfigError);
  }
  if (flags.dump) {
    std::cout << cfg.dump();
    return 0;
  }

  auto result = uol::run_command(cfg);
  if (result.status == uol::Status::kConfigError) {
    std::cerr << "config error: " << result.message << "\n";
    return static_cast<int>(result.status);
  }
  std::vector<std::pair<std::string, std::string>> files(result.files.begin(), result.files.end());
  std::stable_partition(files.begin(), files.end(), [](const auto& f) { return f.first == "main"; });
  for (const auto& [name, text] : files) {
    std::string path = cfg.out;
    if (name != "main") {
      if (path == "-") {
        std::cout << "\n";
      } else {
        path += "." + name + ".csv";
      }
    }
    if (!write_to(path, text)) {
      std::cerr << "cannot write '" << path << "'\n";
      return static_cast<int>(uol::Status::kConfigError);
    }
  }
  if (!result.message.empty()) std::cerr << command << ": " << result.message << "\n";
  return static_cast<int>(result.status);
}
