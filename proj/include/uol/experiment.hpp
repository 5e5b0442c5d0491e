#pragma once

// Experiment configuration and the name-based factories shared by the
// command-line tool and the Python module.
//
// Config files are flat `section.key = value` lines; '#' starts a comment.
// dump() writes every key, so a dumped config reproduces its run.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "uol/adversaries.hpp"
#include "uol/coloring.hpp"
#include "uol/engine.hpp"
#include "uol/evil.hpp"
#include "uol/registry.hpp"

namespace uol {

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ExperimentConfig {
  std::string command = "run";
  std::string class_name = "singletons";
  std::string learner = "enumeration";
  std::string adversary = "worst_case";
  std::string order = "identity";
  std::string registry = "diag";
  std::string graph = "complete:3:3";
  std::uint64_t rounds = 100;
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  std::uint64_t fuel = kDefaultFuel;
  double noise = 0.1;
  std::size_t budget = kDefaultBudget;
  std::size_t horizon = 6;
  std::size_t timesteps = 200;
  std::uint64_t multiplier = 1;
  std::string out = "-";

  static ExperimentConfig parse(std::string_view text);
  static ExperimentConfig parse(std::string_view text, ExperimentConfig base);
  /// Sets one key (`section.key`); throws ConfigError for unknown keys or
  /// malformed values.
  void set(std::string_view key, std::string_view value);
  std::string dump() const;
};

/// Everything a command needs, built from a config.
struct Context {
  ExperimentConfig config;
  std::shared_ptr<const LearnerRegistry> registry;
  std::shared_ptr<const EvilOracle> evil;  // set for the evil class
  std::optional<Graph> graph;              // set for coloring classes
  HypothesisClass cls;
};

/// Class names: singletons, finite_support, thresholds_nat, thresholds_int,
/// tree:<tree>, evil, coloring, coloring:<graph>, explicit:<file>,
/// threshold_grid:<stride>:<count>.
Context make_context(const ExperimentConfig& cfg);

/// Registry names: diag, construct, or a registry file.
std::shared_ptr<const LearnerRegistry> load_registry(std::string_view name);

/// Graph names: see Graph::named, or a graph file.
Graph load_graph(std::string_view name);

/// Learner names: enumeration, proper, evil, ewa, derandomized-ewa,
/// registry:<ctor>, derandomized:<randomized>, and the randomized learners.
LearnerPtr make_learner(const Context& ctx, std::string_view name);

/// Orders: identity, random, random:<n>, uniform:<n>, cycle:<n>, repeat:<x>.
PointOrder make_order(const Context& ctx, std::string_view name);

/// Adversaries: fixed:<term>, member:<i>, closure:<i>, worst_case,
/// evil:<n>, noisy:<term>, alternating:<x>.
AdversaryPtr make_adversary(const Context& ctx, std::string_view name);

/// Exit status of a command.
enum class Status { kOk = 0, kConfigError = 2, kFuelAbort = 3, kContractViolation = 4 };

struct CommandResult {
  Status status = Status::kOk;
  /// Named outputs; "main" goes to the configured output path.
  std::map<std::string, std::string> files;
  std::string message;
};

/// Runs config.command (run, regret, diag, construct, color, closure).
/// Config problems are reported as kConfigError rather than thrown.
CommandResult run_command(const ExperimentConfig& cfg);

}  // namespace uol
