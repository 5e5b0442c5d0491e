#pragma once

// The online game: point, prediction, reveal. Transcripts, regret against a
// pool, and Monte Carlo estimates over the learner's advice.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uol/adversaries.hpp"
#include "uol/core.hpp"

namespace uol {

struct Round {
  std::uint64_t t = 0;
  Point x = 0;
  Label prediction = 0;
  Label label = 0;
  bool mistake = false;
  std::uint64_t cumulative = 0;
  std::optional<Verdict> audit;  // realizability of the sample through this round
  std::uint64_t fuel = 0;        // steps charged to the prediction
  std::uint64_t advice_bits = 0;
};

enum class AbortKind { kNone, kFuel, kError };

struct Transcript {
  std::string learner;
  std::string adversary;
  std::uint64_t seed = 0;
  std::uint64_t fuel_budget = 0;
  bool realizable_contract = false;
  std::vector<Round> rounds;
  std::uint64_t fuel_spent = 0;
  AbortKind abort = AbortKind::kNone;
  std::string abort_reason;

  bool aborted() const noexcept { return abort != AbortKind::kNone; }
  std::uint64_t mistakes() const { return rounds.empty() ? 0 : rounds.back().cumulative; }
  /// Mistakes over the first t rounds divided by t.
  double mistake_rate(std::size_t t) const;
  /// Mistakes in rounds [from, to).
  std::uint64_t mistakes_between(std::size_t from, std::size_t to) const;
  Sample sample() const;
  /// An audit of "no" under a realizable contract.
  bool contract_violated() const;

  /// Comment header, a column header, then one tab-separated line per round:
  /// t, x, prediction, label, mistake, cumulative, audit.
  std::string to_tsv() const;
};

struct GameOptions {
  std::uint64_t rounds = 100;
  std::uint64_t fuel = kDefaultFuel;  // per prediction
  std::optional<std::uint64_t> total_fuel;
  std::uint64_t seed = 0;             // advice seed; round t reads column t
  const HypothesisClass* audit = nullptr;
  std::size_t audit_budget = kDefaultBudget;
};

/// Runs the game. Fuel exhaustion and other library errors end the game
/// early with an aborted transcript.
Transcript run_game(const Learner& learner, Adversary& adversary, const GameOptions& options);

struct RegretRow {
  std::uint64_t n = 0;
  double learner_loss = 0;
  double best_loss = 0;
  double regret = 0;
  double regret_over_n = 0;
  double se = 0;
};

struct RegretReport {
  std::vector<RegretRow> rows;
  std::size_t pool_used = 0;
  bool budget_limited = false;

  /// Header n,learner_loss,best_loss,regret,regret_over_n,se.
  std::string to_csv() const;
};

/// Best-in-pool loss over the first `budget` pool members at every prefix.
RegretReport regret_report(const Transcript& t, const Enumeration& pool, std::size_t budget = kDefaultBudget);

/// Learner loss in a block minus the least loss of the block's active
/// experts (the first min(k, pool size)) over the same rounds.
double block_regret(const Transcript& t, const Enumeration& pool, unsigned k);

struct BlockRow {
  unsigned k = 0;
  double mean = 0;
  double se = 0;
  double bound = 0;
};

struct ExpectedReport {
  std::uint64_t trials = 0;
  RegretReport regret;                 // per-n means and standard errors
  std::vector<double> mean_mistakes;   // per n
  std::vector<double> se_mistakes;
  std::vector<BlockRow> blocks;        // blocks fully inside the horizon

  std::string blocks_csv() const;
};

using AdversaryMaker = std::function<AdversaryPtr(std::uint64_t trial)>;

struct ExpectedOptions {
  GameOptions game;
  std::uint64_t trials = 2;
  std::size_t pool_budget = kDefaultBudget;
  bool blocks = false;
};

/// Runs `trials` games; trial i uses the advice stream seeded from column i
/// of the master seed. Reports means and standard errors per round.
ExpectedReport estimate_expected(const Learner& learner, const AdversaryMaker& make,
                                 const Enumeration& pool, const ExpectedOptions& options);

}  // namespace uol
