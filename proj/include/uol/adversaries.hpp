#pragma once

// Adversary strategies and point orders.

#include <functional>
#include <memory>
#include <string>

#include "uol/core.hpp"
#include "uol/evil.hpp"

namespace uol {

/// The t-th point (t = 0, 1, ...) presented by an adversary.
struct PointOrder {
  std::string name;
  std::function<Point(std::uint64_t)> at;

  Point operator()(std::uint64_t t) const { return at(t); }
};

PointOrder identity_order();
/// A seeded random permutation of 0..n-1, repeated.
PointOrder permutation_order(std::size_t n, std::uint64_t seed);
/// Independent uniform draws from 0..n-1.
PointOrder uniform_order(std::size_t n, std::uint64_t seed);
/// 0, 1, ..., n-1, 0, 1, ...
PointOrder cycle_order(std::size_t n);
PointOrder repeat_order(Point x);

/// One adversary instance plays one game. The engine calls next_point for
/// round t, then the learner predicts, then reveal sees the prediction.
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string name() const = 0;
  /// Whether every prefix of the revealed labels is promised realizable.
  virtual bool realizable_contract() const = 0;
  virtual Point next_point(const Sample& history, std::uint64_t t) = 0;
  virtual Label reveal(const Sample& history, Point x, Label prediction) = 0;
};

using AdversaryPtr = std::unique_ptr<Adversary>;

AdversaryPtr fixed_target(Hypothesis h, PointOrder order);

/// Reveals a label different from the prediction (the least such label for
/// non-binary classes) whenever the extended sample stays realizable, and
/// the prediction otherwise. A budgeted "unknown" counts as not realizable.
AdversaryPtr worst_case(HypothesisClass c, PointOrder order, std::size_t budget = kDefaultBudget);

/// Plays 0, 1, 2, ... and reveals e(n, .). Throws FuelExhausted if the
/// sequence is undefined at the requested point.
AdversaryPtr evil_adversary(std::shared_ptr<const EvilOracle> oracle, std::size_t n);

/// A prediction-independent labeled stream.
AdversaryPtr agnostic_stream(std::string name, std::function<LabeledPoint(std::uint64_t)> gen);

/// h's labels with each one flipped independently at the given rate.
AdversaryPtr noisy_target(Hypothesis h, PointOrder order, double rate, std::uint64_t seed);

/// Point x every round with labels 0, 1, 0, 1, ...
AdversaryPtr alternating(Point x);

}  // namespace uol
