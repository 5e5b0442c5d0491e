#pragma once

// Enumeration-based deterministic learners and a few small randomized
// learners used to exercise the advice machinery.

#include <string_view>

#include "uol/core.hpp"

namespace uol {

/// i0 = the least i < |S| with z_i consistent with S, or |S| if there is
/// none. Finite enumerations repeat their last element.
std::size_t enumeration_index(const Enumeration& z, const Sample& s);

/// Predicts z_{i0}(x). Each hypothesis evaluation costs one step of the
/// learner's budget and runs under the hypothesis' own budget. Sessions
/// remember how far each candidate has been verified and only charge for
/// new work.
class EnumerationLearner final : public Learner {
 public:
  EnumerationLearner(Enumeration z, std::string name = "enumeration");

  std::string name() const override { return name_; }
  Label predict(const Sample& s, Point x, Fuel& fuel, AdviceReader* advice) const override;
  std::unique_ptr<LearnerSession> start() const override;

  const Enumeration& enumeration() const noexcept { return z_; }

 private:
  Enumeration z_;
  std::string name_;
};

/// The session type returned by EnumerationLearner::start.
class EnumerationSession final : public LearnerSession {
 public:
  EnumerationSession(const EnumerationLearner& learner);
  Label predict(Point x, Fuel& fuel, AdviceReader* advice) override;
  void observe(const LabeledPoint& p) override;

  /// i0 for the current sample.
  std::size_t index(Fuel& fuel);

 private:
  const EnumerationLearner& owner_;
  std::size_t candidate_ = 0;      // every index below is inconsistent
  std::size_t verified_upto_ = 0;  // candidate agrees with sample[0..verified_upto_)
};

LearnerPtr enumeration_learner(Enumeration z, std::string name = "enumeration");

/// The enumeration learner over the closure enumeration of c. Throws Error
/// if c has none.
LearnerPtr proper_learner(const HypothesisClass& c);

/// Small randomized learners:
///   coin        the first advice bit
///   vote:<r>    majority of r advice bits, ties to 0
///   geometric   reads bits until a 1; outputs (bits read + |S| + x) mod 2
///   noisy_copy  the last label, flipped when the first two bits are 11
///   depth_mix   reads (|S| + x) mod 4 + 1 bits, outputs their parity
///               xor the last label
LearnerPtr randomized_learner(std::string_view name);
std::vector<std::string> randomized_learner_names();

}  // namespace uol
