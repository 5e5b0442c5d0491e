#pragma once

#include <memory>
#include <string>

#include "uol/types.hpp"

namespace uol {

/// Raised when a randomized computation asks for an advice bit past the end
/// of a finite advice prefix.
class AdviceExhausted : public Error {
 public:
  AdviceExhausted() : Error("advice prefix exhausted") {}
};

/// Sequential access to the random advice of one prediction.
class AdviceReader {
 public:
  virtual ~AdviceReader() = default;
  virtual Label next_bit() = 0;
  virtual std::uint64_t bits_read() const = 0;
};

/// Where a learner is guaranteed to halt.
enum class Totality { kRealizableOnly, kAllSamples };

class LearnerSession;

/// A map from (sample, point) to a label. Deterministic learners ignore the
/// advice reader; randomized ones draw their coins from it.
class Learner {
 public:
  virtual ~Learner() = default;

  virtual std::string name() const = 0;
  virtual bool randomized() const { return false; }
  virtual Totality total_on() const { return Totality::kAllSamples; }

  virtual Label predict(const Sample& sample, Point x, Fuel& fuel, AdviceReader* advice) const = 0;

  /// An online session equivalent to calling predict on the growing sample.
  /// Learners with incremental state override this.
  virtual std::unique_ptr<LearnerSession> start() const;
};

using LearnerPtr = std::shared_ptr<const Learner>;

class LearnerSession {
 public:
  explicit LearnerSession(const Learner& learner) : learner_(learner) {}
  virtual ~LearnerSession() = default;

  virtual Label predict(Point x, Fuel& fuel, AdviceReader* advice) {
    return learner_.predict(sample_, x, fuel, advice);
  }
  virtual void observe(const LabeledPoint& p) { sample_.push_back(p); }

  const Sample& sample() const noexcept { return sample_; }

 protected:
  const Learner& learner_;
  Sample sample_;
};

inline std::unique_ptr<LearnerSession> Learner::start() const {
  return std::make_unique<LearnerSession>(*this);
}

/// Deterministic prediction with a fresh budget.
inline Label predict_with_fuel(const Learner& l, const Sample& s, Point x, std::uint64_t fuel) {
  Fuel meter(fuel);
  return l.predict(s, x, meter, nullptr);
}

}  // namespace uol
