#pragma once

// Exponentially weighted averaging over a growing pool of experts with the
// doubling trick: block k >= 1 lasts 2^k rounds, uses the first k experts,
// and restarts from uniform weights.

#include <cstdint>
#include <vector>

#include "uol/core.hpp"

namespace uol {

struct ExpertPoolConfig {
  unsigned k = 1;             // block index
  std::uint64_t start = 0;    // first global round (0-based) of the block
  std::uint64_t length = 2;   // 2^k
  std::size_t experts = 1;    // min(k, pool size)
  double eta = 0;

  static ExpertPoolConfig for_block(unsigned k, std::optional<std::size_t> pool_size = std::nullopt);
  static ExpertPoolConfig for_round(std::uint64_t t, std::optional<std::size_t> pool_size = std::nullopt);
  /// sqrt(8 ln max(k,2) / 2^k)
  static double learning_rate(unsigned k);
  /// sqrt((2^k / 2) ln k): expected regret bound for the block against its
  /// best active expert.
  static double regret_bound(unsigned k);
};

unsigned block_of_round(std::uint64_t t);

/// Cumulative mistakes within the current block and the induced weights
/// w_i = exp(-eta L_i).
struct WeightVector {
  std::vector<std::uint64_t> losses;
  double eta = 0;

  WeightVector() = default;
  WeightVector(std::size_t n, double eta) : losses(n, 0), eta(eta) {}

  std::vector<double> weights() const;
  std::vector<double> probabilities() const;
};

struct ExpertDraw {
  std::size_t expert = 0;
  std::uint64_t bits = 0;
  bool fallback = false;  // the cap was reached on a boundary
};

inline constexpr unsigned kSampleBitCap = 62;

/// Reads advice bits b1 b2 ... as the dyadic interval [0.b1..bm, +2^-m) and
/// stops once it lies inside one of the half-open cumulative intervals
/// [c_{i-1}, c_i). At the cap the interval containing the left end wins.
ExpertDraw sample_expert(const std::vector<double>& probabilities, AdviceReader& advice,
                         unsigned cap = kSampleBitCap);
inline ExpertDraw sample_expert(const WeightVector& w, AdviceReader& advice, unsigned cap = kSampleBitCap) {
  return sample_expert(w.probabilities(), advice, cap);
}

class EwaDoubling final : public Learner {
 public:
  explicit EwaDoubling(Enumeration experts);

  std::string name() const override { return "ewa"; }
  bool randomized() const override { return true; }
  Label predict(const Sample& s, Point x, Fuel& fuel, AdviceReader* advice) const override;
  std::unique_ptr<LearnerSession> start() const override;

  const Enumeration& experts() const noexcept { return experts_; }
  Hypothesis expert(std::size_t i) const;

  /// Weights for the round following sample s.
  WeightVector weights_after(const Sample& s, Fuel& fuel) const;

 private:
  Enumeration experts_;
};

class EwaSession final : public LearnerSession {
 public:
  explicit EwaSession(const EwaDoubling& learner);
  Label predict(Point x, Fuel& fuel, AdviceReader* advice) override;
  void observe(const LabeledPoint& p) override;

  const WeightVector& weights() const noexcept { return w_; }
  const ExpertPoolConfig& block() const noexcept { return cfg_; }
  std::size_t last_expert() const noexcept { return last_expert_; }

 private:
  void enter_round();

  const EwaDoubling& owner_;
  ExpertPoolConfig cfg_;
  WeightVector w_;
  std::size_t last_expert_ = 0;
};

std::shared_ptr<const EwaDoubling> ewa_doubling(Enumeration experts);

}  // namespace uol
