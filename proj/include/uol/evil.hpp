#pragma once

// Diagonal ("evil") sequences against registry learners, the class they
// form, and the computable learner for that class.
//
// e(n, x) is the x-th bit of 0^n 1 for x <= n; for x > n it is the bit that
// learner n does not predict after seeing e(n,0..x-1) at points 0..x-1.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "uol/core.hpp"
#include "uol/registry.hpp"

namespace uol {

struct EvilPrefix {
  std::string word;                          // the longest computed prefix
  std::optional<std::size_t> undefined_at;   // learner stalled computing this bit

  bool defined() const noexcept { return !undefined_at.has_value(); }
};

/// Direct, unmemoized computation of the first `horizon` bits of e(n, .).
EvilPrefix evil_sequence(std::size_t n, const LearnerRegistry& r, std::size_t horizon,
                         std::uint64_t fuel);

/// Memoized e(n, .) for every learner of a registry, extended on demand.
class EvilOracle {
 public:
  EvilOracle(std::shared_ptr<const LearnerRegistry> registry, std::uint64_t fuel);

  const LearnerRegistry& registry() const noexcept { return *registry_; }
  std::uint64_t fuel() const noexcept { return fuel_; }

  EvilPrefix prefix(std::size_t n, std::size_t horizon) const;
  /// e(n, x), or nothing if the learner stalls before bit x.
  std::optional<Label> bit(std::size_t n, Point x) const;

 private:
  struct Memo {
    Sample sample;  // e(n, .) as points 0..k-1
    std::optional<std::size_t> stuck_at;
  };
  void extend(std::size_t n, std::size_t length) const;

  std::shared_ptr<const LearnerRegistry> registry_;
  std::uint64_t fuel_;
  mutable std::mutex mu_;
  mutable std::vector<Memo> memo_;
};

/// The class of evil sequences of the total-flagged registry learners, in
/// registry order. Its closure is the class plus the all-zeros sequence;
/// the oracle answers exactly relative to the registry.
HypothesisClass evil_class(std::shared_ptr<const EvilOracle> oracle);

/// Registry indices of the members of evil_class, in member order.
std::vector<std::size_t> evil_class_indices(const LearnerRegistry& r);

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Predicts 0 until a 1 is revealed. With m the least point labelled 1, it
/// then predicts e(n, x) for the least n <= m whose sequence is defined and
/// consistent with the sample up to max(x, points of the sample). Throws
/// SearchExhausted when no such n exists (only on non-realizable samples).
LearnerPtr evil_class_learner(std::shared_ptr<const EvilOracle> oracle);

}  // namespace uol
