#pragma once

// Majority vote over the internal randomness of an almost total randomized
// learner.

#include <cstdint>

#include "uol/learner.hpp"

namespace uol {

class MassUnreachable : public Error {
 public:
  using Error::Error;
};

struct DerandomizeLimits {
  unsigned max_depth = 48;              // advice bits
  std::uint64_t max_nodes = 1U << 20;   // simulations per prediction
  std::uint64_t fuel = kDefaultFuel;    // per simulation
};

struct MajorityVote {
  Label value = 0;
  unsigned depth = 0;          // advice depth at which the target mass was reached
  double halted_mass = 0;
  double mass_one = 0;
  std::uint64_t simulations = 0;
};

/// Simulates the learner on every advice prefix breadth first, expanding a
/// prefix only when the learner asked for more bits, until the halted mass is
/// at least 1 - (k+1)^-2 with k = |S| + 1. The vote goes to the label with
/// more halted mass; ties go to 0. Throws MassUnreachable at the limits.
MajorityVote majority_over_advice(const Learner& randomized, const Sample& s, Point x,
                                  const DerandomizeLimits& limits = {});
/// The same vote, simulating through a session that has observed the sample.
MajorityVote majority_over_advice(LearnerSession& session, Point x, const DerandomizeLimits& limits = {});

LearnerPtr derandomize(LearnerPtr randomized, DerandomizeLimits limits = {});

}  // namespace uol
