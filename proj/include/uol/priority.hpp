#pragma once

// Timestep simulation of the priority construction of a class that is
// learnable but has no proper computable learner. Requirement e works
// against registry learner e.
//
// The enumerated programs are all of the form f_0(0^e 1^j): the eventually
// zero sequence with prefix 0^e 1^j. Entries are stored as (e, j) and
// turned into program indices on demand.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uol/core.hpp"
#include "uol/progmodel.hpp"
#include "uol/registry.hpp"

namespace uol {

/// The probe at timestep s gets s * multiplier steps.
struct FuelSchedule {
  std::uint64_t multiplier = 1;
  std::uint64_t budget(std::size_t s) const { return static_cast<std::uint64_t>(s) * multiplier; }
};

struct ConstructionEntry {
  std::size_t requirement = 0;  // e
  std::size_t ones = 1;         // j
  std::size_t added_at = 0;     // timestep

  std::string word() const;  // 0^e 1^j
  std::string notation() const;  // "0^e1^j"
  ProgramIndex index() const;    // f_0(0^e 1^j)
  Hypothesis hypothesis() const;
};

struct ProbeEvent {
  std::size_t timestep = 0;
  std::size_t requirement = 0;
  std::size_t gamma_length = 0;
  std::uint64_t budget = 0;
  std::optional<Label> result;  // nothing: still running at the budget
};

struct RequirementState {
  std::size_t ones = 1;  // gamma = 0^e 1^ones
  bool active = true;
};

class ConstructionTrace {
 public:
  std::size_t timesteps() const noexcept { return a_size_.size(); }
  std::size_t requirements() const noexcept { return requirements_; }
  const std::vector<std::string>& learner_names() const noexcept { return names_; }

  /// Entries in enumeration order; A_s is the prefix of length a_size(s).
  const std::vector<ConstructionEntry>& entries() const noexcept { return entries_; }
  std::size_t a_size(std::size_t s) const { return a_size_.at(s); }
  std::vector<ConstructionEntry> a_at(std::size_t s) const;

  /// State of requirement e at the end of timestep s.
  RequirementState state(std::size_t e, std::size_t s) const;
  std::string gamma(std::size_t e, std::size_t s) const;
  /// Timestep at which requirement e became inactive.
  std::optional<std::size_t> deactivated_at(std::size_t e) const { return deactivated_.at(e); }

  const std::vector<ProbeEvent>& probes() const noexcept { return probes_; }

  /// The class enumerated by the end of the run.
  HypothesisClass as_class() const;

  /// One line per timestep with its additions, probe results and states.
  std::string format() const;

 private:
  friend ConstructionTrace priority_construct(const LearnerRegistry&, std::size_t, FuelSchedule);

  std::size_t requirements_ = 0;
  std::vector<std::string> names_;
  std::vector<ConstructionEntry> entries_;
  std::vector<std::size_t> a_size_;
  // (timestep, ones) after each change of gamma, per requirement.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> gamma_changes_;
  std::vector<std::optional<std::size_t>> deactivated_;
  std::vector<ProbeEvent> probes_;
};

/// Runs timesteps 0..s_max. Registry learners are probed without advice and
/// are expected to be deterministic.
ConstructionTrace priority_construct(const LearnerRegistry& r, std::size_t s_max,
                                     FuelSchedule schedule = {});

}  // namespace uol
