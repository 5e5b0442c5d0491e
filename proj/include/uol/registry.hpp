#pragma once

// A finite, indexed stand-in for the enumeration of all programs. The
// diagonal constructions quantify over "learner number e"; here e ranges
// over the entries of a registry.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uol/learner.hpp"

namespace uol {

enum class TotalityFlag { kTotal, kUnknown };

struct RegistryEntry {
  std::string name;
  LearnerPtr learner;
  TotalityFlag totality = TotalityFlag::kTotal;

  bool total() const noexcept { return totality == TotalityFlag::kTotal; }
};

class LearnerRegistry {
 public:
  LearnerRegistry() = default;
  explicit LearnerRegistry(std::vector<RegistryEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const RegistryEntry& at(std::size_t e) const { return entries_.at(e); }
  const std::vector<RegistryEntry>& entries() const noexcept { return entries_; }

  /// One constructor per line, optionally followed by `total` or `unknown`.
  /// Blank lines and '#' comments are ignored.
  static LearnerRegistry parse(std::string_view text);
  std::string format() const;

  /// `diag`: six cheap total learners. `construct`: a mix of total, slow and
  /// diverging learners for the priority construction.
  static LearnerRegistry builtin(std::string_view name);

 private:
  std::vector<RegistryEntry> entries_;
};

/// Deterministic registry learners. Each reads the whole sample, so a
/// prediction on a sample of size n costs n + 1 steps unless noted.
///   const:<b>       always b
///   copy_last       the last label seen (0 on the empty sample)
///   flip_last       one minus the last label seen (1 on the empty sample)
///   majority        the more frequent label, ties to 0
///   parity          the parity of the number of 1 labels
///   slow_const:<b>  always b, after 2^n steps
///   diverge         never halts
LearnerPtr registry_learner(std::string_view constructor);
TotalityFlag default_totality(std::string_view constructor);

}  // namespace uol
