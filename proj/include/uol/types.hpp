#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uol {

/// A point of the domain (the naturals).
using Point = std::uint64_t;

/// A label. Binary classes use {0,1}; coloring classes use {1..k}.
using Label = int;

struct LabeledPoint {
  Point x = 0;
  Label y = 0;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

/// Ordered labeled points. Repeated x values are allowed, including
/// conflicting ones; realizability checks reject those.
using Sample = std::vector<LabeledPoint>;

/// A finite word of labels, read as the labels of points 0, 1, ..., |w|-1.
using Word = std::vector<Label>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a machine-backed computation does not halt within its budget.
class FuelExhausted : public Error {
 public:
  explicit FuelExhausted(std::uint64_t budget)
      : Error("fuel exhausted after " + std::to_string(budget) + " steps"), budget_(budget) {}
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Step meter shared by every computation that runs under a budget.
class Fuel {
 public:
  explicit Fuel(std::uint64_t budget) : budget_(budget) {}

  void charge(std::uint64_t steps = 1) {
    if (steps > budget_ - used_) {
      used_ = budget_;
      throw FuelExhausted(budget_);
    }
    used_ += steps;
  }

  std::uint64_t budget() const noexcept { return budget_; }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t remaining() const noexcept { return budget_ - used_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// Text forms. Binary words are ASCII '0'/'1'; words over larger alphabets
// are comma separated. Samples are comma-separated `x:y` pairs.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
Sample parse_sample(std::string_view text);
std::string format_sample(const Sample& s);

/// The sample ((0,w(0)), ..., (|w|-1, w(|w|-1))).
Sample sample_of_word(const Word& w);

}  // namespace uol
