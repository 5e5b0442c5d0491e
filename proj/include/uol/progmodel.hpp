#pragma once

// Program model: terms of a small hypothesis language, a bijective numbering
// of terms onto the naturals, and step-bounded evaluation.
//
// Numbering. An index e splits by residue into a constructor tag (e mod 4)
// and a payload (e div 4):
//   0  EventuallyConstant  payload = 2*word_number(prefix) + tail
//   1  Threshold           payload = 2*n + kind, n = cut (nat) or zigzag(cut) (int)
//   2  FiniteTable         payload = 2*ternary(table) + default
//   3  Machine             payload = list number of the statement list
// word_number(w) is the natural whose binary form is "1"w, minus one.
// ternary(table) reads digit x as 0 (absent), 1 (x -> 0) or 2 (x -> 1).
// Statement lists use 0 for the empty list and 1 + pair(head, tail) for a
// cons cell; a statement s splits by s mod 3 into inc r, dec r and
// while r {body} with payload r or pair(r, body). pair is Cantor pairing.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "uol/types.hpp"

namespace uol {

using Natural = boost::multiprecision::cpp_int;

/// A Goedel number of a program term.
class ProgramIndex {
 public:
  ProgramIndex() = default;
  explicit ProgramIndex(Natural value);
  explicit ProgramIndex(std::uint64_t value) : value_(value) {}

  const Natural& value() const noexcept { return value_; }
  std::string to_string() const;
  static ProgramIndex parse(std::string_view decimal);

  friend bool operator==(const ProgramIndex&, const ProgramIndex&) = default;
  friend auto operator<=>(const ProgramIndex& a, const ProgramIndex& b) {
    return a.value_ < b.value_ ? std::strong_ordering::less
           : b.value_ < a.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  Natural value_ = 0;
};

/// Interpreter steps allowed for one evaluation.
struct StepBudget {
  std::uint64_t s = 0;
};

// ---- the while-language ----------------------------------------------------

struct Statement;
using Block = std::vector<Statement>;

struct Statement {
  enum class Op { kInc, kDec, kWhile };
  Op op = Op::kInc;
  Natural reg = 0;
  Block body;  // kWhile only

  friend bool operator==(const Statement&, const Statement&) = default;
};

// ---- terms -----------------------------------------------------------------

struct EventuallyConstant {
  std::string prefix;  // '0'/'1'
  Label tail = 0;
  friend bool operator==(const EventuallyConstant&, const EventuallyConstant&) = default;
};

enum class ThresholdKind { kNat, kInt };

/// h(x) = 1 iff x >= cut on the naturals; on the integers the point x is
/// first mapped through the zigzag bijection 0,1,2,3,4,... -> 0,-1,1,-2,2,...
struct Threshold {
  ThresholdKind kind = ThresholdKind::kNat;
  Natural cut = 0;  // signed for kInt
  friend bool operator==(const Threshold&, const Threshold&) = default;
};

struct FiniteTable {
  std::map<Point, Label> table;
  Label fallback = 0;
  friend bool operator==(const FiniteTable&, const FiniteTable&) = default;
};

/// Registers start at zero except r0, which holds the input. The output is
/// 1 iff r1 is nonzero when the program halts. Each executed statement and
/// each loop test costs one step.
struct Machine {
  Block code;
  friend bool operator==(const Machine&, const Machine&) = default;
};

using ProgramTerm = std::variant<EventuallyConstant, Threshold, FiniteTable, Machine>;

bool is_structurally_total(const ProgramTerm& p);

ProgramIndex encode(const ProgramTerm& p);
ProgramTerm decode(const ProgramIndex& e);

/// Result of running a program for a bounded number of steps.
struct BoundedResult {
  std::optional<Label> value;  // empty: still running
  std::uint64_t steps = 0;

  bool halted() const noexcept { return value.has_value(); }
};

BoundedResult run_bounded(const ProgramTerm& p, Point x, std::uint64_t steps);
BoundedResult eval_bounded(const ProgramIndex& e, Point x, StepBudget s);

/// Evaluates under a shared meter; throws FuelExhausted when the meter runs dry.
Label evaluate_term(const ProgramTerm& p, Point x, Fuel& fuel);

/// f_i(alpha): the index of the program computing alpha followed by i forever.
ProgramIndex make_eventually_constant(std::string_view alpha, Label tail);

// ---- surface syntax --------------------------------------------------------
//
//   ec:<bits>:<tail>          eventually constant, e.g. ec:001:0
//   thr:nat:<cut> | thr:int:<cut>
//   tab:<x>=<b>,...:<default> finite table, e.g. tab:5=1:0
//   m:<stmts>                 machine, statements `inc r`, `dec r`,
//                             `while r { ... }` separated by `;`
// Shorthands accepted on input: zeros, ones, singleton@<x>.

ProgramTerm parse_term(std::string_view text);
std::string format_term(const ProgramTerm& p);

/// One term per line; blank lines and lines starting with '#' are skipped.
std::vector<ProgramTerm> parse_program_file(std::string_view contents);

// ---- pairing helpers -------------------------------------------------------

Natural cantor_pair(const Natural& a, const Natural& b);
std::pair<Natural, Natural> cantor_unpair(const Natural& z);
std::uint64_t cantor_pair_u64(std::uint64_t a, std::uint64_t b);

/// word_number and its inverse: the bijection between binary words and naturals.
Natural word_to_natural(std::string_view bits);
std::string natural_to_word(const Natural& n);

/// Zigzag bijection between the naturals and the integers.
Natural zigzag_to_natural(const Natural& z);
Natural natural_to_zigzag(const Natural& n);

// ---- computably enumerable sets -------------------------------------------

/// A deterministic enumeration procedure. Each call performs one step and
/// may emit one index.
class CeGenerator {
 public:
  virtual ~CeGenerator() = default;
  virtual std::optional<ProgramIndex> step() = 0;
};

/// Dovetails a relation R(n, s): n is emitted the first time step t with
/// unpair(t) = (n, s) satisfies R.
class DovetailGenerator final : public CeGenerator {
 public:
  explicit DovetailGenerator(std::function<bool(std::uint64_t n, std::uint64_t s)> relation,
                             std::function<ProgramIndex(std::uint64_t n)> to_index);
  std::optional<ProgramIndex> step() override;

 private:
  std::function<bool(std::uint64_t, std::uint64_t)> relation_;
  std::function<ProgramIndex(std::uint64_t)> to_index_;
  std::uint64_t t_ = 0;
  std::vector<bool> emitted_;
};

/// Emits f(0), f(1), ... one per step; stops when f returns nothing.
class SequenceGenerator final : public CeGenerator {
 public:
  explicit SequenceGenerator(std::function<std::optional<ProgramIndex>(std::uint64_t)> f)
      : f_(std::move(f)) {}
  std::optional<ProgramIndex> step() override;

 private:
  std::function<std::optional<ProgramIndex>(std::uint64_t)> f_;
  std::uint64_t next_ = 0;
  bool done_ = false;
};

std::unique_ptr<CeGenerator> singletons_generator();
std::unique_ptr<CeGenerator> finite_support_generator();
std::unique_ptr<CeGenerator> empty_generator();

/// Runs a fresh generator for `steps` steps and returns what it emitted.
std::vector<ProgramIndex> enumerate_ce(const std::function<std::unique_ptr<CeGenerator>()>& make,
                                       std::uint64_t steps);

}  // namespace uol
