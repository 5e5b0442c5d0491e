#pragma once

// Consistency, realizability and closure oracles over hypothesis classes.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uol/hypothesis.hpp"
#include "uol/learner.hpp"
#include "uol/types.hpp"

namespace uol {

Label evaluate(const Hypothesis& h, Point x);

/// True iff h(x) = y for every (x, y) in s.
bool consistent(const Sample& s, const Hypothesis& h);

/// True iff some point occurs in s with two different labels.
bool has_conflict(const Sample& s);

/// The word h(0) h(1) ... h(n-1).
Word prefix_word(const Hypothesis& h, std::size_t n);

/// An enumeration z_0, z_1, ... of hypotheses. Finite enumerations report
/// their size and return nothing past the end.
struct Enumeration {
  std::function<std::optional<Hypothesis>(std::size_t)> at;
  std::optional<std::size_t> size;

  explicit operator bool() const { return static_cast<bool>(at); }
  std::optional<Hypothesis> operator()(std::size_t i) const { return at(i); }

  /// Indexing used by the enumeration learner: a finite enumeration keeps
  /// repeating its last element.
  Hypothesis padded(std::size_t i) const;

  static Enumeration of(std::vector<Hypothesis> items);
};

enum class Verdict { kYes, kNo, kUnknown };
std::string to_string(Verdict v);

struct ExtendabilityAnswer {
  Verdict verdict = Verdict::kUnknown;
  std::optional<std::size_t> witness_index;  // position in the member enumeration
  std::optional<Hypothesis> witness;         // a consistent function

  bool yes() const noexcept { return verdict == Verdict::kYes; }
};

/// Decides sample realizability exactly; returns a consistent function on
/// success. For classes whose closure strictly contains the class the
/// witness may be a closure element (e.g. the all-zeros limit).
using ExactOracle = std::function<std::optional<Hypothesis>(const Sample&)>;

enum class ClassKind { kExplicitFinite, kEnumerated, kBuiltin };

struct HypothesisClass {
  std::string name;
  ClassKind kind = ClassKind::kEnumerated;
  std::vector<Label> labels{0, 1};
  Enumeration members;
  /// An enumeration of a superset of the closure (usually the closure itself).
  Enumeration closure;
  ExactOracle exact;

  std::size_t label_arity() const noexcept { return labels.size(); }
  bool has_exact_oracle() const noexcept { return static_cast<bool>(exact); }
};

inline constexpr std::size_t kDefaultBudget = 4096;

/// yes if some hypothesis among the first `budget` members (or the exact
/// oracle) is consistent with s; no only from an exact oracle or after
/// exhausting a finite class; unknown otherwise.
ExtendabilityAnswer is_realizable(const Sample& s, const HypothesisClass& c,
                                  std::size_t budget = kDefaultBudget);

/// Whether w is a prefix of some element of the closure.
ExtendabilityAnswer closure_extendable(const HypothesisClass& c, const Word& w, std::size_t horizon,
                                       std::size_t budget = kDefaultBudget);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num * b.den == b.num * a.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Baire distance 1/(least disagreement); a disagreement at point 0 maps to 2.
struct BaireDistance {
  Rational value;
  bool horizon_limited = false;  // no disagreement below the horizon
  std::optional<Point> first_disagreement;
};

BaireDistance baire_distance(const Hypothesis& f, const Hypothesis& g, std::size_t horizon);

/// Builds U_0 = (), U_{n+1} = U_n + (x_n, h(x_n)) with x_n the least point
/// below the horizon where L(U_n, .) and h disagree.
struct ForcingResult {
  Sample sample;
  bool exhausted = false;
  std::size_t extensions = 0;
};

ForcingResult forcing_sample(const Learner& learner, const Hypothesis& h, std::size_t max_rounds,
                             std::size_t horizon, std::uint64_t fuel = kDefaultFuel);

}  // namespace uol
