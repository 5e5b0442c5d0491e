#pragma once

#include <functional>
#include <memory>
#include <string>

#include "uol/progmodel.hpp"
#include "uol/types.hpp"

namespace uol {

/// Behaviour behind a Hypothesis. Implementations must be safe to call from
/// several threads at once.
class HypothesisImpl {
 public:
  virtual ~HypothesisImpl() = default;
  virtual Label eval(Point x, Fuel& fuel) const = 0;
  virtual std::string describe() const = 0;
  virtual const ProgramTerm* term() const { return nullptr; }
};

/// A total function on the naturals, as a program term or a computed
/// function, together with the step budget granted to each evaluation.
class Hypothesis {
 public:
  Hypothesis(std::shared_ptr<const HypothesisImpl> impl, std::uint64_t fuel = kDefaultFuel);

  static Hypothesis from_term(ProgramTerm term, std::uint64_t fuel = kDefaultFuel);
  static Hypothesis from_text(std::string_view term_text, std::uint64_t fuel = kDefaultFuel);
  /// Wraps a structurally total function; each evaluation costs one step.
  static Hypothesis from_function(std::string name, std::function<Label(Point)> f);

  /// Evaluates with a fresh meter of fuel() steps.
  Label operator()(Point x) const;
  Label eval(Point x, Fuel& fuel) const { return impl_->eval(x, fuel); }

  std::uint64_t fuel() const noexcept { return fuel_; }
  Hypothesis with_fuel(std::uint64_t fuel) const { return Hypothesis(impl_, fuel); }
  std::string describe() const { return impl_->describe(); }
  const ProgramTerm* term() const { return impl_->term(); }

 private:
  std::shared_ptr<const HypothesisImpl> impl_;
  std::uint64_t fuel_;
};

}  // namespace uol
