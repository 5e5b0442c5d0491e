#include "uol/derandomize.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "uol/advice.hpp"

namespace uol {

namespace {

using u128 = unsigned __int128;

}  // namespace

MajorityVote majority_over_advice(const Learner& lr, const Sample& s, Point x,
                                  const DerandomizeLimits& limits) {
  auto session = lr.start();
  for (const auto& p : s) session->observe(p);
  return majority_over_advice(*session, x, limits);
}

MajorityVote majority_over_advice(LearnerSession& session, Point x, const DerandomizeLimits& limits) {
  const Sample& s = session.sample();
  const u128 k = s.size() + 1;
  const u128 k1sq = (k + 1) * (k + 1);
  if (limits.max_depth > 64) throw Error("derandomize depth is limited to 64");

  MajorityVote vote;
  // Halted masses as numerators over 2^depth.
  u128 mass0 = 0, mass1 = 0;
  std::vector<std::string> frontier{""};
  for (unsigned depth = 0;; ++depth) {
    std::vector<std::string> next;
    for (const auto& prefix : frontier) {
      ++vote.simulations;
      PrefixReader reader(prefix);
      Fuel fuel(limits.fuel);
      try {
        Label y = session.predict(x, fuel, &reader);
        (y == 1 ? mass1 : mass0) += 1;
      } catch (const AdviceExhausted&) {
        next.push_back(prefix + '0');
        next.push_back(prefix + '1');
      } catch (const FuelExhausted&) {
        // Does not halt on this prefix; its mass never counts.
      }
    }
    // halted >= 1 - (k+1)^-2  <=>  (2^d - halted) (k+1)^2 <= 2^d
    const u128 whole = u128{1} << depth;
    const u128 halted = mass0 + mass1;
    if ((whole - halted) * k1sq <= whole) {
      vote.value = mass1 > mass0 ? 1 : 0;
      vote.depth = depth;
      vote.halted_mass = std::ldexp(static_cast<double>(halted), -static_cast<int>(depth));
      vote.mass_one = std::ldexp(static_cast<double>(mass1), -static_cast<int>(depth));
      return vote;
    }
    if (next.empty() || depth == limits.max_depth || vote.simulations + next.size() > limits.max_nodes)
      throw MassUnreachable("halted advice mass stays below 1-(k+1)^-2 for k=" +
                            std::to_string(s.size() + 1) + " up to depth " + std::to_string(depth));
    mass0 <<= 1;
    mass1 <<= 1;
    frontier = std::move(next);
  }
}

namespace {

class Derandomized final : public Learner {
 public:
  Derandomized(LearnerPtr inner, DerandomizeLimits limits) : inner_(std::move(inner)), limits_(limits) {}

  std::string name() const override { return "derandomized-" + inner_->name(); }
  Totality total_on() const override { return inner_->total_on(); }

  Label predict(const Sample& s, Point x, Fuel& fuel, AdviceReader*) const override {
    auto vote = majority_over_advice(*inner_, s, x, limits_);
    fuel.charge(vote.simulations);
    return vote.value;
  }

  std::unique_ptr<LearnerSession> start() const override;

  const Learner& inner() const noexcept { return *inner_; }
  const DerandomizeLimits& limits() const noexcept { return limits_; }

 private:
  LearnerPtr inner_;
  DerandomizeLimits limits_;
};

class DerandomizedSession final : public LearnerSession {
 public:
  explicit DerandomizedSession(const Derandomized& owner)
      : LearnerSession(owner), owner_(owner), inner_(owner.inner().start()) {}

  Label predict(Point x, Fuel& fuel, AdviceReader*) override {
    auto vote = majority_over_advice(*inner_, x, owner_.limits());
    fuel.charge(vote.simulations);
    return vote.value;
  }
  void observe(const LabeledPoint& p) override {
    sample_.push_back(p);
    inner_->observe(p);
  }

 private:
  const Derandomized& owner_;
  std::unique_ptr<LearnerSession> inner_;
};

std::unique_ptr<LearnerSession> Derandomized::start() const {
  return std::make_unique<DerandomizedSession>(*this);
}

}  // namespace

LearnerPtr derandomize(LearnerPtr randomized, DerandomizeLimits limits) {
  return std::make_shared<Derandomized>(std::move(randomized), limits);
}

}  // namespace uol
