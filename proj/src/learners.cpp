#include "uol/learners.hpp"

#include <charconv>

namespace uol {

namespace {

Label eval_charged(const Hypothesis& h, Point x, Fuel& fuel) {
  fuel.charge(1);
  return h(x);
}

bool consistent_charged(const Hypothesis& h, const Sample& s, std::size_t from, Fuel& fuel) {
  for (std::size_t i = from; i < s.size(); ++i)
    if (eval_charged(h, s[i].x, fuel) != s[i].y) return false;
  return true;
}

Hypothesis nth(const Enumeration& z, std::size_t i) {
  if (z.size && *z.size == 0) throw Error("empty enumeration");
  return z.padded(i);
}

std::size_t index_charged(const Enumeration& z, const Sample& s, Fuel& fuel) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Past the end of a finite enumeration every index names the last element.
    if (z.size && i >= *z.size) return s.size();
    if (consistent_charged(nth(z, i), s, 0, fuel)) return i;
  }
  return s.size();
}

}  // namespace

std::size_t enumeration_index(const Enumeration& z, const Sample& s) {
  Fuel fuel(~std::uint64_t{0});
  return index_charged(z, s, fuel);
}

EnumerationLearner::EnumerationLearner(Enumeration z, std::string name)
    : z_(std::move(z)), name_(std::move(name)) {
  if (!z_) throw Error("enumeration learner needs an enumeration");
}

Label EnumerationLearner::predict(const Sample& s, Point x, Fuel& fuel, AdviceReader*) const {
  return eval_charged(nth(z_, index_charged(z_, s, fuel)), x, fuel);
}

std::unique_ptr<LearnerSession> EnumerationLearner::start() const {
  return std::make_unique<EnumerationSession>(*this);
}

EnumerationSession::EnumerationSession(const EnumerationLearner& learner)
    : LearnerSession(learner), owner_(learner) {}

std::size_t EnumerationSession::index(Fuel& fuel) {
  const Enumeration& z = owner_.enumeration();
  while (candidate_ < sample_.size()) {
    if (z.size && candidate_ >= *z.size) return sample_.size();
    if (consistent_charged(nth(z, candidate_), sample_, verified_upto_, fuel)) {
      verified_upto_ = sample_.size();
      return candidate_;
    }
    ++candidate_;
    verified_upto_ = 0;
  }
  return sample_.size();
}

Label EnumerationSession::predict(Point x, Fuel& fuel, AdviceReader*) {
  return eval_charged(nth(owner_.enumeration(), index(fuel)), x, fuel);
}

void EnumerationSession::observe(const LabeledPoint& p) { sample_.push_back(p); }

LearnerPtr enumeration_learner(Enumeration z, std::string name) {
  return std::make_shared<EnumerationLearner>(std::move(z), std::move(name));
}

LearnerPtr proper_learner(const HypothesisClass& c) {
  if (!c.closure) throw Error("class '" + c.name + "' has no closure enumeration");
  return enumeration_learner(c.closure, "proper");
}

namespace {

class RandomLearner final : public Learner {
 public:
  enum class Kind { kCoin, kVote, kGeometric, kNoisyCopy, kDepthMix };
  RandomLearner(std::string name, Kind kind, std::size_t r = 1) : name_(std::move(name)), kind_(kind), r_(r) {}

  std::string name() const override { return name_; }
  bool randomized() const override { return true; }

  Label predict(const Sample& s, Point x, Fuel& fuel, AdviceReader* advice) const override {
    if (!advice) throw AdviceExhausted();
    auto bit = [&] {
      fuel.charge(1);
      return advice->next_bit();
    };
    Label last = s.empty() ? 0 : s.back().y;
    switch (kind_) {
      case Kind::kCoin: return bit();
      case Kind::kVote: {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < r_; ++i) ones += static_cast<std::size_t>(bit());
        return 2 * ones > r_ ? 1 : 0;
      }
      case Kind::kGeometric: {
        std::uint64_t n = 1;
        while (bit() == 0) ++n;
        return static_cast<Label>((n + s.size() + x) % 2);
      }
      case Kind::kNoisyCopy: {
        Label a = bit();
        if (a == 0) return last;
        return bit() == 1 ? 1 - last : last;
      }
      case Kind::kDepthMix: {
        std::size_t n = (s.size() + x) % 4 + 1;
        Label p = 0;
        for (std::size_t i = 0; i < n; ++i) p ^= bit();
        return p ^ last;
      }
    }
    return 0;
  }

 private:
  std::string name_;
  Kind kind_;
  std::size_t r_;
};

}  // namespace

LearnerPtr randomized_learner(std::string_view name) {
  using K = RandomLearner::Kind;
  std::string n(name);
  if (name == "coin") return std::make_shared<RandomLearner>(n, K::kCoin);
  if (name == "geometric") return std::make_shared<RandomLearner>(n, K::kGeometric);
  if (name == "noisy_copy") return std::make_shared<RandomLearner>(n, K::kNoisyCopy);
  if (name == "depth_mix") return std::make_shared<RandomLearner>(n, K::kDepthMix);
  if (name.starts_with("vote:")) {
    std::size_t r = 0;
    auto rest = name.substr(5);
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), r);
    if (ec != std::errc{} || p != rest.data() + rest.size() || r == 0)
      throw ParseError("vote:<r> needs a positive count");
    return std::make_shared<RandomLearner>(n, K::kVote, r);
  }
  throw UnknownName("unknown randomized learner '" + n + "'");
}

std::vector<std::string> randomized_learner_names() {
  return {"coin", "vote:3", "geometric", "noisy_copy", "depth_mix"};
}

}  // namespace uol
