#include "uol/evil.hpp"

#include <algorithm>

namespace uol {

namespace {

Label diagonal_bit(Label prediction) { return prediction == 1 ? 0 : 1; }

}  // namespace

EvilPrefix evil_sequence(std::size_t n, const LearnerRegistry& r, std::size_t horizon,
                         std::uint64_t fuel) {
  if (n >= r.size()) throw Error("registry index out of range");
  EvilPrefix out;
  Sample sample;
  for (std::size_t k = 0; k < horizon; ++k) {
    Label b;
    if (k < n) {
      b = 0;
    } else if (k == n) {
      b = 1;
    } else {
      try {
        Fuel meter(fuel);
        b = diagonal_bit(r.at(n).learner->predict(sample, k, meter, nullptr));
      } catch (const FuelExhausted&) {
        out.undefined_at = k;
        return out;
      }
    }
    out.word.push_back(static_cast<char>('0' + b));
    sample.push_back({k, b});
  }
  return out;
}

EvilOracle::EvilOracle(std::shared_ptr<const LearnerRegistry> registry, std::uint64_t fuel)
    : registry_(std::move(registry)), fuel_(fuel), memo_(registry_->size()) {}

void EvilOracle::extend(std::size_t n, std::size_t length) const {
  Memo& m = memo_.at(n);
  const Learner& learner = *registry_->at(n).learner;
  while (m.sample.size() < length && !m.stuck_at) {
    std::size_t k = m.sample.size();
    Label b;
    if (k < n) {
      b = 0;
    } else if (k == n) {
      b = 1;
    } else {
      try {
        Fuel meter(fuel_);
        b = diagonal_bit(learner.predict(m.sample, k, meter, nullptr));
      } catch (const FuelExhausted&) {
        m.stuck_at = k;
        break;
      }
    }
    m.sample.push_back({k, b});
  }
}

EvilPrefix EvilOracle::prefix(std::size_t n, std::size_t horizon) const {
  std::lock_guard lock(mu_);
  extend(n, horizon);
  const Memo& m = memo_.at(n);
  EvilPrefix out;
  std::size_t len = std::min(horizon, m.sample.size());
  out.word.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.word.push_back(static_cast<char>('0' + m.sample[i].y));
  if (len < horizon) out.undefined_at = m.stuck_at;
  return out;
}

std::optional<Label> EvilOracle::bit(std::size_t n, Point x) const {
  std::lock_guard lock(mu_);
  extend(n, x + 1);
  const Memo& m = memo_.at(n);
  if (x < m.sample.size()) return m.sample[x].y;
  return std::nullopt;
}

namespace {

class EvilHypothesis final : public HypothesisImpl {
 public:
  EvilHypothesis(std::shared_ptr<const EvilOracle> oracle, std::size_t n)
      : oracle_(std::move(oracle)), n_(n) {}

  Label eval(Point x, Fuel& fuel) const override {
    fuel.charge(1);
    auto b = oracle_->bit(n_, x);
    if (!b) throw FuelExhausted(oracle_->fuel());
    return *b;
  }
  std::string describe() const override {
    return "evil:" + std::to_string(n_) + ":" + oracle_->registry().at(n_).name;
  }

 private:
  std::shared_ptr<const EvilOracle> oracle_;
  std::size_t n_;
};

Hypothesis zeros() { return Hypothesis::from_term(EventuallyConstant{"", 0}); }

bool evil_consistent(const EvilOracle& oracle, std::size_t n, const Sample& s) {
  for (const auto& p : s) {
    auto b = oracle.bit(n, p.x);
    if (!b || *b != p.y) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> evil_class_indices(const LearnerRegistry& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r.at(i).total()) out.push_back(i);
  return out;
}

HypothesisClass evil_class(std::shared_ptr<const EvilOracle> oracle) {
  HypothesisClass c;
  c.name = "evil";
  c.kind = ClassKind::kBuiltin;
  auto indices = evil_class_indices(oracle->registry());
  std::vector<Hypothesis> members;
  for (std::size_t n : indices) members.emplace_back(std::make_shared<EvilHypothesis>(oracle, n));
  c.members = Enumeration::of(members);
  std::vector<Hypothesis> closure{zeros()};
  closure.insert(closure.end(), members.begin(), members.end());
  c.closure = Enumeration::of(std::move(closure));
  c.exact = [oracle, indices, members](const Sample& s) -> std::optional<Hypothesis> {
    if (has_conflict(s)) return std::nullopt;
    std::optional<Point> first_one;
    Point max_x = 0;
    for (const auto& p : s) {
      if (p.y != 0 && p.y != 1) return std::nullopt;
      if (p.y == 1) first_one = first_one ? std::min(*first_one, p.x) : p.x;
      max_x = std::max(max_x, p.x);
    }
    if (!first_one) {
      // Members starting with 0^(max_x+1) exist for every large enough n;
      // the registry may be too short to exhibit one, in which case the
      // all-zeros limit is the witness.
      for (std::size_t i = 0; i < indices.size(); ++i)
        if (indices[i] > max_x || s.empty()) return members[i];
      return zeros();
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (indices[i] > *first_one) break;
      if (evil_consistent(*oracle, indices[i], s)) return members[i];
    }
    return std::nullopt;
  };
  return c;
}

namespace {

class EvilClassLearner final : public Learner {
 public:
  explicit EvilClassLearner(std::shared_ptr<const EvilOracle> oracle) : oracle_(std::move(oracle)) {}

  std::string name() const override { return "evil_class_learner"; }
  Totality total_on() const override { return Totality::kRealizableOnly; }

  Label predict(const Sample& s, Point x, Fuel& fuel, AdviceReader*) const override {
    std::optional<Point> m;
    for (const auto& p : s)
      if (p.y == 1) m = m ? std::min(*m, p.x) : p.x;
    fuel.charge(s.size() + 1);
    if (!m) return 0;
    std::size_t last = std::min<std::size_t>(*m, oracle_->registry().size() - 1);
    for (std::size_t n = 0; n <= last; ++n) {
      fuel.charge(s.size() + 1);
      if (!oracle_->bit(n, x)) continue;
      if (!evil_consistent(*oracle_, n, s)) continue;
      return *oracle_->bit(n, x);
    }
    throw SearchExhausted("no evil sequence with index <= " + std::to_string(*m) +
                          " is consistent with the sample");
  }

 private:
  std::shared_ptr<const EvilOracle> oracle_;
};

}  // namespace

LearnerPtr evil_class_learner(std::shared_ptr<const EvilOracle> oracle) {
  return std::make_shared<EvilClassLearner>(std::move(oracle));
}

}  // namespace uol
