#include "uol/adversaries.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "uol/random.hpp"

namespace uol {

PointOrder identity_order() {
  return {"identity", [](std::uint64_t t) -> Point { return t; }};
}

PointOrder permutation_order(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("permutation order needs n >= 1");
  auto perm = std::make_shared<std::vector<Point>>(n);
  std::iota(perm->begin(), perm->end(), Point{0});
  std::mt19937_64 rng(seed);
  // Fisher-Yates with an explicit draw, so the result does not depend on the
  // standard library's shuffle.
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap((*perm)[i], (*perm)[j]);
  }
  return {"random:" + std::to_string(n), [perm](std::uint64_t t) { return (*perm)[t % perm->size()]; }};
}

PointOrder uniform_order(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error("uniform order needs n >= 1");
  return {"uniform:" + std::to_string(n),
          [n, seed](std::uint64_t t) -> Point { return mix_seed(seed, t) % n; }};
}

PointOrder cycle_order(std::size_t n) {
  if (n == 0) throw Error("cycle order needs n >= 1");
  return {"cycle:" + std::to_string(n), [n](std::uint64_t t) -> Point { return t % n; }};
}

PointOrder repeat_order(Point x) {
  return {"repeat:" + std::to_string(x), [x](std::uint64_t) { return x; }};
}

namespace {

class FixedTarget final : public Adversary {
 public:
  FixedTarget(Hypothesis h, PointOrder order) : h_(std::move(h)), order_(std::move(order)) {}
  std::string name() const override { return "fixed:" + h_.describe() + "@" + order_.name; }
  bool realizable_contract() const override { return true; }
  Point next_point(const Sample&, std::uint64_t t) override { return order_(t); }
  Label reveal(const Sample&, Point x, Label) override { return h_(x); }

 private:
  Hypothesis h_;
  PointOrder order_;
};

class WorstCase final : public Adversary {
 public:
  WorstCase(HypothesisClass c, PointOrder order, std::size_t budget)
      : c_(std::move(c)), order_(std::move(order)), budget_(budget) {}
  std::string name() const override { return "worst_case:" + c_.name + "@" + order_.name; }
  bool realizable_contract() const override { return true; }
  Point next_point(const Sample&, std::uint64_t t) override { return order_(t); }
  Label reveal(const Sample& history, Point x, Label prediction) override {
    Sample s = history;
    s.push_back({x, 0});
    for (Label y : c_.labels) {
      if (y == prediction) continue;
      s.back().y = y;
      if (is_realizable(s, c_, budget_).yes()) return y;
    }
    return prediction;
  }

 private:
  HypothesisClass c_;
  PointOrder order_;
  std::size_t budget_;
};

class EvilAdversary final : public Adversary {
 public:
  EvilAdversary(std::shared_ptr<const EvilOracle> oracle, std::size_t n) : oracle_(std::move(oracle)), n_(n) {
    if (n_ >= oracle_->registry().size()) throw Error("registry index out of range");
  }
  std::string name() const override { return "evil:" + std::to_string(n_); }
  bool realizable_contract() const override { return true; }
  Point next_point(const Sample&, std::uint64_t t) override { return t; }
  Label reveal(const Sample&, Point x, Label) override {
    auto b = oracle_->bit(n_, x);
    if (!b) throw FuelExhausted(oracle_->fuel());
    return *b;
  }

 private:
  std::shared_ptr<const EvilOracle> oracle_;
  std::size_t n_;
};

class Agnostic final : public Adversary {
 public:
  Agnostic(std::string name, std::function<LabeledPoint(std::uint64_t)> gen)
      : name_(std::move(name)), gen_(std::move(gen)) {}
  std::string name() const override { return name_; }
  bool realizable_contract() const override { return false; }
  Point next_point(const Sample&, std::uint64_t t) override {
    current_ = gen_(t);
    return current_.x;
  }
  Label reveal(const Sample&, Point, Label) override { return current_.y; }

 private:
  std::string name_;
  std::function<LabeledPoint(std::uint64_t)> gen_;
  LabeledPoint current_;
};

}  // namespace

AdversaryPtr fixed_target(Hypothesis h, PointOrder order) {
  return std::make_unique<FixedTarget>(std::move(h), std::move(order));
}

AdversaryPtr worst_case(HypothesisClass c, PointOrder order, std::size_t budget) {
  return std::make_unique<WorstCase>(std::move(c), std::move(order), budget);
}

AdversaryPtr evil_adversary(std::shared_ptr<const EvilOracle> oracle, std::size_t n) {
  return std::make_unique<EvilAdversary>(std::move(oracle), n);
}

AdversaryPtr agnostic_stream(std::string name, std::function<LabeledPoint(std::uint64_t)> gen) {
  return std::make_unique<Agnostic>(std::move(name), std::move(gen));
}

AdversaryPtr noisy_target(Hypothesis h, PointOrder order, double rate, std::uint64_t seed) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw Error("noise rate must lie in [0,1]");
  std::string name = "noisy:" + h.describe() + ":" + std::to_string(rate);
    // Salted so that a uniform order built from the same seed stays independent.
  std::uint64_t noise_seed = mix_seed(seed, 0x6e6f697365ULL);
  return agnostic_stream(name, [h = std::move(h), order = std::move(order), rate, noise_seed](std::uint64_t t) {
    Point x = order(t);
    Label y = h(x);
    if (unit_interval(mix_seed(noise_seed, t)) < rate) y = 1 - y;
    return LabeledPoint{x, y};
  });
}

AdversaryPtr alternating(Point x) {
  return agnostic_stream("alternating:" + std::to_string(x), [x](std::uint64_t t) {
    return LabeledPoint{x, static_cast<Label>(t % 2)};
  });
}

}  // namespace uol
