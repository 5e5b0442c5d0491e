#include "doctest.h"
#include "oracles.hpp"
#include "uol/advice.hpp"
#include "uol/classes.hpp"
#include "uol/learners.hpp"

#include <random>

using namespace uol;

namespace {

Label run(const Learner& l, const Sample& s, Point x, AdviceReader* a = nullptr) {
  Fuel f(1'000'000);
  return l.predict(s, x, f, a);
}

Sample realizable_sample(std::mt19937_64& rng, const HypothesisClass& c, std::size_t size) {
  auto h = *c.members(rng() % 12);
  Sample s;
  for (std::size_t i = 0; i < size; ++i) {
    Point x = rng() % 14;
    s.push_back({x, h(x)});
  }
  return s;
}

}  // namespace

TEST_CASE("enumeration learner matches the least-index oracle") {
  std::vector<oracle::Fn> z{[](Point) { return 0; }};
  for (Point p = 0; p < 40; ++p) z.push_back([p](Point x) { return x == p ? 1 : 0; });
  auto learner = proper_learner(builtin_class("singletons"));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    Sample s;
    std::size_t n = rng() % 7;
    for (std::size_t i = 0; i < n; ++i) s.push_back({rng() % 10, static_cast<Label>(rng() % 4 == 0)});
    Point x = rng() % 12;
    CHECK(run(*learner, s, x) == oracle::enumeration_predict(z, s, x));
    std::vector<oracle::Fn> trimmed(z.begin(), z.end());
    CHECK(enumeration_index(builtin_class("singletons").closure, s) == oracle::least_index(trimmed, s));
  }
}

TEST_CASE("enumeration learner examples") {
  auto learner = proper_learner(builtin_class("singletons"));
  CHECK(run(*learner, {}, 9) == 0);
  CHECK(run(*learner, {{3, 0}}, 3) == 0);
  // ((3,1)): index 0 fails and the cap is |S| = 1, so z_1 = singleton at 0
  CHECK(run(*learner, {{3, 1}}, 0) == 1);
  CHECK(run(*learner, {{3, 1}}, 3) == 0);
  auto z = Enumeration::of({Hypothesis::from_text("ones"), Hypothesis::from_text("zeros")});
  auto two = enumeration_learner(z);
  CHECK(run(*two, {{0, 0}, {1, 0}}, 5) == 0);
  CHECK(run(*two, {{0, 1}, {1, 1}}, 5) == 1);
  CHECK_THROWS(proper_learner(builtin_class("finite_support")));
}

TEST_CASE("sessions agree with batch prediction") {
  auto learner = proper_learner(builtin_class("thresholds_int"));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    auto session = learner->start();
    Sample s;
    for (int r = 0; r < 20; ++r) {
      Point x = rng() % 16;
      Fuel f(1'000'000);
      CHECK(session->predict(x, f, nullptr) == run(*learner, s, x));
      LabeledPoint p{x, static_cast<Label>(rng() % 2)};
      session->observe(p);
      s.push_back(p);
    }
  }
}

TEST_CASE("the settled index is eventually stable on realizable streams") {
  // Once i0 reaches a forever-consistent index it never moves.
  for (const char* name : {"singletons", "thresholds_nat", "thresholds_int"}) {
    auto c = builtin_class(name);
    for (std::size_t m = 0; m < 8; ++m) {
      auto h = *c.members(m);
      Sample s;
      std::optional<std::size_t> settled;
      for (Point x = 0; x < 40; ++x) {
        s.push_back({x, h(x)});
        auto i = enumeration_index(c.closure, s);
        auto zi = c.closure.padded(i);
        bool agrees = true;
        for (Point y = 0; y < 60; ++y) agrees = agrees && zi(y) == h(y);
        if (settled) CHECK(i == *settled);
        else if (agrees) settled = i;
      }
      CHECK(settled);
    }
  }
}

TEST_CASE("proper learners output closure members on realizable samples") {
  std::mt19937_64 rng(21);
  for (const char* name : {"singletons", "thresholds_nat", "thresholds_int"}) {
    auto c = builtin_class(name);
    auto learner = proper_learner(c);
    for (int trial = 0; trial < 200; ++trial) {
      auto s = realizable_sample(rng, c, rng() % 6);
      Word w;
      for (Point x = 0; x < 16; ++x) w.push_back(run(*learner, s, x));
      CHECK(closure_extendable(c, w, w.size()).yes());
    }
  }
}

TEST_CASE("randomized learners") {
  for (auto& n : randomized_learner_names()) {
    auto l = randomized_learner(n);
    CHECK(l->randomized());
    PrefixReader a(std::string(64, '1'));
    Label y = run(*l, {{0, 1}}, 3, &a);
    CHECK((y == 0 || y == 1));
  }
  auto coin = randomized_learner("coin");
  PrefixReader one("1"), zero("0");
  CHECK(run(*coin, {}, 0, &one) == 1);
  CHECK(run(*coin, {}, 0, &zero) == 0);
  PrefixReader v("110");
  CHECK(run(*randomized_learner("vote:3"), {}, 0, &v) == 1);
  PrefixReader tie("10");
  CHECK(run(*randomized_learner("vote:2"), {}, 0, &tie) == 0);
  PrefixReader g("001");  // three bits read, |S| + x = 1
  CHECK(run(*randomized_learner("geometric"), {}, 1, &g) == 0);
  PrefixReader nc("11");
  CHECK(run(*randomized_learner("noisy_copy"), {{0, 1}}, 0, &nc) == 0);
  PrefixReader empty("");
  CHECK_THROWS_AS(run(*coin, {}, 0, &empty), AdviceExhausted);
  CHECK_THROWS_AS(randomized_learner("dice"), UnknownName);
}
