#include "doctest.h"
#include "uol/advice.hpp"
#include "uol/derandomize.hpp"
#include "uol/learners.hpp"
#include "uol/registry.hpp"

#include <cmath>
#include <random>

using namespace uol;

namespace {

// Exact vote over every advice word of length d, for learners reading at most d bits.
Label brute_force(const Learner& l, const Sample& s, Point x, unsigned d) {
  std::uint64_t one = 0, zero = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << d); ++code) {
    std::string bits;
    for (unsigned i = 0; i < d; ++i) bits += (code >> (d - 1 - i)) & 1 ? '1' : '0';
    PrefixReader r(bits);
    Fuel f(100000);
    (l.predict(s, x, f, &r) == 1 ? one : zero)++;
  }
  return one > zero ? 1 : 0;
}

// geometric reads j bits with probability 2^-j; the vote stops at the least
// depth whose halted mass reaches 1 - (k+1)^-2.
Label geometric_vote(const Sample& s, Point x) {
  double k = static_cast<double>(s.size()) + 1;
  double target = 1 - 1 / ((k + 1) * (k + 1));
  double mass = 0, one = 0;
  for (unsigned j = 1; mass < target; ++j) {
    double m = std::ldexp(1.0, -static_cast<int>(j));
    mass += m;
    if ((j + s.size() + x) % 2 == 1) one += m;
  }
  return one > mass - one ? 1 : 0;
}

}  // namespace

TEST_CASE("derandomizing examples") {
  auto coin = randomized_learner("coin");
  auto v = majority_over_advice(*coin, {}, 0);
  CHECK(v.value == 0);
  CHECK(v.halted_mass == 1.0);
  CHECK(v.mass_one == 0.5);
  CHECK(v.depth == 1);

  auto det = registry_learner("flip_last");
  auto d = derandomize(det);
  for (Label last : {0, 1}) {
    Fuel f(1000);
    CHECK(d->predict({{0, last}}, 1, f, nullptr) == 1 - last);
  }
  CHECK_FALSE(d->randomized());
}

TEST_CASE("majority matches brute force on random cases") {
  std::mt19937_64 rng(8);
  std::vector<std::pair<std::string, unsigned>> learners{
      {"coin", 1}, {"vote:3", 3}, {"vote:4", 4}, {"noisy_copy", 2}, {"depth_mix", 4}};
  for (int trial = 0; trial < 100; ++trial) {
    auto [name, depth] = learners[rng() % learners.size()];
    auto l = randomized_learner(name);
    Sample s;
    for (std::size_t i = 0, n = rng() % 5; i < n; ++i) s.push_back({rng() % 6, static_cast<Label>(rng() % 2)});
    Point x = rng() % 6;
    INFO(name);
    CHECK(majority_over_advice(*l, s, x).value == brute_force(*l, s, x, depth));
  }
  auto geo = randomized_learner("geometric");
  for (int trial = 0; trial < 100; ++trial) {
    Sample s;
    for (std::size_t i = 0, n = rng() % 6; i < n; ++i) s.push_back({rng() % 6, static_cast<Label>(rng() % 2)});
    Point x = rng() % 6;
    auto v = majority_over_advice(*geo, s, x);
    CHECK(v.value == geometric_vote(s, x));
    double k = static_cast<double>(s.size()) + 1;
    CHECK(v.halted_mass >= 1 - 1 / ((k + 1) * (k + 1)));
  }
}

TEST_CASE("sessions vote like the batch procedure") {
  auto geo = randomized_learner("depth_mix");
  auto d = derandomize(geo);
  auto session = d->start();
  Sample s;
  std::mt19937_64 rng(1);
  for (int r = 0; r < 30; ++r) {
    Point x = rng() % 9;
    Fuel f1(1'000'000), f2(1'000'000);
    CHECK(session->predict(x, f1, nullptr) == d->predict(s, x, f2, nullptr));
    LabeledPoint p{x, static_cast<Label>(rng() % 2)};
    session->observe(p);
    s.push_back(p);
  }
}

TEST_CASE("unreachable mass is reported") {
  auto geo = randomized_learner("geometric");
  DerandomizeLimits tight;
  tight.max_depth = 1;
  CHECK_THROWS_AS(majority_over_advice(*geo, {}, 0, tight), MassUnreachable);
  DerandomizeLimits few;
  few.max_nodes = 1;
  CHECK_THROWS_AS(majority_over_advice(*randomized_learner("vote:5"), {}, 0, few), MassUnreachable);
}
