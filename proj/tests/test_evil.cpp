#include "doctest.h"
#include "uol/evil.hpp"
#include "uol/learners.hpp"

#include <functional>

using namespace uol;

namespace {

using Rule = std::function<Label(const std::string&)>;

// e(n, .) straight from its definition, for rules given on the revealed word.
std::string diagonal(std::size_t n, const Rule& rule, std::size_t len) {
  std::string w;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < n) w += '0';
    else if (k == n) w += '1';
    else w += rule(w) == 1 ? '0' : '1';
  }
  return w;
}

int ones(const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), '1')); }

std::vector<Rule> diag_rules() {
  return {
      [](const std::string&) { return 0; },
      [](const std::string&) { return 1; },
      [](const std::string& w) { return w.back() == '1' ? 1 : 0; },
      [](const std::string& w) { return w.back() == '1' ? 0 : 1; },
      [](const std::string& w) { return 2 * ones(w) > static_cast<int>(w.size()) ? 1 : 0; },
      [](const std::string& w) { return ones(w) % 2; },
  };
}

}  // namespace

TEST_CASE("evil sequences on the diag registry") {
  auto r = LearnerRegistry::builtin("diag");
  CHECK(evil_sequence(0, r, 6, 1000).word == "111111");
  auto shifted = LearnerRegistry::parse("copy_last\nconst:1\nconst:0\n");
  CHECK(evil_sequence(2, shifted, 6, 1000).word == "001111");
  CHECK(evil_sequence(1, shifted, 5, 1000).word == "01000");
  CHECK(evil_sequence(2, r, 6, 1000).word == "001010");
  auto rules = diag_rules();
  for (std::size_t n = 0; n < r.size(); ++n) {
    auto p = evil_sequence(n, r, 24, 1000);
    CHECK(p.defined());
    CHECK(p.word == diagonal(n, rules[n], 24));
  }
}

TEST_CASE("every registry learner errs on its own sequence after n") {
  auto r = std::make_shared<const LearnerRegistry>(LearnerRegistry::builtin("diag"));
  EvilOracle oracle(r, 1000);
  for (std::size_t n = 0; n < r->size(); ++n) {
    auto w = oracle.prefix(n, 30).word;
    Sample s;
    for (Point x = 0; x < 30; ++x) {
      Fuel f(1000);
      Label pred = r->at(n).learner->predict(s, x, f, nullptr);
      Label y = w[x] - '0';
      if (x > n) CHECK(pred != y);
      s.push_back({x, y});
    }
  }
}

TEST_CASE("stalled learners leave the sequence undefined") {
  auto r = LearnerRegistry::parse("diverge\nslow_const:0\n");
  auto d = evil_sequence(0, r, 5, 100);
  CHECK(d.word == "1");
  CHECK(d.undefined_at == std::optional<std::size_t>(1));
  auto slow = evil_sequence(1, r, 12, 100);
  CHECK(slow.word == "0111111");  // 2^7 > 100
  CHECK(slow.undefined_at == std::optional<std::size_t>(7));
}

TEST_CASE("evil class and its learner") {
  auto r = std::make_shared<const LearnerRegistry>(LearnerRegistry::builtin("diag"));
  auto oracle = std::make_shared<const EvilOracle>(r, 1000);
  auto c = evil_class(oracle);
  REQUIRE(c.members.size);
  CHECK(*c.members.size == 6);
  CHECK(is_realizable({{2, 1}, {3, 1}}, c).yes());
  CHECK(is_realizable({{2, 1}, {4, 0}}, c).verdict == Verdict::kNo);
  CHECK(is_realizable({{0, 0}, {4, 0}}, c).yes());
  auto learner = evil_class_learner(oracle);
  // at most one mistake against each member
  for (std::size_t n = 0; n < r->size(); ++n) {
    auto w = oracle->prefix(n, 40).word;
    Sample s;
    int mistakes = 0;
    for (Point x = 0; x < 40; ++x) {
      Fuel f(1'000'000);
      Label y = w[x] - '0';
      if (learner->predict(s, x, f, nullptr) != y) ++mistakes;
      s.push_back({x, y});
    }
    CHECK(mistakes == 1);
  }
  Fuel f(1000);
  CHECK_THROWS_AS(learner->predict({{2, 1}, {4, 0}}, 5, f, nullptr), SearchExhausted);
}
