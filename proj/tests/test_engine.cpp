#include "doctest.h"
#include "uol/classes.hpp"
#include "uol/engine.hpp"
#include "uol/ewa.hpp"
#include "uol/learners.hpp"
#include "uol/registry.hpp"

#include <cmath>

using namespace uol;

namespace {

Hypothesis H(const char* t) { return Hypothesis::from_text(t); }

}  // namespace

TEST_CASE("fixed target") {
  auto a = fixed_target(H("singleton@5"), identity_order());
  auto l = registry_learner("const:0");
  GameOptions o;
  o.rounds = 8;
  auto t = run_game(*l, *a, o);
  std::vector<Label> labels;
  for (auto& r : t.rounds) labels.push_back(r.label);
  CHECK(labels == std::vector<Label>{0, 0, 0, 0, 0, 1, 0, 0});
  CHECK(t.mistakes() == 1);

  auto rep = fixed_target(H("thr:nat:2"), cycle_order(3));
  auto tr = run_game(*l, *rep, o);
  for (auto& r : tr.rounds) CHECK(r.label == (r.x >= 2 ? 1 : 0));
}

TEST_CASE("enumeration learner against a singleton makes one mistake at 5") {
  auto c = builtin_class("singletons");
  auto l = proper_learner(c);
  auto a = fixed_target(H("singleton@5"), identity_order());
  GameOptions o;
  o.rounds = 10;
  o.audit = &c;
  auto t = run_game(*l, *a, o);
  CHECK(t.mistakes() == 1);
  CHECK(t.rounds[5].mistake);
  for (auto& r : t.rounds) CHECK(r.audit == std::optional(Verdict::kYes));
  CHECK_FALSE(t.contract_violated());
}

TEST_CASE("worst case adversaries") {
  auto fs = builtin_class("finite_support");
  auto l = proper_learner(builtin_class("singletons"));
  auto a = worst_case(fs, identity_order());
  GameOptions o;
  o.rounds = 50;
  auto t = run_game(*l, *a, o);
  CHECK(t.mistakes() == 50);

  auto s = builtin_class("singletons");
  auto w = worst_case(s, identity_order());
  auto zero = registry_learner("const:0");
  auto ts = run_game(*zero, *w, o);
  // the first 1 is forced at x = 0, after which only 0 labels stay realizable
  CHECK(ts.rounds[0].label == 1);
  for (std::size_t i = 1; i < ts.rounds.size(); ++i) CHECK(ts.rounds[i].label == 0);

  auto one = explicit_class("one", {H("thr:nat:3")});
  auto e = worst_case(one, identity_order());
  auto te = run_game(*zero, *e, o);
  for (auto& r : te.rounds) CHECK(r.label == (r.x >= 3 ? 1 : 0));
}

TEST_CASE("noise and alternation") {
  auto clean = noisy_target(H("thr:nat:4"), identity_order(), 0.0, 9);
  auto l = registry_learner("const:0");
  GameOptions o;
  o.rounds = 200;
  for (auto& r : run_game(*l, *clean, o).rounds) CHECK(r.label == (r.x >= 4 ? 1 : 0));
  auto n1 = noisy_target(H("thr:nat:4"), identity_order(), 0.1, 9);
  auto n2 = noisy_target(H("thr:nat:4"), identity_order(), 0.1, 9);
  auto t1 = run_game(*l, *n1, o), t2 = run_game(*l, *n2, o);
  CHECK(t1.to_tsv() == t2.to_tsv());
  int flips = 0;
  for (auto& r : t1.rounds) flips += r.label != (r.x >= 4 ? 1 : 0);
  CHECK(flips > 5);
  CHECK(flips < 40);

  auto alt = alternating(0);
  auto ta = run_game(*l, *alt, o);
  auto pool = Enumeration::of({H("zeros"), H("ones"), H("singleton@0")});
  auto rep = regret_report(ta, pool);
  for (auto& row : rep.rows) CHECK(row.best_loss == std::floor(row.n / 2.0));
}

TEST_CASE("regret against a pool") {
  auto target = H("thr:nat:3");
  auto a = fixed_target(target, identity_order());
  auto l = enumeration_learner(Enumeration::of({target}));
  GameOptions o;
  o.rounds = 30;
  auto t = run_game(*l, *a, o);
  auto rep = regret_report(t, Enumeration::of({H("zeros"), target}));
  for (auto& row : rep.rows) CHECK(row.regret == 0);
  // adding pool members never raises the best loss
  auto small = regret_report(t, Enumeration::of({H("zeros")}));
  for (std::size_t i = 0; i < rep.rows.size(); ++i) CHECK(rep.rows[i].best_loss <= small.rows[i].best_loss);
  CHECK(rep.to_csv().rfind("n,learner_loss,best_loss,regret,regret_over_n,se\n", 0) == 0);
}

TEST_CASE("zero rounds are rejected") {
  auto a = fixed_target(H("zeros"), identity_order());
  auto l = registry_learner("const:0");
  GameOptions o;
  o.rounds = 0;
  CHECK_THROWS_AS(run_game(*l, *a, o), Error);
}

TEST_CASE("fuel aborts") {
  auto a = fixed_target(H("zeros"), identity_order());
  auto l = registry_learner("diverge");
  GameOptions o;
  o.rounds = 5;
  auto t = run_game(*l, *a, o);
  CHECK(t.abort == AbortKind::kFuel);
  CHECK(t.rounds.empty());
  CHECK(t.to_tsv().find("# aborted") != std::string::npos);
}

TEST_CASE("monte carlo estimates") {
  auto coin = randomized_learner("coin");
  auto make = [](std::uint64_t) { return fixed_target(Hypothesis::from_text("zeros"), identity_order()); };
  ExpectedOptions o;
  o.game.rounds = 20;
  o.game.seed = 1;
  o.trials = 400;
  auto r = estimate_expected(*coin, make, Enumeration::of({H("zeros")}), o);
  double rate = r.mean_mistakes.back() / 20;
  double se = r.se_mistakes.back() / 20;
  CHECK(std::abs(rate - 0.5) <= 3 * se);
  o.game.seed = 2;
  auto r2 = estimate_expected(*coin, make, Enumeration::of({H("zeros")}), o);
  CHECK(r2.mean_mistakes != r.mean_mistakes);
  CHECK(std::abs(r2.mean_mistakes.back() - r.mean_mistakes.back()) <=
        3 * std::hypot(r.se_mistakes.back(), r2.se_mistakes.back()));

  auto det = registry_learner("const:1");
  auto d = estimate_expected(*det, make, Enumeration::of({H("zeros")}), o);
  for (double se_n : d.se_mistakes) CHECK(se_n == 0);

  // a single-expert pool: EWA follows it exactly
  auto ewa = ewa_doubling(Enumeration::of({H("zeros")}));
  o.blocks = true;
  o.game.rounds = 62;
  auto e = estimate_expected(*ewa, make, Enumeration::of({H("zeros")}), o);
  for (auto& row : e.regret.rows) CHECK(row.regret <= 0);
  CHECK(e.blocks.size() == 5);
  CHECK(e.blocks_csv().rfind("k,mean_regret,se,bound\n", 0) == 0);
}
