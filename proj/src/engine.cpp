#include "uol/engine.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "uol/advice.hpp"
#include "uol/ewa.hpp"

namespace uol {

double Transcript::mistake_rate(std::size_t t) const {
  if (t == 0) return 0;
  return static_cast<double>(rounds.at(t - 1).cumulative) / static_cast<double>(t);
}

std::uint64_t Transcript::mistakes_between(std::size_t from, std::size_t to) const {
  std::uint64_t m = 0;
  for (std::size_t i = from; i < to && i < rounds.size(); ++i) m += rounds[i].mistake ? 1 : 0;
  return m;
}

Sample Transcript::sample() const {
  Sample s;
  s.reserve(rounds.size());
  for (const auto& r : rounds) s.push_back({r.x, r.label});
  return s;
}

bool Transcript::contract_violated() const {
  if (!realizable_contract) return false;
  return std::any_of(rounds.begin(), rounds.end(),
                     [](const Round& r) { return r.audit && *r.audit == Verdict::kNo; });
}

std::string Transcript::to_tsv() const {
  std::ostringstream out;
  out << "# learner\t" << learner << "\n# adversary\t" << adversary << "\n# seed\t" << seed
      << "\n# fuel\t" << fuel_budget << "\n# realizable_contract\t" << (realizable_contract ? 1 : 0) << "\n";
  out << "t\tx\tprediction\tlabel\tmistake\tcumulative\taudit\n";
  for (const auto& r : rounds) {
    out << r.t << '\t' << r.x << '\t' << r.prediction << '\t' << r.label << '\t' << (r.mistake ? 1 : 0) << '\t'
        << r.cumulative << '\t' << (r.audit ? to_string(*r.audit) : "-") << '\n';
  }
  out << "# rounds\t" << rounds.size() << "\n# mistakes\t" << mistakes() << "\n# fuel_spent\t" << fuel_spent << "\n";
  if (aborted()) out << "# aborted\t" << (abort == AbortKind::kFuel ? "fuel" : "error") << '\t' << abort_reason << '\n';
  return out.str();
}

Transcript run_game(const Learner& learner, Adversary& adversary, const GameOptions& o) {
  if (o.rounds == 0) throw Error("a game needs at least one round");
  Transcript tr;
  tr.learner = learner.name();
  tr.adversary = adversary.name();
  tr.seed = o.seed;
  tr.fuel_budget = o.fuel;
  tr.realizable_contract = adversary.realizable_contract();

  AdviceStream stream(o.seed);
  auto session = learner.start();
  std::uint64_t cumulative = 0;
  try {
    for (std::uint64_t t = 0; t < o.rounds; ++t) {
      const Sample& history = session->sample();
      Round r;
      r.t = t;
      r.x = adversary.next_point(history, t);
      std::uint64_t budget = o.fuel;
      if (o.total_fuel) budget = std::min(budget, *o.total_fuel - std::min(*o.total_fuel, tr.fuel_spent));
      Fuel fuel(budget);
      ColumnReader advice(stream, t);
      try {
        r.prediction = session->predict(r.x, fuel, &advice);
      } catch (...) {
        tr.fuel_spent += fuel.used();
        throw;
      }
      r.fuel = fuel.used();
      r.advice_bits = advice.bits_read();
      tr.fuel_spent += r.fuel;
      r.label = adversary.reveal(history, r.x, r.prediction);
      r.mistake = r.prediction != r.label;
      cumulative += r.mistake ? 1 : 0;
      r.cumulative = cumulative;
      session->observe({r.x, r.label});
      if (o.audit) r.audit = is_realizable(session->sample(), *o.audit, o.audit_budget).verdict;
      tr.rounds.push_back(r);
    }
  } catch (const FuelExhausted& e) {
    tr.abort = AbortKind::kFuel;
    tr.abort_reason = e.what();
  } catch (const Error& e) {
    tr.abort = AbortKind::kError;
    tr.abort_reason = e.what();
  }
  return tr;
}

namespace {

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(10) << v;
  return s.str();
}

std::vector<Hypothesis> pool_prefix(const Enumeration& pool, std::size_t budget, bool& limited) {
  std::vector<Hypothesis> hs;
  std::size_t n = pool.size ? std::min(*pool.size, budget) : budget;
  limited = !pool.size || *pool.size > budget;
  for (std::size_t i = 0; i < n; ++i) {
    auto h = pool(i);
    if (!h) break;
    hs.push_back(*h);
  }
  return hs;
}

}  // namespace

std::string RegretReport::to_csv() const {
  std::string out = "n,learner_loss,best_loss,regret,regret_over_n,se\n";
  for (const auto& r : rows)
    out += std::to_string(r.n) + "," + num(r.learner_loss) + "," + num(r.best_loss) + "," + num(r.regret) + "," +
           num(r.regret_over_n) + "," + num(r.se) + "\n";
  return out;
}

RegretReport regret_report(const Transcript& t, const Enumeration& pool, std::size_t budget) {
  RegretReport rep;
  auto hs = pool_prefix(pool, budget, rep.budget_limited);
  rep.pool_used = hs.size();
  std::vector<std::uint64_t> loss(hs.size(), 0);
  for (const auto& r : t.rounds) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (hs[i](r.x) != r.label) ++loss[i];
      best = std::min(best, loss[i]);
    }
    if (hs.empty()) best = 0;
    RegretRow row;
    row.n = r.t + 1;
    row.learner_loss = static_cast<double>(r.cumulative);
    row.best_loss = static_cast<double>(best);
    row.regret = row.learner_loss - row.best_loss;
    row.regret_over_n = row.regret / static_cast<double>(row.n);
    rep.rows.push_back(row);
  }
  return rep;
}

double block_regret(const Transcript& t, const Enumeration& pool, unsigned k) {
  auto cfg = ExpertPoolConfig::for_block(k, pool.size);
  if (t.rounds.size() < cfg.start + cfg.length) throw Error("transcript ends before block " + std::to_string(k));
  std::vector<std::uint64_t> loss(cfg.experts, 0);
  std::uint64_t learner = 0;
  for (std::uint64_t i = cfg.start; i < cfg.start + cfg.length; ++i) {
    const auto& r = t.rounds[i];
    learner += r.mistake ? 1 : 0;
    for (std::size_t e = 0; e < cfg.experts; ++e)
      if ((*pool(e))(r.x) != r.label) ++loss[e];
  }
  return static_cast<double>(learner) - static_cast<double>(*std::min_element(loss.begin(), loss.end()));
}

std::string ExpectedReport::blocks_csv() const {
  std::string out = "k,mean_regret,se,bound\n";
  for (const auto& b : blocks)
    out += std::to_string(b.k) + "," + num(b.mean) + "," + num(b.se) + "," + num(b.bound) + "\n";
  return out;
}

namespace {

struct Moments {
  double sum = 0, sq = 0;
  void add(double v) {
    sum += v;
    sq += v * v;
  }
  double mean(double n) const { return sum / n; }
  double se(double n) const {
    if (n < 2) return 0;
    double m = sum / n;
    double var = std::max(0.0, (sq - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

}  // namespace

ExpectedReport estimate_expected(const Learner& learner, const AdversaryMaker& make, const Enumeration& pool,
                                 const ExpectedOptions& o) {
  if (o.trials < 2) throw Error("estimating an expectation needs at least two trials");
  const std::size_t n = o.game.rounds;
  std::vector<Moments> learner_m(n), best_m(n), regret_m(n), mistakes_m(n);
  std::vector<Moments> block_m;
  std::vector<unsigned> block_ks;
  if (o.blocks)
    for (unsigned k = 1; k < 63; ++k) {
      auto c = ExpertPoolConfig::for_block(k);
      if (c.start + c.length > n) break;
      block_ks.push_back(k);
    }
  block_m.resize(block_ks.size());

  AdviceStream master(o.game.seed);
  for (std::uint64_t i = 0; i < o.trials; ++i) {
    GameOptions g = o.game;
    g.seed = master.trial(i).seed();
    auto adversary = make(i);
    auto tr = run_game(learner, *adversary, g);
    if (tr.aborted()) throw Error("trial " + std::to_string(i) + " aborted: " + tr.abort_reason);
    auto rep = regret_report(tr, pool, o.pool_budget);
    for (std::size_t t = 0; t < n; ++t) {
      learner_m[t].add(rep.rows[t].learner_loss);
      best_m[t].add(rep.rows[t].best_loss);
      regret_m[t].add(rep.rows[t].regret);
      mistakes_m[t].add(static_cast<double>(tr.rounds[t].cumulative));
    }
    for (std::size_t b = 0; b < block_ks.size(); ++b) block_m[b].add(block_regret(tr, pool, block_ks[b]));
  }

  ExpectedReport out;
  out.trials = o.trials;
  const double trials = static_cast<double>(o.trials);
  bool limited = false;
  out.regret.pool_used = pool_prefix(pool, o.pool_budget, limited).size();
  out.regret.budget_limited = limited;
  for (std::size_t t = 0; t < n; ++t) {
    RegretRow row;
    row.n = t + 1;
    row.learner_loss = learner_m[t].mean(trials);
    row.best_loss = best_m[t].mean(trials);
    row.regret = regret_m[t].mean(trials);
    row.regret_over_n = row.regret / static_cast<double>(row.n);
    row.se = regret_m[t].se(trials);
    out.regret.rows.push_back(row);
    out.mean_mistakes.push_back(mistakes_m[t].mean(trials));
    out.se_mistakes.push_back(mistakes_m[t].se(trials));
  }
  for (std::size_t b = 0; b < block_ks.size(); ++b)
    out.blocks.push_back({block_ks[b], block_m[b].mean(trials), block_m[b].se(trials),
                          ExpertPoolConfig::regret_bound(block_ks[b])});
  return out;
}

}  // namespace uol
