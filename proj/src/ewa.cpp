#include "uol/ewa.hpp"

#include <algorithm>
#include <cmath>

namespace uol {

unsigned block_of_round(std::uint64_t t) {
  // Block k covers rounds 2^k - 2 .. 2^(k+1) - 3.
  unsigned k = 0;
  for (std::uint64_t v = t + 2; v > 1; v >>= 1) ++k;
  return k;
}

double ExpertPoolConfig::learning_rate(unsigned k) {
  double n = std::max(k, 2U);
  return std::sqrt(8.0 * std::log(n) / std::ldexp(1.0, static_cast<int>(k)));
}

double ExpertPoolConfig::regret_bound(unsigned k) {
  return std::sqrt(std::ldexp(1.0, static_cast<int>(k)) / 2.0 * std::log(static_cast<double>(k)));
}

ExpertPoolConfig ExpertPoolConfig::for_block(unsigned k, std::optional<std::size_t> pool_size) {
  if (k == 0 || k > 62) throw Error("block index out of range");
  ExpertPoolConfig c;
  c.k = k;
  c.length = std::uint64_t{1} << k;
  c.start = c.length - 2;
  c.experts = pool_size ? std::min<std::size_t>(k, *pool_size) : k;
  c.eta = learning_rate(k);
  return c;
}

ExpertPoolConfig ExpertPoolConfig::for_round(std::uint64_t t, std::optional<std::size_t> pool_size) {
  return for_block(block_of_round(t), pool_size);
}

std::vector<double> WeightVector::weights() const {
  std::vector<double> w(losses.size());
  if (losses.empty()) return w;
  // Shifting by the least loss rescales all weights by the same factor.
  std::uint64_t least = *std::min_element(losses.begin(), losses.end());
  for (std::size_t i = 0; i < losses.size(); ++i)
    w[i] = std::exp(-eta * static_cast<double>(losses[i] - least));
  return w;
}

std::vector<double> WeightVector::probabilities() const {
  auto w = weights();
  double total = 0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

ExpertDraw sample_expert(const std::vector<double>& probabilities, AdviceReader& advice, unsigned cap) {
  if (probabilities.empty()) throw Error("no experts to sample from");
  cap = std::min(cap, kSampleBitCap);
  const std::size_t n = probabilities.size();
  std::vector<double> upper(n);
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) upper[i] = acc += probabilities[i];
  upper[n - 1] = 1.0;

  // The advice interval is [num / 2^m, (num + 1) / 2^m). Scaling a double
  // boundary by 2^m is exact, so the comparisons below are exact.
  std::uint64_t num = 0;
  unsigned m = 0;
  auto containing = [&](long double point) {
    std::size_t i = 0;
    while (i + 1 < n && point >= static_cast<long double>(upper[i])) ++i;
    return i;
  };
  ExpertDraw d;
  for (;;) {
    long double lo = std::ldexp(static_cast<long double>(num), -static_cast<int>(m));
    long double hi = std::ldexp(static_cast<long double>(num + 1), -static_cast<int>(m));
    std::size_t i = containing(lo);
    long double lower = i == 0 ? 0.0L : static_cast<long double>(upper[i - 1]);
    if (lo >= lower && hi <= static_cast<long double>(upper[i])) {
      d.expert = i;
      d.bits = m;
      return d;
    }
    if (m == cap) {
      d.expert = i;
      d.bits = m;
      d.fallback = true;
      return d;
    }
    num = (num << 1) | static_cast<std::uint64_t>(advice.next_bit());
    ++m;
  }
}

EwaDoubling::EwaDoubling(Enumeration experts) : experts_(std::move(experts)) {
  if (!experts_ || (experts_.size && *experts_.size == 0)) throw Error("ewa needs a nonempty expert pool");
}

Hypothesis EwaDoubling::expert(std::size_t i) const {
  auto h = experts_(i);
  if (!h) throw Error("expert " + std::to_string(i) + " out of range");
  return *h;
}

WeightVector EwaDoubling::weights_after(const Sample& s, Fuel& fuel) const {
  auto cfg = ExpertPoolConfig::for_round(s.size(), experts_.size);
  WeightVector w(cfg.experts, cfg.eta);
  for (std::size_t i = 0; i < cfg.experts; ++i) {
    Hypothesis h = expert(i);
    for (std::uint64_t t = cfg.start; t < s.size(); ++t) {
      fuel.charge(1);
      if (h(s[t].x) != s[t].y) ++w.losses[i];
    }
  }
  return w;
}

Label EwaDoubling::predict(const Sample& s, Point x, Fuel& fuel, AdviceReader* advice) const {
  if (!advice) throw AdviceExhausted();
  auto w = weights_after(s, fuel);
  auto draw = sample_expert(w, *advice);
  fuel.charge(1);
  return expert(draw.expert)(x);
}

std::unique_ptr<LearnerSession> EwaDoubling::start() const { return std::make_unique<EwaSession>(*this); }

EwaSession::EwaSession(const EwaDoubling& learner) : LearnerSession(learner), owner_(learner) {
  enter_round();
}

void EwaSession::enter_round() {
  auto next = ExpertPoolConfig::for_round(sample_.size(), owner_.experts().size);
  if (sample_.empty() || next.k != cfg_.k) {
    cfg_ = next;
    w_ = WeightVector(cfg_.experts, cfg_.eta);
  }
}

Label EwaSession::predict(Point x, Fuel& fuel, AdviceReader* advice) {
  if (!advice) throw AdviceExhausted();
  auto draw = sample_expert(w_, *advice);
  last_expert_ = draw.expert;
  fuel.charge(1);
  return owner_.expert(draw.expert)(x);
}

void EwaSession::observe(const LabeledPoint& p) {
  for (std::size_t i = 0; i < w_.losses.size(); ++i)
    if (owner_.expert(i)(p.x) != p.y) ++w_.losses[i];
  sample_.push_back(p);
  enter_round();
}

std::shared_ptr<const EwaDoubling> ewa_doubling(Enumeration experts) {
  return std::make_shared<EwaDoubling>(std::move(experts));
}

}  // namespace uol
