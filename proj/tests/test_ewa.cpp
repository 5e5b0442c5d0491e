#include "doctest.h"
#include "uol/advice.hpp"
#include "uol/classes.hpp"
#include "uol/ewa.hpp"

#include <cmath>
#include <numeric>
#include <random>

using namespace uol;

namespace {

std::size_t draw(const std::vector<double>& p, const std::string& bits) {
  PrefixReader r(bits);
  return sample_expert(p, r).expert;
}

}  // namespace

TEST_CASE("sample_expert examples") {
  CHECK(draw({0.75, 0.25}, "10") == 0);
  CHECK(draw({0.75, 0.25}, "11") == 1);
  CHECK(draw({0.5, 0.5}, "0") == 0);
  CHECK(draw({0.5, 0.5}, "1") == 1);
  PrefixReader r("10");
  auto d = sample_expert(std::vector<double>{0.75, 0.25}, r);
  CHECK(d.bits == 2);
  CHECK_FALSE(d.fallback);
  // A cut exactly at a dyadic point: the capped draw lands on the lower side
  // only for the all-zero tail.
  PrefixReader zeros(std::string(8, '0'));
  auto z = sample_expert(std::vector<double>{0.25, 0.75}, zeros, 8);
  CHECK(z.expert == 0);
  PrefixReader ones(std::string(8, '1'));
  auto o = sample_expert(std::vector<double>{1.0}, ones, 8);
  CHECK(o.expert == 0);
  CHECK(o.bits == 0);
}

TEST_CASE("sample_expert frequencies match probabilities over all advice words") {
  std::mt19937_64 rng(17);
  const unsigned m = 12;
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 4;
    std::vector<double> w(n);
    for (auto& x : w) x = 1 + static_cast<double>(rng() % 100);
    double total = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= total;
    std::vector<std::uint64_t> hits(n, 0);
    std::uint64_t unresolved = 0;
    for (std::uint64_t code = 0; code < (1u << m); ++code) {
      std::string bits;
      for (unsigned i = 0; i < m; ++i) bits += (code >> (m - 1 - i)) & 1 ? '1' : '0';
      PrefixReader r(bits);
      try {
        ++hits[sample_expert(w, r).expert];
      } catch (const AdviceExhausted&) {
        ++unresolved;
      }
    }
    CHECK(unresolved <= n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      double freq = static_cast<double>(hits[i]) / (1u << m);
      CHECK(freq <= w[i] + 1e-12);
      CHECK(freq >= w[i] - 2.0 / (1u << m));
    }
  }
}

TEST_CASE("weights and probabilities") {
  WeightVector w(2, 0.5);
  w.losses = {2, 0};
  auto p = w.probabilities();
  double e = std::exp(-1.0);
  CHECK(p[0] == doctest::Approx(e / (1 + e)));
  CHECK(p[1] == doctest::Approx(1 / (1 + e)));
  auto ws = w.weights();
  CHECK(ws[0] / ws[1] == doctest::Approx(e));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    WeightVector v(1 + rng() % 6, 0.05 + (rng() % 100) / 50.0);
    for (auto& l : v.losses) l = rng() % 4000;
    auto q = v.probabilities();
    CHECK(std::accumulate(q.begin(), q.end(), 0.0) == doctest::Approx(1.0));
    for (double x : q) CHECK(x >= 0);
    // permuting losses permutes probabilities
    auto perm = v;
    std::vector<std::size_t> idx(v.losses.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i = 0; i < idx.size(); ++i) perm.losses[i] = v.losses[idx[i]];
    auto pq = perm.probabilities();
    for (std::size_t i = 0; i < idx.size(); ++i) CHECK(pq[i] == doctest::Approx(q[idx[i]]));
  }
}

TEST_CASE("blocks") {
  CHECK(block_of_round(0) == 1);
  CHECK(block_of_round(1) == 1);
  CHECK(block_of_round(2) == 2);
  CHECK(block_of_round(5) == 2);
  CHECK(block_of_round(6) == 3);
  for (unsigned k = 1; k < 20; ++k) {
    auto c = ExpertPoolConfig::for_block(k);
    CHECK(c.start == (std::uint64_t{1} << k) - 2);
    CHECK(c.length == std::uint64_t{1} << k);
    CHECK(c.experts == k);
    CHECK(block_of_round(c.start) == k);
    CHECK(block_of_round(c.start + c.length - 1) == k);
  }
  CHECK(ExpertPoolConfig::for_block(9, 4).experts == 4);
  CHECK(ExpertPoolConfig::learning_rate(4) == doctest::Approx(std::sqrt(8 * std::log(4.0) / 16)));
  CHECK(ExpertPoolConfig::learning_rate(1) == doctest::Approx(std::sqrt(8 * std::log(2.0) / 2)));
  CHECK(ExpertPoolConfig::regret_bound(4) == doctest::Approx(std::sqrt(8 * std::log(4.0))));
}

TEST_CASE("block 1 follows expert 0 whatever the advice") {
  auto ewa = ewa_doubling(builtin_class("singletons").members);
  for (const char* bits : {"0000", "1111", "1010"}) {
    auto session = ewa->start();
    for (Point x = 0; x < 2; ++x) {
      PrefixReader r(bits);
      Fuel f(10000);
      CHECK(session->predict(x, f, &r) == (x == 0 ? 1 : 0));
      session->observe({x, 0});
    }
  }
}

TEST_CASE("the session matches batch weights") {
  auto pool = builtin_class("thresholds_nat").members;
  auto ewa = ewa_doubling(pool);
  auto session = ewa->start();
  std::mt19937_64 rng(2);
  Sample s;
  AdviceStream stream(5);
  for (std::uint64_t t = 0; t < 40; ++t) {
    Point x = rng() % 8;
    ColumnReader a(stream, t), b(stream, t);
    Fuel f1(100000), f2(100000);
    CHECK(session->predict(x, f1, &a) == ewa->predict(s, x, f2, &b));
    LabeledPoint p{x, static_cast<Label>(rng() % 2)};
    session->observe(p);
    s.push_back(p);
    auto& es = dynamic_cast<EwaSession&>(*session);
    Fuel f3(100000);
    auto w = ewa->weights_after(s, f3);
    CHECK(w.losses == es.weights().losses);
  }
}
