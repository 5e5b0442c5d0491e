#include "doctest.h"
#include "uol/priority.hpp"

#include <functional>
#include <map>

using namespace uol;

namespace {

// Learners of the construct registry as (cost, prediction) on a sample of size n.
struct Model {
  std::function<std::uint64_t(std::size_t)> cost;
  Label bit;
};

struct Expected {
  std::vector<std::pair<std::size_t, std::size_t>> entries;  // (e, j)
  std::vector<std::size_t> a_size;
  std::map<std::size_t, std::size_t> deactivated;
};

Expected simulate(const std::vector<Model>& m, std::size_t s_max, std::uint64_t mult) {
  Expected out;
  std::vector<std::size_t> j(m.size(), 1);
  std::vector<bool> active(m.size(), true);
  for (std::size_t s = 0; s <= s_max; ++s) {
    for (std::size_t e = 0; e < m.size() && e <= s; ++e) {
      if (s == e) {
        out.entries.push_back({e, 1});
        continue;
      }
      if (!active[e] || m[e].cost(e + j[e]) > s * mult) continue;
      if (m[e].bit == 1) {
        active[e] = false;
        out.deactivated[e] = s;
      } else {
        out.entries.push_back({e, ++j[e]});
      }
    }
    out.a_size.push_back(out.entries.size());
  }
  return out;
}

std::vector<Model> construct_models() {
  auto linear = [](std::size_t n) -> std::uint64_t { return n + 1; };
  return {
      {linear, 0},                                                      // const:0
      {linear, 1},                                                      // const:1
      {linear, 1},                                                      // copy_last (gamma ends in 1)
      {[](std::size_t) { return ~std::uint64_t{0}; }, 0},               // diverge
      {[](std::size_t n) { return n >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << n; }, 0},
      {linear, 0},                                                      // flip_last
  };
}

}  // namespace

TEST_CASE("construction matches an independent simulation") {
  auto r = LearnerRegistry::builtin("construct");
  for (std::uint64_t mult : {1, 2, 5}) {
    auto t = priority_construct(r, 60, {mult});
    auto e = simulate(construct_models(), 60, mult);
    REQUIRE(t.entries().size() == e.entries.size());
    for (std::size_t i = 0; i < e.entries.size(); ++i) {
      CHECK(t.entries()[i].requirement == e.entries[i].first);
      CHECK(t.entries()[i].ones == e.entries[i].second);
    }
    for (std::size_t s = 0; s <= 60; ++s) CHECK(t.a_size(s) == e.a_size[s]);
    for (std::size_t req = 0; req < r.size(); ++req) {
      auto it = e.deactivated.find(req);
      CHECK(t.deactivated_at(req) == (it == e.deactivated.end() ? std::nullopt : std::optional(it->second)));
    }
  }
}

TEST_CASE("construction invariants") {
  auto r = LearnerRegistry::builtin("construct");
  auto t = priority_construct(r, 80);
  // A_s only grows, and gamma only lengthens while active.
  for (std::size_t s = 1; s < t.timesteps(); ++s) CHECK(t.a_size(s) >= t.a_size(s - 1));
  for (std::size_t e = 0; e < r.size(); ++e)
    for (std::size_t s = 1; s < t.timesteps(); ++s) {
      auto a = t.state(e, s - 1), b = t.state(e, s);
      CHECK(b.ones >= a.ones);
      if (!a.active) CHECK(b.ones == a.ones);
      CHECK(t.gamma(e, s).substr(0, e + 1) == std::string(e, '0') + "1");
    }
  // Each entry is a sequence of the form 0^e 1^j 0^inf.
  for (auto& en : t.entries()) {
    auto h = en.hypothesis();
    for (Point x = 0; x < en.requirement + en.ones + 5; ++x)
      CHECK(h(x) == (x >= en.requirement && x < en.requirement + en.ones ? 1 : 0));
    CHECK(en.notation() == "0^" + std::to_string(en.requirement) + "1^" + std::to_string(en.ones));
  }
  CHECK(t.deactivated_at(1) == std::optional<std::size_t>(3));
  CHECK_FALSE(t.deactivated_at(3));
  CHECK(t.state(0, 80).active);
  CHECK(t.state(0, 80).ones > 40);
}

TEST_CASE("every halting probe is answered by a class member that disagrees") {
  auto r = LearnerRegistry::builtin("construct");
  auto t = priority_construct(r, 60);
  auto c = t.as_class();
  for (auto& p : t.probes()) {
    if (!p.result) continue;
    // gamma at probe time, with its next point
    Sample s;
    for (Point x = 0; x < p.requirement; ++x) s.push_back({x, 0});
    for (Point x = p.requirement; x < p.gamma_length; ++x) s.push_back({x, 1});
    s.push_back({p.gamma_length, static_cast<Label>(1 - *p.result)});
    CHECK(is_realizable(s, c).yes());
  }
}

TEST_CASE("trace format") {
  auto t = priority_construct(LearnerRegistry::builtin("construct"), 4);
  auto f = t.format();
  CHECK(f.find("# R0 const:0") != std::string::npos);
  CHECK(f.find("0^0") != std::string::npos);
}
