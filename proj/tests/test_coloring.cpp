#include "doctest.h"
#include "oracles.hpp"
#include "uol/coloring.hpp"

using namespace uol;

namespace {

std::vector<Graph> pinned_graphs() {
  return {Graph::named("complete:3:3"), Graph::named("cycle:5:3"), Graph::named("path:4:2"),
          Graph::named("wheel:5:3"),    Graph::named("prism:3"),   Graph::named("grid:2:3:2"),
          Graph::named("empty:3:2"),    Graph::named("octahedron:3")};
}

}  // namespace

TEST_CASE("extendability examples") {
  CHECK(coloring_extendable(Graph(0, 1), {}));
  auto k3 = Graph::named("complete:3:3");
  CHECK(coloring_extendable(k3, {1}));
  CHECK_FALSE(coloring_extendable(Graph::named("complete:3:2"), {}));
  CHECK(extension_operator(k3, {1}) == Coloring{1, 2, 3});
  CHECK(extension_operator(Graph(1, 1), {}) == Coloring{1});
  CHECK_THROWS_AS(extension_operator(Graph::named("complete:3:2"), {}), NotExtendable);
  CHECK_THROWS_AS(check_partial_coloring(k3, {1, 1}), ImproperColoring);
  CHECK_THROWS_AS(check_partial_coloring(k3, {4}), ImproperColoring);
}

TEST_CASE("the extension operator is the lex-least brute-force extension") {
  for (auto& g : pinned_graphs()) {
    auto all = oracle::all_colorings(g.vertices(), g.colors(), g.edges());
    CHECK(all_colorings(g) == all);
    // every prefix of every assignment, proper or not
    for (std::size_t len = 0; len <= g.vertices(); ++len) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < len; ++i) total *= g.colors();
      for (std::uint64_t code = 0; code < total; ++code) {
        Coloring f(len);
        for (std::size_t i = 0, v = code; i < len; ++i, v /= g.colors()) f[i] = static_cast<Label>(v % g.colors()) + 1;
        const std::vector<Label>* least = nullptr;
        for (auto& c : all)
          if (std::equal(f.begin(), f.end(), c.begin())) { least = &c; break; }
        bool proper = true;
        for (auto [a, b] : g.edges()) proper = proper && !(a < len && b < len && f[a] == f[b]);
        if (!proper) {
          CHECK_THROWS_AS(coloring_extendable(g, f), ImproperColoring);
          continue;
        }
        CHECK(coloring_extendable(g, f) == (least != nullptr));
        if (least) {
          auto c = extension_operator(g, f);
          CHECK(c == *least);
          // idempotent on prefixes of its own output
          for (std::size_t n = len; n <= c.size(); ++n) CHECK(extension_operator(g, Coloring(c.begin(), c.begin() + n)) == c);
        }
      }
    }
  }
}

TEST_CASE("coloring class") {
  auto k3 = Graph::named("complete:3:3");
  auto c = coloring_class(k3);
  REQUIRE(c.members.size);
  CHECK(*c.members.size == 6);
  CHECK(c.labels == std::vector<Label>{1, 2, 3});
  CHECK(prefix_word(*c.members(0), 5) == Word{1, 2, 3, 1, 1});
  CHECK_THROWS_AS(coloring_class(Graph::named("complete:4:3")), GraphNotColorable);

  // closure extendability on words agrees with coloring_extendable
  for (std::size_t len = 0; len <= 3; ++len) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      Coloring f(len);
      for (std::size_t i = 0, v = code; i < len; ++i, v /= 3) f[i] = static_cast<Label>(v % 3) + 1;
      bool proper = true;
      for (std::size_t a = 0; a < len; ++a)
        for (std::size_t b = 0; b < a; ++b) proper = proper && f[a] != f[b];
      CHECK(closure_extendable(c, f, len).yes() == proper);
    }
  }
  // scattered samples
  CHECK(is_realizable({{2, 3}, {0, 1}}, c).yes());
  CHECK(is_realizable({{2, 3}, {0, 3}}, c).verdict == Verdict::kNo);
  CHECK(is_realizable({{7, 2}}, c).verdict == Verdict::kNo);
  CHECK(is_realizable({{7, 1}}, c).yes());
}

TEST_CASE("graph text round trip") {
  for (auto& g : pinned_graphs()) {
    auto h = Graph::parse(g.format());
    CHECK(h.vertices() == g.vertices());
    CHECK(h.colors() == g.colors());
    CHECK(h.edges() == g.edges());
  }
  auto g = Graph::parse("# triangle\n3 3\n0 1\n1 2\n0 2\n");
  CHECK(g.edges().size() == 3);
  CHECK_THROWS_AS(Graph::parse("3 3\n0 5\n"), ParseError);
  CHECK(Graph::named("petersen:3").edges().size() == 15);
}
