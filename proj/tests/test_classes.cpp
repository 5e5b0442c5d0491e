#include "doctest.h"
#include "oracles.hpp"
#include "uol/classes.hpp"
#include "uol/core.hpp"

using namespace uol;

namespace {

Word word(const std::string& w) { return parse_word(w); }

}  // namespace

TEST_CASE("closure membership agrees with brute force up to length 10") {
  for (const char* name : {"singletons", "thresholds_nat", "thresholds_int", "finite_support"}) {
    auto c = builtin_class(name);
    for (std::size_t n = 0; n <= 10; ++n)
      for (auto& w : oracle::words_of_length(n)) {
        auto a = closure_extendable(c, word(w), n);
        INFO(name << " " << w);
        REQUIRE(a.verdict != Verdict::kUnknown);
        CHECK(a.yes() == oracle::closure_word(name, w));
      }
  }
}

TEST_CASE("member enumerations") {
  auto s = builtin_class("singletons");
  CHECK(prefix_word(*s.members(3), 6) == word("000100"));
  CHECK(prefix_word(*s.closure(0), 6) == word("000000"));
  auto f = builtin_class("finite_support");
  CHECK(prefix_word(*f.members(6), 4) == word("0110"));
  CHECK_FALSE(f.closure);
  auto ti = builtin_class("thresholds_int");
  CHECK(prefix_word(*ti.closure(1), 4) == word("1111"));
  // cut zigzag(3) = -2: points x with zigzag(x) >= -2
  auto m = *ti.members(3);
  for (Point x = 0; x < 12; ++x) CHECK(m(x) == (oracle::zig(x) >= -2 ? 1 : 0));
}

TEST_CASE("explicit and grid classes are exact and finite") {
  auto g = threshold_grid(4, 3);
  REQUIRE(g.members.size);
  CHECK(*g.members.size == 3);
  CHECK(is_realizable({{3, 0}, {4, 1}}, g).yes());
  CHECK(is_realizable({{5, 0}, {9, 1}}, g).yes());
  CHECK(is_realizable({{2, 0}, {3, 1}}, g).verdict == Verdict::kNo);
  CHECK(is_realizable({{100, 0}}, g).verdict == Verdict::kNo);
  auto e = explicit_class("two", {Hypothesis::from_text("zeros"), Hypothesis::from_text("ones")});
  CHECK(closure_extendable(e, word("000"), 3).yes());
  CHECK(closure_extendable(e, word("01"), 2).verdict == Verdict::kNo);
}

TEST_CASE("tree classes") {
  auto full0 = tree_class(named_tree("full0:3"));
  CHECK(closure_extendable(full0, word("101"), 3).yes());
  CHECK(closure_extendable(full0, word("1010"), 4).yes());
  CHECK(closure_extendable(full0, word("1011"), 4).verdict == Verdict::kNo);
  auto zeros = tree_class(named_tree("zeros"));
  CHECK(closure_extendable(zeros, word("1"), 1).verdict == Verdict::kNo);
  CHECK(closure_extendable(zeros, word("0000"), 4).yes());

  auto t = tree_from_words("t", {"", "0", "1", "10"});
  CHECK_THROWS_AS(tree_from_words("bad", {"", "11"}), ParseError);
  auto words = tree_words(t, 10);
  CHECK(words == std::vector<std::string>{"", "0", "1", "10"});
  auto c = tree_class(t);
  // members: "" 0^inf, "0" 0^inf, "1" 0^inf, "10" 0^inf
  CHECK(prefix_word(*c.members(2), 3) == word("100"));
  CHECK(is_realizable({{0, 1}, {1, 0}, {7, 0}}, c).yes());
  CHECK(is_realizable({{1, 1}}, c).verdict == Verdict::kNo);
}

TEST_CASE("tree realizability matches brute force over the finite tree") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    auto t = named_tree("random:4:" + std::to_string(seed));
    auto c = tree_class(t);
    auto words = tree_words(t, 1000);
    for (std::size_t n = 0; n <= 6; ++n)
      for (auto& w : oracle::words_of_length(n)) {
        bool expect = false;
        for (auto& tau : words) {
          std::string full = tau + std::string(n > tau.size() ? n - tau.size() : 0, '0');
          if (full.substr(0, n) == w) expect = true;
        }
        INFO(seed << " " << w);
        CHECK(closure_extendable(c, word(w), n).yes() == expect);
      }
  }
}
