#include "uol/classes.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <set>

#include "uol/random.hpp"

namespace uol {

namespace {

bool binary_labels(const Sample& s) {
  return std::all_of(s.begin(), s.end(), [](const LabeledPoint& p) { return p.y == 0 || p.y == 1; });
}

Hypothesis singleton(Point p) {
  FiniteTable t;
  t.table[p] = 1;
  return Hypothesis::from_term(t);
}

Hypothesis constant(Label b) { return Hypothesis::from_term(EventuallyConstant{"", b}); }

Point max_point(const Sample& s) {
  Point m = 0;
  for (const auto& p : s) m = std::max(m, p.x);
  return m;
}

std::int64_t zigzag_point(Point x) {
  return x % 2 == 0 ? static_cast<std::int64_t>(x / 2) : -static_cast<std::int64_t>((x + 1) / 2);
}

Enumeration prepend(std::vector<Hypothesis> head, Enumeration tail) {
  auto shared = std::make_shared<const std::vector<Hypothesis>>(std::move(head));
  Enumeration e;
  if (tail.size) e.size = *tail.size + shared->size();
  e.at = [shared, tail](std::size_t i) -> std::optional<Hypothesis> {
    if (i < shared->size()) return (*shared)[i];
    return tail(i - shared->size());
  };
  return e;
}

HypothesisClass singletons_class() {
  HypothesisClass c;
  c.name = "singletons";
  c.kind = ClassKind::kBuiltin;
  c.members.at = [](std::size_t i) -> std::optional<Hypothesis> { return singleton(i); };
  c.closure = prepend({constant(0)}, c.members);
  c.exact = [](const Sample& s) -> std::optional<Hypothesis> {
    if (!binary_labels(s) || has_conflict(s)) return std::nullopt;
    std::set<Point> ones;
    for (const auto& p : s)
      if (p.y == 1) ones.insert(p.x);
    if (ones.size() > 1) return std::nullopt;
    if (ones.size() == 1) return singleton(*ones.begin());
    return singleton(s.empty() ? 0 : max_point(s) + 1);
  };
  return c;
}

HypothesisClass finite_support_class() {
  HypothesisClass c;
  c.name = "finite_support";
  c.kind = ClassKind::kBuiltin;
  c.members.at = [](std::size_t i) -> std::optional<Hypothesis> {
    FiniteTable t;
    for (Point x = 0; x < 64; ++x)
      if ((static_cast<std::uint64_t>(i) >> x) & 1U) t.table[x] = 1;
    return Hypothesis::from_term(t);
  };
  c.exact = [](const Sample& s) -> std::optional<Hypothesis> {
    if (!binary_labels(s) || has_conflict(s)) return std::nullopt;
    FiniteTable t;
    for (const auto& p : s)
      if (p.y == 1) t.table[p.x] = 1;
    return Hypothesis::from_term(t);
  };
  return c;
}

HypothesisClass thresholds_nat_class() {
  HypothesisClass c;
  c.name = "thresholds_nat";
  c.kind = ClassKind::kBuiltin;
  c.members.at = [](std::size_t i) -> std::optional<Hypothesis> {
    return Hypothesis::from_term(Threshold{ThresholdKind::kNat, Natural(i)});
  };
  c.closure = prepend({constant(0)}, c.members);
  c.exact = [](const Sample& s) -> std::optional<Hypothesis> {
    if (!binary_labels(s)) return std::nullopt;
    std::optional<Point> max0, min1;
    for (const auto& p : s) {
      if (p.y == 0) max0 = max0 ? std::max(*max0, p.x) : p.x;
      else min1 = min1 ? std::min(*min1, p.x) : p.x;
    }
    if (max0 && min1 && *max0 >= *min1) return std::nullopt;
    Point cut = min1 ? *min1 : (max0 ? *max0 + 1 : 0);
    return Hypothesis::from_term(Threshold{ThresholdKind::kNat, Natural(cut)});
  };
  return c;
}

HypothesisClass thresholds_int_class() {
  HypothesisClass c;
  c.name = "thresholds_int";
  c.kind = ClassKind::kBuiltin;
  c.members.at = [](std::size_t i) -> std::optional<Hypothesis> {
    return Hypothesis::from_term(Threshold{ThresholdKind::kInt, natural_to_zigzag(Natural(i))});
  };
  c.closure = prepend({constant(0), constant(1)}, c.members);
  c.exact = [](const Sample& s) -> std::optional<Hypothesis> {
    if (!binary_labels(s)) return std::nullopt;
    std::optional<std::int64_t> max0, min1;
    for (const auto& p : s) {
      std::int64_t z = zigzag_point(p.x);
      if (p.y == 0) max0 = max0 ? std::max(*max0, z) : z;
      else min1 = min1 ? std::min(*min1, z) : z;
    }
    if (max0 && min1 && *max0 >= *min1) return std::nullopt;
    std::int64_t cut = min1 ? *min1 : (max0 ? *max0 + 1 : 0);
    return Hypothesis::from_term(Threshold{ThresholdKind::kInt, Natural(cut)});
  };
  return c;
}

}  // namespace

HypothesisClass builtin_class(std::string_view name) {
  if (name == "singletons") return singletons_class();
  if (name == "finite_support") return finite_support_class();
  if (name == "thresholds_nat") return thresholds_nat_class();
  if (name == "thresholds_int") return thresholds_int_class();
  throw UnknownName("unknown builtin class '" + std::string(name) + "'");
}

std::vector<std::string> builtin_class_names() {
  return {"singletons", "finite_support", "thresholds_nat", "thresholds_int"};
}

HypothesisClass explicit_class(std::string name, std::vector<Hypothesis> members) {
  HypothesisClass c;
  c.name = std::move(name);
  c.kind = ClassKind::kExplicitFinite;
  c.members = Enumeration::of(std::move(members));
  c.closure = c.members;
  Enumeration all = c.members;
  c.exact = [all](const Sample& s) -> std::optional<Hypothesis> {
    for (std::size_t i = 0; i < *all.size; ++i) {
      Hypothesis h = *all(i);
      if (consistent(s, h)) return h;
    }
    return std::nullopt;
  };
  return c;
}

HypothesisClass threshold_grid(std::uint64_t stride, std::size_t count) {
  std::vector<Hypothesis> hs;
  for (std::size_t i = 0; i < count; ++i)
    hs.push_back(Hypothesis::from_term(Threshold{ThresholdKind::kNat, Natural(stride * i)}));
  return explicit_class("threshold_grid:" + std::to_string(stride) + ":" + std::to_string(count),
                        std::move(hs));
}

// ---- trees -----------------------------------------------------------------

ComputableTree tree_from_words(std::string name, const std::vector<std::string>& words) {
  auto set = std::make_shared<std::set<std::string>>(words.begin(), words.end());
  std::size_t depth = 0;
  if (!set->empty()) set->insert("");
  for (const auto& w : *set) {
    for (char c : w)
      if (c != '0' && c != '1') throw ParseError("tree word '" + w + "' is not binary");
    for (std::size_t n = 0; n < w.size(); ++n)
      if (!set->count(w.substr(0, n)))
        throw ParseError("tree is not prefix-closed: '" + w.substr(0, n) + "' missing below '" + w + "'");
    depth = std::max(depth, w.size());
  }
  ComputableTree t;
  t.name = std::move(name);
  t.contains = [set](std::string_view w) { return set->count(std::string(w)) > 0; };
  t.depth = depth;
  return t;
}

namespace {

std::size_t parse_size(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("number expected, got '" + std::string(s) + "'");
  return v;
}

std::uint64_t word_key(std::string_view w) {
  std::uint64_t k = 1;
  for (char c : w) k = splitmix64(k * 2 + static_cast<std::uint64_t>(c - '0'));
  return k;
}

}  // namespace

ComputableTree named_tree(std::string_view spec) {
  ComputableTree t;
  t.name = std::string(spec);
  if (spec == "zeros") {
    t.contains = [](std::string_view w) { return w.find('1') == std::string_view::npos; };
    return t;
  }
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "full") {
    std::size_t d = parse_size(rest);
    t.contains = [d](std::string_view w) { return w.size() <= d; };
    t.depth = d;
    return t;
  }
  if (head == "full0") {
    std::size_t d = parse_size(rest);
    t.contains = [d](std::string_view w) {
      return w.size() <= d || w.find('1', d) == std::string_view::npos;
    };
    return t;
  }
  if (head == "random") {
    auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) throw ParseError("random tree spec is random:<depth>:<seed>");
    std::size_t d = parse_size(rest.substr(0, c2));
    std::uint64_t seed = parse_size(rest.substr(c2 + 1));
    // Each nonempty word survives with probability 0.7 given its parent.
    t.contains = [d, seed](std::string_view w) {
      if (w.size() > d) return false;
      for (std::size_t n = 1; n <= w.size(); ++n)
        if (mix_seed(seed, word_key(w.substr(0, n))) % 10 >= 7) return false;
      return true;
    };
    t.depth = d;
    return t;
  }
  throw UnknownName("unknown tree '" + std::string(spec) + "'");
}

std::vector<std::string> tree_words(const ComputableTree& t, std::size_t limit) {
  std::vector<std::string> out;
  if (!t.contains("")) return out;
  std::deque<std::string> queue{""};
  while (!queue.empty() && out.size() < limit) {
    std::string w = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    for (char b : {'0', '1'}) {
      std::string child = w + b;
      if (t.contains(child)) queue.push_back(std::move(child));
    }
  }
  return out;
}

namespace {

/// Lazily materialized shortlex enumeration of an infinite tree.
class TreeWalker {
 public:
  explicit TreeWalker(ComputableTree t) : tree_(std::move(t)) {
    if (tree_.contains("")) queue_.push_back("");
  }

  std::optional<std::string> at(std::size_t i) {
    std::lock_guard lock(mu_);
    while (words_.size() <= i && !queue_.empty()) {
      std::string w = std::move(queue_.front());
      queue_.pop_front();
      for (char b : {'0', '1'}) {
        std::string child = w + b;
        if (tree_.contains(child)) queue_.push_back(std::move(child));
      }
      words_.push_back(std::move(w));
    }
    if (i < words_.size()) return words_[i];
    return std::nullopt;
  }

 private:
  ComputableTree tree_;
  std::mutex mu_;
  std::deque<std::string> queue_;
  std::vector<std::string> words_;
};

bool tree_search(const ComputableTree& t, const std::map<Point, Label>& labels, Point max_x,
                 std::string& tau) {
  // tau is compatible with labels below |tau|. Accept when no 1 sits at or
  // beyond |tau|.
  auto pending_one = labels.lower_bound(tau.size());
  bool needs_more = std::any_of(pending_one, labels.end(), [](const auto& kv) { return kv.second == 1; });
  if (!needs_more) return true;
  if (tau.size() > max_x) return false;
  auto it = labels.find(tau.size());
  for (char b : {'0', '1'}) {
    if (it != labels.end() && it->second != b - '0') continue;
    tau.push_back(b);
    if (t.contains(tau) && tree_search(t, labels, max_x, tau)) return true;
    tau.pop_back();
  }
  return false;
}

}  // namespace

HypothesisClass tree_class(const ComputableTree& t) {
  HypothesisClass c;
  c.name = "tree:" + t.name;
  c.kind = ClassKind::kBuiltin;
  auto make = [](const std::string& w) { return Hypothesis::from_term(EventuallyConstant{w, 0}); };
  if (t.depth) {
    std::vector<Hypothesis> hs;
    for (const auto& w : tree_words(t, std::numeric_limits<std::size_t>::max())) hs.push_back(make(w));
    c.members = Enumeration::of(std::move(hs));
    c.closure = c.members;
  } else {
    auto walker = std::make_shared<TreeWalker>(t);
    c.members.at = [walker, make](std::size_t i) -> std::optional<Hypothesis> {
      auto w = walker->at(i);
      if (!w) return std::nullopt;
      return make(*w);
    };
  }
  ComputableTree tree = t;
  c.exact = [tree, make](const Sample& s) -> std::optional<Hypothesis> {
    if (!binary_labels(s) || has_conflict(s) || !tree.contains("")) return std::nullopt;
    std::map<Point, Label> labels;
    for (const auto& p : s) labels[p.x] = p.y;
    std::string tau;
    if (!tree_search(tree, labels, s.empty() ? 0 : max_point(s), tau)) return std::nullopt;
    return make(tau);
  };
  return c;
}

}  // namespace uol
