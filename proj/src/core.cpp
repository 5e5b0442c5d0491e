#include "uol/core.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace uol {

// ---- text forms ------------------------------------------------------------

namespace {

std::uint64_t to_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError(std::string(what) + " expected, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      std::size_t p = text.find(',', start);
      auto tok = text.substr(start, p == std::string_view::npos ? p : p - start);
      w.push_back(static_cast<Label>(to_u64(tok, "label")));
      if (p == std::string_view::npos) break;
      start = p + 1;
    }
    return w;
  }
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("binary word expected, got '" + std::string(text) + "'");
    w.push_back(c - '0');
  }
  return w;
}

std::string format_word(const Word& w) {
  bool binary = std::all_of(w.begin(), w.end(), [](Label b) { return b == 0 || b == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (binary) {
      out += static_cast<char>('0' + w[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Sample parse_sample(std::string_view text) {
  Sample s;
  if (text.empty()) return s;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = text.find(',', start);
    auto tok = text.substr(start, p == std::string_view::npos ? p : p - start);
    auto colon = tok.find(':');
    if (colon == std::string_view::npos) throw ParseError("sample pair x:y expected, got '" + std::string(tok) + "'");
    s.push_back({to_u64(tok.substr(0, colon), "point"),
                 static_cast<Label>(to_u64(tok.substr(colon + 1), "label"))});
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return s;
}

std::string format_sample(const Sample& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i].x) + ':' + std::to_string(s[i].y);
  }
  return out;
}

Sample sample_of_word(const Word& w) {
  Sample s;
  s.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) s.push_back({i, w[i]});
  return s;
}

// ---- hypotheses ------------------------------------------------------------

namespace {

class TermHypothesis final : public HypothesisImpl {
 public:
  explicit TermHypothesis(ProgramTerm t) : term_(std::move(t)) {}
  Label eval(Point x, Fuel& fuel) const override { return evaluate_term(term_, x, fuel); }
  std::string describe() const override { return format_term(term_); }
  const ProgramTerm* term() const override { return &term_; }

 private:
  ProgramTerm term_;
};

class FunctionHypothesis final : public HypothesisImpl {
 public:
  FunctionHypothesis(std::string name, std::function<Label(Point)> f)
      : name_(std::move(name)), f_(std::move(f)) {}
  Label eval(Point x, Fuel& fuel) const override {
    fuel.charge(1);
    return f_(x);
  }
  std::string describe() const override { return name_; }

 private:
  std::string name_;
  std::function<Label(Point)> f_;
};

}  // namespace

Hypothesis::Hypothesis(std::shared_ptr<const HypothesisImpl> impl, std::uint64_t fuel)
    : impl_(std::move(impl)), fuel_(fuel) {
  if (!impl_) throw Error("null hypothesis");
}

Hypothesis Hypothesis::from_term(ProgramTerm term, std::uint64_t fuel) {
  return Hypothesis(std::make_shared<TermHypothesis>(std::move(term)), fuel);
}

Hypothesis Hypothesis::from_text(std::string_view term_text, std::uint64_t fuel) {
  return from_term(parse_term(term_text), fuel);
}

Hypothesis Hypothesis::from_function(std::string name, std::function<Label(Point)> f) {
  return Hypothesis(std::make_shared<FunctionHypothesis>(std::move(name), std::move(f)));
}

Label Hypothesis::operator()(Point x) const {
  Fuel meter(fuel_);
  return impl_->eval(x, meter);
}

// ---- oracles ---------------------------------------------------------------

Label evaluate(const Hypothesis& h, Point x) { return h(x); }

bool consistent(const Sample& s, const Hypothesis& h) {
  return std::all_of(s.begin(), s.end(), [&](const LabeledPoint& p) { return h(p.x) == p.y; });
}

bool has_conflict(const Sample& s) {
  std::map<Point, Label> seen;
  for (const auto& p : s) {
    auto [it, inserted] = seen.emplace(p.x, p.y);
    if (!inserted && it->second != p.y) return true;
  }
  return false;
}

Word prefix_word(const Hypothesis& h, std::size_t n) {
  Word w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = h(i);
  return w;
}

Hypothesis Enumeration::padded(std::size_t i) const {
  if (size) {
    if (*size == 0) throw Error("padded index into an empty enumeration");
    i = std::min(i, *size - 1);
  }
  auto h = at(i);
  if (!h) throw Error("enumeration ended at index " + std::to_string(i));
  return *h;
}

Enumeration Enumeration::of(std::vector<Hypothesis> items) {
  auto shared = std::make_shared<const std::vector<Hypothesis>>(std::move(items));
  Enumeration e;
  e.size = shared->size();
  e.at = [shared](std::size_t i) -> std::optional<Hypothesis> {
    if (i >= shared->size()) return std::nullopt;
    return (*shared)[i];
  };
  return e;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

ExtendabilityAnswer is_realizable(const Sample& s, const HypothesisClass& c, std::size_t budget) {
  if (budget == 0) throw Error("realizability budget must be positive");
  ExtendabilityAnswer ans;
  if (c.exact) {
    if (auto w = c.exact(s)) {
      ans.verdict = Verdict::kYes;
      ans.witness = std::move(*w);
    } else {
      ans.verdict = Verdict::kNo;
    }
    return ans;
  }
  if (has_conflict(s)) {
    ans.verdict = Verdict::kNo;
    return ans;
  }
  if (!c.members) return ans;
  std::size_t limit = c.members.size ? std::min(budget, *c.members.size) : budget;
  for (std::size_t i = 0; i < limit; ++i) {
    auto h = c.members(i);
    if (!h) break;
    if (consistent(s, *h)) {
      ans.verdict = Verdict::kYes;
      ans.witness_index = i;
      ans.witness = *h;
      return ans;
    }
  }
  if (c.members.size && limit == *c.members.size) ans.verdict = Verdict::kNo;
  return ans;
}

ExtendabilityAnswer closure_extendable(const HypothesisClass& c, const Word& w, std::size_t horizon,
                                       std::size_t budget) {
  if (horizon < w.size()) throw Error("closure horizon shorter than the word");
  return is_realizable(sample_of_word(w), c, budget);
}

BaireDistance baire_distance(const Hypothesis& f, const Hypothesis& g, std::size_t horizon) {
  if (horizon == 0) throw Error("baire_distance needs a positive horizon");
  BaireDistance d;
  for (std::size_t x = 0; x < horizon; ++x) {
    if (f(x) != g(x)) {
      d.first_disagreement = x;
      d.value = x == 0 ? Rational{2, 1} : Rational{1, x};
      return d;
    }
  }
  d.value = Rational{0, 1};
  d.horizon_limited = true;
  return d;
}

ForcingResult forcing_sample(const Learner& learner, const Hypothesis& h, std::size_t max_rounds,
                             std::size_t horizon, std::uint64_t fuel) {
  ForcingResult out;
  for (;;) {
    std::optional<Point> disagreement;
    for (Point x = 0; x < horizon; ++x) {
      if (predict_with_fuel(learner, out.sample, x, fuel) != h(x)) {
        disagreement = x;
        break;
      }
    }
    if (!disagreement) return out;
    if (out.extensions == max_rounds) {
      out.exhausted = true;
      return out;
    }
    out.sample.push_back({*disagreement, h(*disagreement)});
    ++out.extensions;
  }
}

}  // namespace uol
