#include "uol/registry.hpp"

#include <algorithm>
#include <sstream>

namespace uol {

namespace {

class ScanningLearner final : public Learner {
 public:
  enum class Rule { kConst, kCopyLast, kFlipLast, kMajority, kParity, kSlowConst, kDiverge };

  ScanningLearner(std::string name, Rule rule, Label bit = 0)
      : name_(std::move(name)), rule_(rule), bit_(bit) {}

  std::string name() const override { return name_; }

  Label predict(const Sample& s, Point, Fuel& fuel, AdviceReader*) const override {
    switch (rule_) {
      case Rule::kDiverge:
        fuel.charge(fuel.remaining() + 1);
        return 0;
      case Rule::kSlowConst: {
        std::uint64_t cost = s.size() >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.size());
        fuel.charge(cost);
        return bit_;
      }
      default: break;
    }
    fuel.charge(s.size() + 1);
    switch (rule_) {
      case Rule::kConst: return bit_;
      case Rule::kCopyLast: return s.empty() ? 0 : s.back().y;
      case Rule::kFlipLast: return s.empty() ? 1 : 1 - s.back().y;
      case Rule::kMajority: {
        auto ones = std::count_if(s.begin(), s.end(), [](const LabeledPoint& p) { return p.y == 1; });
        return 2 * static_cast<std::size_t>(ones) > s.size() ? 1 : 0;
      }
      case Rule::kParity: {
        auto ones = std::count_if(s.begin(), s.end(), [](const LabeledPoint& p) { return p.y == 1; });
        return static_cast<Label>(ones % 2);
      }
      default: return 0;
    }
  }

 private:
  std::string name_;
  Rule rule_;
  Label bit_;
};

Label bit_arg(std::string_view c, std::size_t at) {
  auto rest = c.substr(at);
  if (rest == "0") return 0;
  if (rest == "1") return 1;
  throw ParseError("bit argument expected in '" + std::string(c) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LearnerPtr registry_learner(std::string_view c) {
  using Rule = ScanningLearner::Rule;
  std::string name(c);
  if (c.starts_with("const:")) return std::make_shared<ScanningLearner>(name, Rule::kConst, bit_arg(c, 6));
  if (c.starts_with("slow_const:"))
    return std::make_shared<ScanningLearner>(name, Rule::kSlowConst, bit_arg(c, 11));
  if (c == "copy_last") return std::make_shared<ScanningLearner>(name, Rule::kCopyLast);
  if (c == "flip_last") return std::make_shared<ScanningLearner>(name, Rule::kFlipLast);
  if (c == "majority") return std::make_shared<ScanningLearner>(name, Rule::kMajority);
  if (c == "parity") return std::make_shared<ScanningLearner>(name, Rule::kParity);
  if (c == "diverge") return std::make_shared<ScanningLearner>(name, Rule::kDiverge);
  throw UnknownName("unknown registry learner '" + name + "'");
}

TotalityFlag default_totality(std::string_view c) {
  return c == "diverge" ? TotalityFlag::kUnknown : TotalityFlag::kTotal;
}

LearnerRegistry LearnerRegistry::parse(std::string_view text) {
  std::vector<RegistryEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    auto space = l.find_first_of(" \t");
    std::string_view ctor = l.substr(0, space);
    TotalityFlag flag = default_totality(ctor);
    if (space != std::string_view::npos) {
      std::string_view f = trim(l.substr(space));
      if (f == "total") flag = TotalityFlag::kTotal;
      else if (f == "unknown") flag = TotalityFlag::kUnknown;
      else throw ParseError("totality flag must be 'total' or 'unknown', got '" + std::string(f) + "'");
    }
    out.push_back({std::string(ctor), registry_learner(ctor), flag});
  }
  return LearnerRegistry(std::move(out));
}

std::string LearnerRegistry::format() const {
  std::string out;
  for (const auto& e : entries_)
    out += e.name + (e.total() ? " total\n" : " unknown\n");
  return out;
}

LearnerRegistry LearnerRegistry::builtin(std::string_view name) {
  if (name == "diag")
    return parse("const:0\nconst:1\ncopy_last\nflip_last\nmajority\nparity\n");
  if (name == "construct")
    return parse("const:0\nconst:1\ncopy_last\ndiverge\nslow_const:0\nflip_last\n");
  throw UnknownName("unknown builtin registry '" + std::string(name) + "'");
}

}  // namespace uol
