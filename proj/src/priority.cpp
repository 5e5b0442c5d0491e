#include "uol/priority.hpp"

#include <algorithm>
#include <sstream>

namespace uol {

std::string ConstructionEntry::word() const {
  return std::string(requirement, '0') + std::string(ones, '1');
}

std::string ConstructionEntry::notation() const {
  return "0^" + std::to_string(requirement) + "1^" + std::to_string(ones);
}

ProgramIndex ConstructionEntry::index() const { return make_eventually_constant(word(), 0); }

Hypothesis ConstructionEntry::hypothesis() const {
  return Hypothesis::from_term(EventuallyConstant{word(), 0});
}

std::vector<ConstructionEntry> ConstructionTrace::a_at(std::size_t s) const {
  auto n = a_size(s);
  return {entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(n)};
}

RequirementState ConstructionTrace::state(std::size_t e, std::size_t s) const {
  const auto& changes = gamma_changes_.at(e);
  RequirementState st;
  auto it = std::upper_bound(changes.begin(), changes.end(), std::pair{s, ~std::size_t{0}});
  if (it != changes.begin()) st.ones = std::prev(it)->second;
  st.active = !deactivated_.at(e) || *deactivated_.at(e) > s;
  return st;
}

std::string ConstructionTrace::gamma(std::size_t e, std::size_t s) const {
  return std::string(e, '0') + std::string(state(e, s).ones, '1');
}

HypothesisClass ConstructionTrace::as_class() const {
  std::vector<Hypothesis> hs;
  hs.reserve(entries_.size());
  for (const auto& en : entries_) hs.push_back(en.hypothesis());
  HypothesisClass c;
  c.name = "priority";
  c.kind = ClassKind::kExplicitFinite;
  c.members = Enumeration::of(hs);
  c.closure = c.members;
  return c;
}

std::string ConstructionTrace::format() const {
  std::ostringstream out;
  out << "# requirements " << requirements_ << "\n";
  for (std::size_t e = 0; e < requirements_; ++e) out << "# R" << e << " " << names_[e] << "\n";
  out << "# s\t|A_s|\tadded\tprobes\tstates\n";
  std::size_t entry = 0, probe = 0;
  for (std::size_t s = 0; s < timesteps(); ++s) {
    out << s << '\t' << a_size_[s] << '\t';
    bool first = true;
    for (; entry < a_size_[s]; ++entry) {
      out << (first ? "" : ",") << entries_[entry].notation();
      first = false;
    }
    if (first) out << '-';
    out << '\t';
    first = true;
    for (; probe < probes_.size() && probes_[probe].timestep == s; ++probe) {
      const auto& p = probes_[probe];
      out << (first ? "" : ",") << 'R' << p.requirement << '=';
      if (p.result) out << *p.result;
      else out << "running";
      first = false;
    }
    if (first) out << '-';
    out << '\t';
    for (std::size_t e = 0; e < requirements_ && e <= s; ++e) {
      auto st = state(e, s);
      out << (e ? " " : "") << 'R' << e << ':' << (st.active ? "active" : "inactive") << ":0^" << e
          << "1^" << st.ones;
    }
    out << '\n';
  }
  return out.str();
}

ConstructionTrace priority_construct(const LearnerRegistry& r, std::size_t s_max,
                                     FuelSchedule schedule) {
  ConstructionTrace t;
  const std::size_t n = r.size();
  t.requirements_ = n;
  for (const auto& en : r.entries()) t.names_.push_back(en.name);
  t.gamma_changes_.assign(n, {});
  t.deactivated_.assign(n, std::nullopt);

  std::vector<RequirementState> st(n);
  // The sample gamma_e shown to learner e, kept incrementally.
  std::vector<Sample> shown(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t x = 0; x < e; ++x) shown[e].push_back({x, 0});
    shown[e].push_back({e, 1});
    t.gamma_changes_[e].push_back({0, 1});
  }

  for (std::size_t s = 0; s <= s_max; ++s) {
    for (std::size_t e = 0; e < n && e <= s; ++e) {
      if (s == e) {
        t.entries_.push_back({e, st[e].ones, s});
        continue;
      }
      if (!st[e].active) continue;
      ProbeEvent ev{s, e, shown[e].size(), schedule.budget(s), std::nullopt};
      try {
        Fuel fuel(ev.budget);
        ev.result = r.at(e).learner->predict(shown[e], shown[e].size(), fuel, nullptr);
      } catch (const FuelExhausted&) {
      }
      t.probes_.push_back(ev);
      if (!ev.result) continue;
      if (*ev.result == 1) {
        st[e].active = false;
        t.deactivated_[e] = s;
      } else {
        shown[e].push_back({shown[e].size(), 1});
        ++st[e].ones;
        t.entries_.push_back({e, st[e].ones, s});
        t.gamma_changes_[e].push_back({s, st[e].ones});
      }
    }
    t.a_size_.push_back(t.entries_.size());
  }
  return t;
}

}  // namespace uol
