#include "uol/experiment.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "uol/classes.hpp"
#include "uol/derandomize.hpp"
#include "uol/ewa.hpp"
#include "uol/learners.hpp"
#include "uol/priority.hpp"
#include "uol/random.hpp"

namespace uol {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_unsigned(std::string_view key, std::string_view v) {
  T out{};
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size())
    throw ConfigError("'" + std::string(key) + "' expects a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  std::string s(v);
  char* end = nullptr;
  double d = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw ConfigError("'" + std::string(key) + "' expects a number, got '" + s + "'");
  return d;
}

std::string format_double(double d) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool is_file(std::string_view name) {
  std::error_code ec;
  return std::filesystem::is_regular_file(std::filesystem::path(std::string(name)), ec);
}

std::string_view after(std::string_view s, std::string_view prefix) { return s.substr(prefix.size()); }

}  // namespace

void ExperimentConfig::set(std::string_view key, std::string_view raw) {
  std::string_view v = trim(raw);
  std::string k(trim(key));
  if (k == "experiment.command") command = v;
  else if (k == "class.name") class_name = v;
  else if (k == "class.budget") budget = parse_unsigned<std::size_t>(k, v);
  else if (k == "learner.name") learner = v;
  else if (k == "adversary.name") adversary = v;
  else if (k == "adversary.order") order = v;
  else if (k == "adversary.noise") {
    noise = parse_double(k, v);
    if (!(noise >= 0 && noise <= 1)) throw ConfigError("adversary.noise must lie in [0,1]");
  } else if (k == "registry.name") registry = v;
  else if (k == "graph.name") graph = v;
  else if (k == "game.rounds") rounds = parse_unsigned<std::uint64_t>(k, v);
  else if (k == "game.trials") trials = parse_unsigned<std::uint64_t>(k, v);
  else if (k == "game.seed") seed = parse_unsigned<std::uint64_t>(k, v);
  else if (k == "game.fuel") fuel = parse_unsigned<std::uint64_t>(k, v);
  else if (k == "closure.horizon") horizon = parse_unsigned<std::size_t>(k, v);
  else if (k == "construct.timesteps") timesteps = parse_unsigned<std::size_t>(k, v);
  else if (k == "construct.multiplier") multiplier = parse_unsigned<std::uint64_t>(k, v);
  else if (k == "output.path") out = v;
  else throw ConfigError("unknown config key '" + k + "'");
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) { return parse(text, ExperimentConfig{}); }

ExperimentConfig ExperimentConfig::parse(std::string_view text, ExperimentConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view l = trim(line);
    if (l.empty()) continue;
    auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    base.set(l.substr(0, eq), l.substr(eq + 1));
  }
  return base;
}

std::string ExperimentConfig::dump() const {
  std::ostringstream o;
  o << "experiment.command = " << command << "\n";
  o << "class.name = " << class_name << "\n";
  o << "class.budget = " << budget << "\n";
  o << "learner.name = " << learner << "\n";
  o << "adversary.name = " << adversary << "\n";
  o << "adversary.order = " << order << "\n";
  o << "adversary.noise = " << format_double(noise) << "\n";
  o << "registry.name = " << registry << "\n";
  o << "graph.name = " << graph << "\n";
  o << "game.rounds = " << rounds << "\n";
  o << "game.trials = " << trials << "\n";
  o << "game.seed = " << seed << "\n";
  o << "game.fuel = " << fuel << "\n";
  o << "closure.horizon = " << horizon << "\n";
  o << "construct.timesteps = " << timesteps << "\n";
  o << "construct.multiplier = " << multiplier << "\n";
  o << "output.path = " << out << "\n";
  return o.str();
}

std::shared_ptr<const LearnerRegistry> load_registry(std::string_view name) {
  if (name == "diag" || name == "construct")
    return std::make_shared<const LearnerRegistry>(LearnerRegistry::builtin(name));
  if (is_file(name)) return std::make_shared<const LearnerRegistry>(LearnerRegistry::parse(read_file(std::string(name))));
  throw ConfigError("unknown registry '" + std::string(name) + "'");
}

Graph load_graph(std::string_view name) {
  if (is_file(name)) return Graph::parse(read_file(std::string(name)));
  return Graph::named(name);
}

namespace {

ComputableTree load_tree(std::string_view spec) {
  if (is_file(spec)) {
    std::vector<std::string> words;
    std::istringstream in(read_file(std::string(spec)));
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      auto w = trim(line);
      if (w == "-") words.emplace_back();  // the empty word
      else if (!w.empty()) words.emplace_back(w);
    }
    return tree_from_words(std::string(spec), words);
  }
  return named_tree(spec);
}

}  // namespace

Context make_context(const ExperimentConfig& cfg) {
  Context ctx;
  ctx.config = cfg;
  ctx.registry = load_registry(cfg.registry);
  ctx.evil = std::make_shared<const EvilOracle>(ctx.registry, cfg.fuel);
  std::string_view n = cfg.class_name;
  if (n == "evil") {
    ctx.cls = evil_class(ctx.evil);
  } else if (n == "coloring" || n.starts_with("coloring:")) {
    ctx.graph = load_graph(n == "coloring" ? std::string_view(cfg.graph) : after(n, "coloring:"));
    ctx.cls = coloring_class(*ctx.graph);
  } else if (n.starts_with("tree:")) {
    ctx.cls = tree_class(load_tree(after(n, "tree:")));
  } else if (n.starts_with("explicit:")) {
    std::string path(after(n, "explicit:"));
    std::vector<Hypothesis> hs;
    for (auto& term : parse_program_file(read_file(path))) hs.push_back(Hypothesis::from_term(term, cfg.fuel));
    if (hs.empty()) throw ConfigError("explicit class file '" + path + "' has no terms");
    ctx.cls = explicit_class(path, std::move(hs));
  } else if (n.starts_with("threshold_grid:")) {
    auto rest = after(n, "threshold_grid:");
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ConfigError("threshold_grid:<stride>:<count> expected");
    ctx.cls = threshold_grid(parse_unsigned<std::uint64_t>("class.name", rest.substr(0, colon)),
                             parse_unsigned<std::size_t>("class.name", rest.substr(colon + 1)));
  } else {
    ctx.cls = builtin_class(n);
  }
  return ctx;
}

LearnerPtr make_learner(const Context& ctx, std::string_view name) {
  const auto& c = ctx.cls;
  if (name == "enumeration") return enumeration_learner(c.closure ? c.closure : c.members);
  if (name == "proper") {
    if (!c.closure) throw ConfigError("class '" + c.name + "' has no closure enumeration for a proper learner");
    return proper_learner(c);
  }
  if (name == "evil") return evil_class_learner(ctx.evil);
  if (name == "ewa") return ewa_doubling(c.members);
  if (name == "derandomized-ewa") return derandomize(ewa_doubling(c.members));
  if (name.starts_with("registry:")) return registry_learner(after(name, "registry:"));
  if (name.starts_with("derandomized:")) return derandomize(randomized_learner(after(name, "derandomized:")));
  return randomized_learner(name);
}

PointOrder make_order(const Context& ctx, std::string_view name) {
  const auto& cfg = ctx.config;
  if (name == "identity") return identity_order();
  if (name == "random") return permutation_order(1000, mix_seed(cfg.seed, 1));
  if (name.starts_with("random:"))
    return permutation_order(parse_unsigned<std::size_t>("adversary.order", after(name, "random:")), mix_seed(cfg.seed, 1));
  if (name.starts_with("uniform:"))
    return uniform_order(parse_unsigned<std::size_t>("adversary.order", after(name, "uniform:")), mix_seed(cfg.seed, 2));
  if (name.starts_with("cycle:")) return cycle_order(parse_unsigned<std::size_t>("adversary.order", after(name, "cycle:")));
  if (name.starts_with("repeat:")) return repeat_order(parse_unsigned<Point>("adversary.order", after(name, "repeat:")));
  throw ConfigError("unknown point order '" + std::string(name) + "'");
}

AdversaryPtr make_adversary(const Context& ctx, std::string_view name) {
  const auto& cfg = ctx.config;
  auto order = [&] { return make_order(ctx, cfg.order); };
  if (name == "worst_case") return worst_case(ctx.cls, order(), cfg.budget);
  if (name.starts_with("fixed:")) return fixed_target(Hypothesis::from_text(after(name, "fixed:"), cfg.fuel), order());
  if (name.starts_with("member:") || name.starts_with("closure:")) {
    bool member = name.starts_with("member:");
    auto i = parse_unsigned<std::size_t>("adversary.name", after(name, member ? "member:" : "closure:"));
    const Enumeration& e = member ? ctx.cls.members : ctx.cls.closure;
    if (!e) throw ConfigError("class '" + ctx.cls.name + "' has no closure enumeration");
    auto h = e(i);
    if (!h) throw ConfigError("class '" + ctx.cls.name + "' has no element " + std::to_string(i));
    return fixed_target(*h, order());
  }
  if (name.starts_with("evil:")) {
    auto n = parse_unsigned<std::size_t>("adversary.name", after(name, "evil:"));
    if (n >= ctx.registry->size()) throw ConfigError("evil adversary index out of range");
    return evil_adversary(ctx.evil, n);
  }
  if (name.starts_with("noisy:"))
    return noisy_target(Hypothesis::from_text(after(name, "noisy:"), cfg.fuel), order(), cfg.noise, mix_seed(cfg.seed, 3));
  if (name.starts_with("alternating:")) return alternating(parse_unsigned<Point>("adversary.name", after(name, "alternating:")));
  throw ConfigError("unknown adversary '" + std::string(name) + "'");
}

namespace {

Status transcript_status(const Transcript& t) {
  if (t.abort == AbortKind::kFuel) return Status::kFuelAbort;
  if (t.abort == AbortKind::kError || t.contract_violated()) return Status::kContractViolation;
  return Status::kOk;
}

GameOptions game_options(const Context& ctx) {
  GameOptions g;
  g.rounds = ctx.config.rounds;
  g.fuel = ctx.config.fuel;
  g.seed = ctx.config.seed;
  g.audit = &ctx.cls;
  g.audit_budget = ctx.config.budget;
  return g;
}

CommandResult cmd_run(const ExperimentConfig& cfg) {
  if (cfg.rounds == 0) throw ConfigError("game.rounds must be at least 1");
  auto ctx = make_context(cfg);
  auto learner = make_learner(ctx, cfg.learner);
  auto adversary = make_adversary(ctx, cfg.adversary);
  auto t = run_game(*learner, *adversary, game_options(ctx));
  CommandResult r;
  r.files["main"] = t.to_tsv();
  r.status = transcript_status(t);
  r.message = "rounds " + std::to_string(t.rounds.size()) + ", mistakes " + std::to_string(t.mistakes());
  if (t.aborted()) r.message += ", aborted: " + t.abort_reason;
  return r;
}

CommandResult cmd_regret(const ExperimentConfig& cfg) {
  if (cfg.rounds == 0) throw ConfigError("game.rounds must be at least 1");
  if (cfg.trials < 2) throw ConfigError("game.trials must be at least 2");
  auto ctx = make_context(cfg);
  auto learner = make_learner(ctx, cfg.learner);
  make_adversary(ctx, cfg.adversary);  // validate before the sweep
  ExpectedOptions o;
  o.game = game_options(ctx);
  o.game.audit = nullptr;
  o.trials = cfg.trials;
  o.pool_budget = cfg.budget;
  o.blocks = true;
  auto rep = estimate_expected(
      *learner, [&](std::uint64_t) { return make_adversary(ctx, cfg.adversary); }, ctx.cls.members, o);
  CommandResult r;
  r.files["main"] = rep.regret.to_csv();
  r.files["blocks"] = rep.blocks_csv();
  const auto& last = rep.regret.rows.back();
  r.message = "mean regret at n=" + std::to_string(last.n) + ": " + format_double(last.regret);
  return r;
}

CommandResult cmd_diag(const ExperimentConfig& cfg) {
  auto ctx = make_context(cfg);
  const auto& reg = *ctx.registry;
  auto evil_learner = evil_class_learner(ctx.evil);
  std::ostringstream o;
  o << "# registry\t" << cfg.registry << "\n# rounds\t" << cfg.rounds << "\n";
  o << "n\tlearner\ttotality\tprefix\tmistakes_after_n\trounds_after_n\tevil_learner_mistakes\tbound\n";
  Status status = Status::kOk;
  std::vector<std::string> prefixes;
  for (std::size_t n = 0; n < reg.size(); ++n) {
    const auto& e = reg.at(n);
    auto p = ctx.evil->prefix(n, cfg.rounds);
    std::string shown = p.word.substr(0, 32) + (p.word.size() > 32 ? "..." : "");
    o << n << '\t' << e.name << '\t' << (e.total() ? "total" : "unknown") << '\t';
    if (!p.defined()) {
      o << shown << "|undefined@" << *p.undefined_at << "\t-\t-\t-\t-\n";
      continue;
    }
    prefixes.push_back(p.word);
    GameOptions g;
    g.rounds = cfg.rounds;
    g.fuel = cfg.fuel;
    g.seed = cfg.seed;
    auto adv = evil_adversary(ctx.evil, n);
    auto against_self = run_game(*e.learner, *adv, g);
    adv = evil_adversary(ctx.evil, n);
    auto against_evil = run_game(*evil_learner, *adv, g);
    if (against_self.aborted() || against_evil.aborted()) status = Status::kFuelAbort;
    std::uint64_t after = cfg.rounds > n + 1 ? cfg.rounds - (n + 1) : 0;
    o << shown << '\t' << against_self.mistakes_between(n + 1, cfg.rounds) << '\t' << after << '\t' << against_evil.mistakes() << '\t'
      << n + 2 << '\n';
  }
  bool distinct = true;
  for (std::size_t i = 0; i < prefixes.size(); ++i)
    for (std::size_t j = i + 1; j < prefixes.size(); ++j) distinct = distinct && prefixes[i] != prefixes[j];
  o << "# distinct_sequences\t" << (distinct ? "yes" : "no") << "\n";
  CommandResult r;
  r.files["main"] = o.str();
  r.status = status;
  return r;
}

CommandResult cmd_construct(const ExperimentConfig& cfg) {
  auto reg = load_registry(cfg.registry);
  if (cfg.timesteps < reg->size()) throw ConfigError("construct.timesteps must be at least the registry size");
  auto trace = priority_construct(*reg, cfg.timesteps, FuelSchedule{cfg.multiplier});
  CommandResult r;
  r.files["main"] = trace.format();
  r.message = "entries " + std::to_string(trace.entries().size());
  return r;
}

CommandResult cmd_color(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  if (c.class_name != "coloring" && !c.class_name.starts_with("coloring:")) c.class_name = "coloring";
  auto ctx = make_context(c);
  const Graph& g = *ctx.graph;
  std::ostringstream o;
  o << "# graph\t" << (c.class_name == "coloring" ? c.graph : c.class_name.substr(9)) << "\n";
  o << "# vertices\t" << g.vertices() << "\n# colors\t" << g.colors() << "\n";
  o << "# proper_colorings\t" << *ctx.cls.members.size << "\n";
  auto least = extension_operator(g, {});
  o << "# least_extension\t";
  for (std::size_t i = 0; i < least.size(); ++i) o << (i ? "," : "") << least[i];
  o << "\n";
  CommandResult r;
  if (c.rounds > 0) {
    auto learner = make_learner(ctx, c.learner);
    auto adversary = make_adversary(ctx, c.adversary);
    auto t = run_game(*learner, *adversary, game_options(ctx));
    o << t.to_tsv();
    r.status = transcript_status(t);
  }
  r.files["main"] = o.str();
  return r;
}

void words_of_length(const std::vector<Label>& labels, std::size_t n, Word& w, std::vector<Word>& out) {
  if (w.size() == n) {
    out.push_back(w);
    return;
  }
  for (Label l : labels) {
    w.push_back(l);
    words_of_length(labels, n, w, out);
    w.pop_back();
  }
}

CommandResult cmd_closure(const ExperimentConfig& cfg) {
  auto ctx = make_context(cfg);
  std::ostringstream o;
  o << "# class\t" << ctx.cls.name << "\n# horizon\t" << cfg.horizon << "\nword\tverdict\twitness\n";
  for (std::size_t len = 0; len <= cfg.horizon; ++len) {
    std::vector<Word> words;
    Word w;
    words_of_length(ctx.cls.labels, len, w, words);
    for (const auto& word : words) {
      auto a = closure_extendable(ctx.cls, word, cfg.horizon, cfg.budget);
      o << (word.empty() ? "-" : format_word(word)) << '\t' << to_string(a.verdict) << '\t'
        << (a.witness ? a.witness->describe() : "-") << '\n';
    }
  }
  CommandResult r;
  r.files["main"] = o.str();
  return r;
}

}  // namespace

CommandResult run_command(const ExperimentConfig& cfg) {
  try {
    if (cfg.command == "run") return cmd_run(cfg);
    if (cfg.command == "regret") return cmd_regret(cfg);
    if (cfg.command == "diag") return cmd_diag(cfg);
    if (cfg.command == "construct") return cmd_construct(cfg);
    if (cfg.command == "color") return cmd_color(cfg);
    if (cfg.command == "closure") return cmd_closure(cfg);
    throw ConfigError("unknown command '" + cfg.command + "'");
  } catch (const ConfigError& e) {
    return {Status::kConfigError, {}, e.what()};
  } catch (const UnknownName& e) {
    return {Status::kConfigError, {}, e.what()};
  } catch (const ParseError& e) {
    return {Status::kConfigError, {}, e.what()};
  } catch (const GraphNotColorable& e) {
    return {Status::kConfigError, {}, e.what()};
  } catch (const FuelExhausted& e) {
    return {Status::kFuelAbort, {}, e.what()};
  } catch (const Error& e) {
    return {Status::kContractViolation, {}, e.what()};
  }
}

}  // namespace uol
