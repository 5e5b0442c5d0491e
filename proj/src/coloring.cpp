#include "uol/coloring.hpp"

#include <charconv>
#include <functional>
#include <optional>
#include <map>
#include <mutex>
#include <sstream>

namespace uol {

Graph::Graph(std::size_t n, unsigned k) : k_(k), adj_(n, std::vector<bool>(n, false)) {
  if (k == 0) throw ParseError("a graph needs at least one color");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertices() || v >= vertices()) throw ParseError("edge endpoint out of range");
  if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u));
  adj_[u][v] = adj_[v][u] = true;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertices(); ++u)
    for (std::size_t v = u + 1; v < vertices(); ++v)
      if (adj_[u][v]) out.emplace_back(u, v);
  return out;
}

Graph Graph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::size_t a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw ParseError("graph line " + std::to_string(lineno) + ": expected two numbers");
    std::string extra;
    if (ls >> extra) throw ParseError("graph line " + std::to_string(lineno) + ": trailing input");
    if (!g) g.emplace(a, static_cast<unsigned>(b));
    else g->add_edge(a, b);
  }
  if (!g) throw ParseError("graph file has no header line");
  return *g;
}

std::string Graph::format() const {
  std::string out = std::to_string(vertices()) + " " + std::to_string(k_) + "\n";
  for (auto [u, v] : edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace {

std::vector<std::size_t> numbers(std::string_view s) {
  std::vector<std::size_t> out;
  while (!s.empty()) {
    auto colon = s.find(':');
    auto part = s.substr(0, colon);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || p != part.data() + part.size())
      throw ParseError("bad number '" + std::string(part) + "' in graph name");
    out.push_back(v);
    if (colon == std::string_view::npos) break;
    s.remove_prefix(colon + 1);
  }
  return out;
}

}  // namespace

Graph Graph::named(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view kind = spec.substr(0, colon);
  auto args = colon == std::string_view::npos ? std::vector<std::size_t>{} : numbers(spec.substr(colon + 1));
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw ParseError("graph '" + std::string(spec) + "' expects " + std::to_string(n) + " parameters");
  };
  auto k = [&] { return static_cast<unsigned>(args.back()); };
  if (kind == "complete" || kind == "cycle" || kind == "path" || kind == "empty" || kind == "wheel") {
    need(2);
    std::size_t n = args[0];
    Graph g(n, k());
    if (kind == "complete")
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    if (kind == "path" || kind == "cycle")
      for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    if (kind == "cycle" && n >= 3) g.add_edge(n - 1, 0);
    if (kind == "wheel") {  // hub 0 and rim 1..n-1
      for (std::size_t u = 1; u < n; ++u) {
        g.add_edge(0, u);
        g.add_edge(u, u + 1 < n ? u + 1 : 1);
      }
    }
    return g;
  }
  if (kind == "grid") {
    need(3);
    std::size_t r = args[0], c = args[1];
    Graph g(r * c, k());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (j + 1 < c) g.add_edge(i * c + j, i * c + j + 1);
        if (i + 1 < r) g.add_edge(i * c + j, (i + 1) * c + j);
      }
    return g;
  }
  if (kind == "petersen") {
    need(1);
    Graph g(10, k());
    for (std::size_t i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
  }
  if (kind == "prism") {
    need(1);
    Graph g(6, k());
    for (std::size_t i = 0; i < 3; ++i) {
      g.add_edge(i, (i + 1) % 3);
      g.add_edge(3 + i, 3 + (i + 1) % 3);
      g.add_edge(i, i + 3);
    }
    return g;
  }
  if (kind == "octahedron") {
    need(1);
    Graph g(6, k());
    for (std::size_t u = 0; u < 6; ++u)
      for (std::size_t v = u + 1; v < 6; ++v)
        if (v != u + 3) g.add_edge(u, v);
    return g;
  }
  throw UnknownName("unknown graph '" + std::string(spec) + "'");
}

void check_partial_coloring(const Graph& g, const Coloring& f) {
  if (f.size() > g.vertices())
    throw ImproperColoring("coloring has " + std::to_string(f.size()) + " entries for " +
                           std::to_string(g.vertices()) + " vertices");
  for (std::size_t u = 0; u < f.size(); ++u) {
    if (f[u] < 1 || f[u] > static_cast<Label>(g.colors()))
      throw ImproperColoring("vertex " + std::to_string(u) + " has color " + std::to_string(f[u]) +
                             " outside 1.." + std::to_string(g.colors()));
    for (std::size_t v = 0; v < u; ++v)
      if (g.adjacent(u, v) && f[u] == f[v])
        throw ImproperColoring("adjacent vertices " + std::to_string(v) + " and " +
                               std::to_string(u) + " share color " + std::to_string(f[u]));
  }
}

namespace {

bool fits(const Graph& g, const Coloring& c, std::size_t u, Label color) {
  for (std::size_t v = 0; v < u; ++v)
    if (g.adjacent(u, v) && c[v] == color) return false;
  return true;
}

bool extend_from(const Graph& g, Coloring& c, std::size_t u) {
  if (u == g.vertices()) return true;
  for (Label color = 1; color <= static_cast<Label>(g.colors()); ++color) {
    if (!fits(g, c, u, color)) continue;
    c[u] = color;
    if (extend_from(g, c, u + 1)) return true;
  }
  c[u] = 0;
  return false;
}

template <class Visit>
void each_coloring(const Graph& g, Coloring& c, std::size_t u, Visit& visit) {
  if (u == g.vertices()) {
    visit(c);
    return;
  }
  for (Label color = 1; color <= static_cast<Label>(g.colors()); ++color) {
    if (!fits(g, c, u, color)) continue;
    c[u] = color;
    each_coloring(g, c, u + 1, visit);
  }
  c[u] = 0;
}

}  // namespace

bool coloring_extendable(const Graph& g, const Coloring& f) {
  check_partial_coloring(g, f);
  Coloring c = f;
  c.resize(g.vertices(), 0);
  return extend_from(g, c, f.size());
}

Coloring extension_operator(const Graph& g, const Coloring& f) {
  check_partial_coloring(g, f);
  Coloring c = f;
  c.resize(g.vertices(), 0);
  if (!extend_from(g, c, f.size())) throw NotExtendable("partial coloring has no total extension");
  return c;
}

std::vector<Coloring> all_colorings(const Graph& g) {
  std::vector<Coloring> out;
  Coloring c(g.vertices(), 0);
  auto visit = [&](const Coloring& x) { out.push_back(x); };
  each_coloring(g, c, 0, visit);
  return out;
}

namespace {

class ColoringHypothesis final : public HypothesisImpl {
 public:
  explicit ColoringHypothesis(Coloring c) : c_(std::move(c)) {}
  Label eval(Point x, Fuel& fuel) const override {
    fuel.charge(1);
    return x < c_.size() ? c_[x] : 1;
  }
  std::string describe() const override {
    std::string s = "coloring:";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s;
  }

 private:
  Coloring c_;
};

}  // namespace

Hypothesis coloring_hypothesis(const Coloring& c) {
  return Hypothesis(std::make_shared<ColoringHypothesis>(c));
}

HypothesisClass coloring_class(const Graph& g) {
  auto colorings = all_colorings(g);
  if (colorings.empty())
    throw GraphNotColorable("graph has no proper " + std::to_string(g.colors()) + "-coloring");
  std::vector<Hypothesis> members;
  members.reserve(colorings.size());
  for (const auto& c : colorings) members.push_back(coloring_hypothesis(c));

  HypothesisClass h;
  h.name = "coloring";
  h.kind = ClassKind::kExplicitFinite;
  h.labels.clear();
  for (Label c = 1; c <= static_cast<Label>(g.colors()); ++c) h.labels.push_back(c);
  h.members = Enumeration::of(members);
  h.closure = h.members;
  h.exact = [g](const Sample& s) -> std::optional<Hypothesis> {
    if (has_conflict(s)) return std::nullopt;
    // Read off the partial coloring; the extension has to respect points
    // scattered anywhere in the vertex order, so fix them during the search.
    std::map<Point, Label> fixed;
    for (const auto& p : s) {
      if (p.x >= g.vertices()) {
        if (p.y != 1) return std::nullopt;
        continue;
      }
      fixed[p.x] = p.y;
    }
    Coloring c(g.vertices(), 0);
    std::size_t n = g.vertices();
    std::function<bool(std::size_t)> go = [&](std::size_t u) -> bool {
      if (u == n) return true;
      auto it = fixed.find(u);
      for (Label color = 1; color <= static_cast<Label>(g.colors()); ++color) {
        if (it != fixed.end() && it->second != color) continue;
        if (!fits(g, c, u, color)) continue;
        c[u] = color;
        if (go(u + 1)) return true;
      }
      c[u] = 0;
      return false;
    };
    if (!go(0)) return std::nullopt;
    return coloring_hypothesis(c);
  };
  return h;
}

}  // namespace uol
