#pragma once

// Finite graphs, proper k-colorings of an initial segment of the vertex
// order, the lexicographically least extension operator, and the class of
// total colorings it produces. Colors are 1..k; points past the last vertex
// are colored 1.

#include <string>
#include <string_view>
#include <vector>

#include "uol/core.hpp"

namespace uol {

class ImproperColoring : public Error {
 public:
  using Error::Error;
};
class NotExtendable : public Error {
 public:
  using Error::Error;
};
class GraphNotColorable : public Error {
 public:
  using Error::Error;
};

class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, unsigned k);

  std::size_t vertices() const noexcept { return adj_.size(); }
  unsigned colors() const noexcept { return k_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).at(v); }
  void add_edge(std::size_t u, std::size_t v);
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// "n k" on the first line, then one "u v" edge per line; '#' comments.
  static Graph parse(std::string_view text);
  std::string format() const;

  /// complete:n:k, cycle:n:k, path:n:k, empty:n:k, petersen:k, grid:r:c:k,
  /// wheel:n:k, prism:k, octahedron:k
  static Graph named(std::string_view spec);

 private:
  unsigned k_ = 1;
  std::vector<std::vector<bool>> adj_;
};

/// Colors of vertices 0..|c|-1.
using Coloring = std::vector<Label>;

/// Throws ImproperColoring unless f colors a prefix of the vertices with
/// colors 1..k and no edge inside that prefix is monochromatic.
void check_partial_coloring(const Graph& g, const Coloring& f);

bool coloring_extendable(const Graph& g, const Coloring& f);

/// The lexicographically least total k-coloring extending f.
Coloring extension_operator(const Graph& g, const Coloring& f);

/// Every proper total coloring, in lexicographic order.
std::vector<Coloring> all_colorings(const Graph& g);

Hypothesis coloring_hypothesis(const Coloring& c);

/// Members are the total colorings c(f, .) in lexicographic order, which
/// is every proper total coloring. The closure equals the class; its oracle
/// extends the partial coloring read off a sample. Throws GraphNotColorable.
HypothesisClass coloring_class(const Graph& g);

}  // namespace uol
