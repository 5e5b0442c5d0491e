#pragma once

// Concrete hypothesis classes, each with the strongest closure oracle we
// can give it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uol/core.hpp"

namespace uol {

/// singletons, finite_support, thresholds_nat or thresholds_int.
///
/// Member and closure enumerations:
///   singletons      members: singleton at i; closure: zeros, then members
///   finite_support  members: support = binary digits of i; closure: none
///                   (every word is extendable, the closure is uncountable)
///   thresholds_nat  members: cut i; closure: zeros, then members
///   thresholds_int  members: cut zigzag(i); closure: zeros, ones, then members
HypothesisClass builtin_class(std::string_view name);

std::vector<std::string> builtin_class_names();

/// A finite class given by its members; the closure is the class itself.
HypothesisClass explicit_class(std::string name, std::vector<Hypothesis> members);

/// Thresholds on the naturals at cuts 0, stride, 2*stride, ... (count many).
HypothesisClass threshold_grid(std::uint64_t stride, std::size_t count);

/// A decidable prefix-closed set of binary words.
struct ComputableTree {
  std::string name;
  std::function<bool(std::string_view)> contains;
  /// Length of the longest word, when the tree is finite.
  std::optional<std::size_t> depth;
};

/// Trees from an explicit word list; throws ParseError unless prefix-closed.
ComputableTree tree_from_words(std::string name, const std::vector<std::string>& words);

/// Named trees:
///   zeros              words made of 0s only (infinite)
///   full:<d>           every word of length <= d
///   full0:<d>          every word whose bits past position d are all 0 (infinite)
///   random:<d>:<seed>  a pseudorandom finite tree of depth d
ComputableTree named_tree(std::string_view spec);

/// Words of the tree in shortlex order, up to `limit` of them.
std::vector<std::string> tree_words(const ComputableTree& t, std::size_t limit);

/// The class {sigma 0^inf : sigma in T}. The member enumeration follows the
/// shortlex order of T. The realizability oracle is exact: a sample with
/// largest point M is realizable iff some tau in T with |tau| <= M+1 has
/// tau 0^inf consistent with it. Finite trees also enumerate their closure.
HypothesisClass tree_class(const ComputableTree& t);

}  // namespace uol
