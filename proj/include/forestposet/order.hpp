#pragma once

// The partial order on For(I) and materialized intervals.
//
// F <= G is decided by the recursive decomposition along the root splits of
// the trees of G. Under a tree T = T1 v T2, the trees of F either all lie on
// one side of the root split, or exactly one of them straddles it; in the
// straddling case its root is sent to the root of T and its two subtrees must
// fall on opposite sides. The same walk yields the marked vertices: the image
// of V(F) inside V(G).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forestposet/forest.hpp"
#include "forestposet/poset.hpp"

namespace forestposet {

class NotComparableError : public std::invalid_argument {
 public:
  NotComparableError(const Forest& lower, const Forest& upper);
};

// F' together with the marked subset V of its inner vertices.
struct MarkedTreePair {
  Forest upper;
  std::vector<VertexId> marked;  // sorted

  // Throws std::invalid_argument unless marked is a subset of V(upper).
  MarkedTreePair(Forest upper_forest, std::vector<VertexId> marked_vertices);

  bool is_marked(const VertexId& v) const;
  std::size_t unmarked_count() const { return upper.inner_count() - marked.size(); }
  // Stable text key, used for memoization and reports.
  std::string key() const;

  friend bool operator==(const MarkedTreePair& a, const MarkedTreePair& b) {
    return a.upper == b.upper && a.marked == b.marked;
  }
};

// Throws std::invalid_argument when the label sets differ.
bool leq(const Forest& lower, const Forest& upper);

// Image of V(lower) in V(upper); throws NotComparableError.
std::vector<VertexId> marked_vertices(const Forest& lower, const Forest& upper);

MarkedTreePair marked_pair(const Forest& lower, const Forest& upper);

// All F <= upper, sorted by (inner vertex count, text).
std::vector<Forest> lower_set(const Forest& upper);
std::vector<Forest> lower_set(const Tree& upper);

// The trees of `upper`, each paired with the restriction of `lower` to it.
struct TreeFactor {
  Forest lower;
  Tree upper;
};
std::vector<TreeFactor> split_by_trees(const Forest& lower, const Forest& upper);

// Decomposition of lower <= upper at the root of a non-leaf tree upper = T1 v T2.
// When the root is marked, `left_part` / `right_part` are the leaf sets of the
// two halves of the tree of `lower` that straddles the split.
struct RootSplit {
  Tree left_upper;
  Tree right_upper;
  Forest left_lower;
  Forest right_lower;
  bool root_marked = false;
  LabelSet left_part;
  LabelSet right_part;
};
RootSplit split_at_root(const Forest& lower, const Tree& upper);

// The materialized interval [lower, upper]. Elements are sorted by
// (inner vertex count, text), so index 0 is `lower` and the last index is
// `upper`.
struct IntervalPoset {
  Forest lower;
  Forest upper;
  std::vector<Forest> elements;
  FinitePoset order;

  // Throws NotComparableError when f is outside the interval.
  std::size_t index_of(const Forest& f) const;
  std::size_t degree() const { return upper.inner_count() - lower.inner_count(); }
};

IntervalPoset interval(const Forest& lower, const Forest& upper);

// lower_set(upper) with its order relation computed once, so that every
// interval [F, upper] can be cut out without recomputing comparisons.
class DownSet {
 public:
  explicit DownSet(const Forest& upper);

  const Forest& upper() const { return upper_; }
  const std::vector<Forest>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return relation_[a * size() + b] != 0; }

  IntervalPoset interval_from(std::size_t lower_index) const;

 private:
  Forest upper_;
  std::vector<Forest> elements_;
  std::vector<char> relation_;
};

// The trees on `labels`, each as a one-tree forest.
std::vector<Forest> maximal_elements(const LabelSet& labels);

}  // namespace forestposet
