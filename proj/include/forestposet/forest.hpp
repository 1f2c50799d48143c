#pragma once

// Leaf-labeled rooted binary trees and forests.
//
// Trees are non-planar: the two children of an inner vertex are unordered.
// Every Tree value is kept in canonical form, where the child whose leaf set
// has the smaller minimum label comes first, so two trees are equal exactly
// when their canonical texts are equal. A Forest is a set of trees with
// pairwise disjoint leaf sets, ordered by the minimum label of each tree.
//
// Text grammar (whitespace ignored):
//
//     forest := tree ('|' tree)*
//     tree   := label | '(' tree ',' tree ')'
//     label  := [A-Za-z0-9_]+

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forestposet {

using Label = std::string;

// Sorted, duplicate-free set of labels.
using LabelSet = std::vector<Label>;

// An inner vertex is identified by its set of ancestor leaves.
using VertexId = LabelSet;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DuplicateLabelError : public std::invalid_argument {
 public:
  explicit DuplicateLabelError(Label label);
  const Label& label() const { return label_; }

 private:
  Label label_;
};

bool is_valid_label(std::string_view symbol);

// Sorts and checks a label list; throws DuplicateLabelError on repeats.
LabelSet make_label_set(std::vector<Label> labels);

bool is_subset(const LabelSet& inner, const LabelSet& outer);
bool are_disjoint(const LabelSet& a, const LabelSet& b);
LabelSet set_union(const LabelSet& a, const LabelSet& b);
LabelSet set_difference(const LabelSet& a, const LabelSet& b);

class Tree {
 public:
  static Tree leaf(Label label);

  bool is_leaf() const;
  // Leaf label; only valid when is_leaf().
  const Label& label() const;
  // Children in canonical order; only valid for inner vertices.
  Tree left() const;
  Tree right() const;

  const LabelSet& leaves() const;
  const Label& min_label() const { return leaves().front(); }
  std::size_t leaf_count() const { return leaves().size(); }
  std::size_t inner_count() const { return leaf_count() - 1; }

  // Canonical text, e.g. "((a,b),c)".
  const std::string& text() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator<(const Tree& a, const Tree& b) { return a.text() < b.text(); }

 private:
  struct Node;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend Tree graft(const Tree& t1, const Tree& t2);

  std::shared_ptr<const Node> node_;
};

// T1 v T2: both roots grafted on a new inner vertex. Throws
// std::invalid_argument when the leaf sets overlap.
Tree graft(const Tree& t1, const Tree& t2);

class Forest {
 public:
  Forest() = default;
  // Throws DuplicateLabelError when two trees share a label.
  explicit Forest(std::vector<Tree> trees);

  // The forest without inner vertices on the given labels.
  static Forest discrete(const LabelSet& labels);

  const std::vector<Tree>& trees() const { return trees_; }
  const LabelSet& labels() const { return labels_; }
  std::size_t tree_count() const { return trees_.size(); }
  std::size_t inner_count() const { return labels_.size() - trees_.size(); }
  bool is_tree() const { return trees_.size() == 1; }

  // Partition of the labels by trees, blocks ordered by minimum label.
  std::vector<LabelSet> blocks() const;

  const std::string& text() const { return text_; }

  friend bool operator==(const Forest& a, const Forest& b) { return a.text_ == b.text_; }
  friend bool operator<(const Forest& a, const Forest& b) { return a.text_ < b.text_; }

 private:
  std::vector<Tree> trees_;
  LabelSet labels_;
  std::string text_;
};

Forest parse_forest(std::string_view text);
Tree parse_tree(std::string_view text);
std::string format_forest(const Forest& forest);

// F[J]; J must be a union of leaf sets of whole trees of F.
Forest restrict(const Forest& forest, const LabelSet& subset);

// Ancestor-leaf sets of all inner vertices, sorted.
std::vector<VertexId> inner_vertices(const Tree& tree);
std::vector<VertexId> inner_vertices(const Forest& forest);

std::vector<Tree> enumerate_trees(const LabelSet& labels);
std::vector<Forest> enumerate_forests(const LabelSet& labels);

// Left comb ((((l1,l2),l3),...),ln).
Tree make_comb(const std::vector<Label>& ordered_labels);
bool is_comb(const Tree& tree);

// Convenience: labels "a", "b", ... for small examples and tests.
LabelSet letters(std::size_t count);

}  // namespace forestposet
