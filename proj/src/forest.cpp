#include "forestposet/forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <iterator>
#include <utility>

namespace forestposet {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

DuplicateLabelError::DuplicateLabelError(Label label)
    : std::invalid_argument("duplicate label '" + label + "'"), label_(std::move(label)) {}

bool is_valid_label(std::string_view symbol) {
  if (symbol.empty()) return false;
  return std::all_of(symbol.begin(), symbol.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

LabelSet make_label_set(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw DuplicateLabelError(*dup);
  return labels;
}

bool is_subset(const LabelSet& inner, const LabelSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool are_disjoint(const LabelSet& a, const LabelSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

LabelSet set_difference(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// Tree

struct Tree::Node {
  Label label;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
  LabelSet leaves;
  std::string text;
};

Tree Tree::leaf(Label label) {
  if (!is_valid_label(label)) {
    throw std::invalid_argument("invalid label '" + label + "'");
  }
  auto node = std::make_shared<Node>();
  node->leaves = {label};
  node->text = label;
  node->label = std::move(label);
  return Tree(std::move(node));
}

bool Tree::is_leaf() const { return node_->left == nullptr; }

const Label& Tree::label() const {
  if (!is_leaf()) throw std::logic_error("label() called on an inner vertex");
  return node_->label;
}

Tree Tree::left() const {
  if (is_leaf()) throw std::logic_error("left() called on a leaf");
  return Tree(node_->left);
}

Tree Tree::right() const {
  if (is_leaf()) throw std::logic_error("right() called on a leaf");
  return Tree(node_->right);
}

const LabelSet& Tree::leaves() const { return node_->leaves; }

const std::string& Tree::text() const { return node_->text; }

bool operator==(const Tree& a, const Tree& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

Tree graft(const Tree& t1, const Tree& t2) {
  if (!are_disjoint(t1.leaves(), t2.leaves())) {
    throw std::invalid_argument("cannot graft " + t1.text() + " and " + t2.text() +
                                ": leaf sets overlap");
  }
  const bool swap = t2.min_label() < t1.min_label();
  const Tree& first = swap ? t2 : t1;
  const Tree& second = swap ? t1 : t2;
  auto node = std::make_shared<Tree::Node>();
  node->left = first.node_;
  node->right = second.node_;
  node->leaves = set_union(first.leaves(), second.leaves());
  node->text = "(" + first.text() + "," + second.text() + ")";
  return Tree(std::move(node));
}

// ---------------------------------------------------------------------------
// Forest

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
  std::sort(trees_.begin(), trees_.end(),
            [](const Tree& a, const Tree& b) { return a.min_label() < b.min_label(); });
  std::vector<Label> all;
  for (const Tree& t : trees_) all.insert(all.end(), t.leaves().begin(), t.leaves().end());
  labels_ = make_label_set(std::move(all));
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (i > 0) text_ += '|';
    text_ += trees_[i].text();
  }
}

Forest Forest::discrete(const LabelSet& labels) {
  std::vector<Tree> trees;
  trees.reserve(labels.size());
  for (const Label& l : labels) trees.push_back(Tree::leaf(l));
  return Forest(std::move(trees));
}

std::vector<LabelSet> Forest::blocks() const {
  std::vector<LabelSet> out;
  out.reserve(trees_.size());
  for (const Tree& t : trees_) out.push_back(t.leaves());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Forest forest() {
    std::vector<Tree> trees;
    trees.push_back(tree());
    while (peek() == '|') {
      ++pos_;
      trees.push_back(tree());
    }
    expect_end();
    return Forest(std::move(trees));
  }

  Tree single_tree() {
    Tree t = tree();
    expect_end();
    return t;
  }

 private:
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    if (peek() != '\0') fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  Tree tree() {
    if (peek() == '(') {
      ++pos_;
      Tree a = tree();
      expect(',');
      Tree b = tree();
      expect(')');
      if (!are_disjoint(a.leaves(), b.leaves())) {
        LabelSet both;
        std::set_intersection(a.leaves().begin(), a.leaves().end(), b.leaves().begin(),
                              b.leaves().end(), std::back_inserter(both));
        throw DuplicateLabelError(both.front());
      }
      return graft(a, b);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_valid_label(text_.substr(pos_, 1))) ++pos_;
    if (start == pos_) fail("expected label or '('");
    return Tree::leaf(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view text) { return Parser(text).forest(); }

Tree parse_tree(std::string_view text) { return Parser(text).single_tree(); }

std::string format_forest(const Forest& forest) { return forest.text(); }

Forest restrict(const Forest& forest, const LabelSet& subset) {
  std::vector<Tree> kept;
  std::size_t covered = 0;
  for (const Tree& t : forest.trees()) {
    if (is_subset(t.leaves(), subset)) {
      kept.push_back(t);
      covered += t.leaf_count();
    } else if (!are_disjoint(t.leaves(), subset)) {
      throw std::invalid_argument("restriction splits tree " + t.text());
    }
  }
  if (covered != subset.size()) {
    throw std::invalid_argument("restriction set contains labels outside the forest");
  }
  return Forest(std::move(kept));
}

namespace {

void collect_vertices(const Tree& t, std::vector<VertexId>& out) {
  if (t.is_leaf()) return;
  out.push_back(t.leaves());
  collect_vertices(t.left(), out);
  collect_vertices(t.right(), out);
}

}  // namespace

std::vector<VertexId> inner_vertices(const Tree& tree) {
  std::vector<VertexId> out;
  collect_vertices(tree, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexId> inner_vertices(const Forest& forest) {
  std::vector<VertexId> out;
  for (const Tree& t : forest.trees()) collect_vertices(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Tree> enumerate_trees(const LabelSet& labels) {
  if (labels.empty()) throw std::invalid_argument("cannot enumerate trees on an empty label set");
  if (labels.size() == 1) return {Tree::leaf(labels.front())};

  // The root splits the labels in two; the side holding the first label is
  // fixed so each unordered tree is produced once.
  const std::size_t n = labels.size();
  std::vector<Tree> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    LabelSet side_a{labels.front()};
    LabelSet side_b;
    for (std::size_t i = 1; i < n; ++i) {
      if ((mask >> (i - 1)) & 1U) {
        side_a.push_back(labels[i]);
      } else {
        side_b.push_back(labels[i]);
      }
    }
    if (side_b.empty()) continue;
    const auto trees_a = enumerate_trees(side_a);
    const auto trees_b = enumerate_trees(side_b);
    for (const Tree& a : trees_a) {
      for (const Tree& b : trees_b) out.push_back(graft(a, b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void enumerate_partitions(const LabelSet& labels, std::size_t next, std::vector<LabelSet>& blocks,
                          const std::function<void(const std::vector<LabelSet>&)>& visit) {
  if (next == labels.size()) {
    visit(blocks);
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].push_back(labels[next]);
    enumerate_partitions(labels, next + 1, blocks, visit);
    blocks[i].pop_back();
  }
  blocks.push_back({labels[next]});
  enumerate_partitions(labels, next + 1, blocks, visit);
  blocks.pop_back();
}

}  // namespace

std::vector<Forest> enumerate_forests(const LabelSet& labels) {
  if (labels.empty()) {
    throw std::invalid_argument("cannot enumerate forests on an empty label set");
  }
  std::vector<Forest> out;
  std::vector<LabelSet> blocks;
  enumerate_partitions(labels, 0, blocks, [&](const std::vector<LabelSet>& partition) {
    std::vector<std::vector<Tree>> choices;
    choices.reserve(partition.size());
    for (const LabelSet& block : partition) choices.push_back(enumerate_trees(block));
    std::vector<std::size_t> index(partition.size(), 0);
    while (true) {
      std::vector<Tree> trees;
      trees.reserve(partition.size());
      for (std::size_t i = 0; i < partition.size(); ++i) trees.push_back(choices[i][index[i]]);
      out.emplace_back(std::move(trees));
      std::size_t k = 0;
      while (k < index.size() && ++index[k] == choices[k].size()) index[k++] = 0;
      if (k == index.size()) break;
    }
  });
  std::sort(out.begin(), out.end(), [](const Forest& a, const Forest& b) {
    if (a.inner_count() != b.inner_count()) return a.inner_count() < b.inner_count();
    return a.text() < b.text();
  });
  return out;
}

Tree make_comb(const std::vector<Label>& ordered_labels) {
  if (ordered_labels.empty()) throw std::invalid_argument("a comb needs at least one label");
  make_label_set(ordered_labels);
  Tree comb = Tree::leaf(ordered_labels.front());
  for (std::size_t i = 1; i < ordered_labels.size(); ++i) {
    comb = graft(comb, Tree::leaf(ordered_labels[i]));
  }
  return comb;
}

bool is_comb(const Tree& tree) {
  if (tree.is_leaf()) return true;
  const Tree l = tree.left();
  const Tree r = tree.right();
  if (!l.is_leaf() && !r.is_leaf()) return false;
  return is_comb(l) && is_comb(r);
}

LabelSet letters(std::size_t count) {
  if (count > 26) throw std::invalid_argument("letters() supports at most 26 labels");
  LabelSet out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

}  // namespace forestposet
