#include "forestposet/recursion.hpp"

#include <algorithm>
#include <sstream>

namespace forestposet {

const char* to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::kAtom:
      return "Atom";
    case DecompositionKind::kForestProduct:
      return "ForestProduct";
    case DecompositionKind::kTwistedProduct:
      return "TwistedProduct";
    case DecompositionKind::kSpecialVee:
      return "SpecialVee";
  }
  return "?";
}

namespace {

std::vector<VertexId> marked_within(const std::vector<VertexId>& marked, const LabelSet& leaves) {
  std::vector<VertexId> out;
  for (const VertexId& v : marked) {
    if (is_subset(v, leaves)) out.push_back(v);
  }
  return out;
}

std::string memo_key(const Tree& tree, const std::vector<VertexId>& marked) {
  std::string key = tree.text();
  for (const VertexId& v : marked) {
    key += '#';
    for (const Label& l : v) key += l + ",";
  }
  return key;
}

bool root_marked(const Tree& tree, const std::vector<VertexId>& marked) {
  return std::binary_search(marked.begin(), marked.end(), tree.leaves());
}

std::size_t unmarked_in(const Tree& tree, const std::vector<VertexId>& marked) {
  return tree.inner_count() - marked_within(marked, tree.leaves()).size();
}

void trace(const DecompositionNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(node.kind) << ' '
      << node.pair.upper.text();
  if (!node.pair.marked.empty()) {
    out << " marked";
    for (const VertexId& v : node.pair.marked) {
      out << " {";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
      out << '}';
    }
  }
  out << " deg=" << node.degree() << '\n';
  for (const auto& child : node.children) trace(child, depth + 1, out);
}

}  // namespace

MarkedTreePair sub_pair(const MarkedTreePair& pair, const Tree& tree) {
  return MarkedTreePair(Forest({tree}), marked_within(pair.marked, tree.leaves()));
}

DecompositionNode decompose(const MarkedTreePair& pair) {
  DecompositionNode node{DecompositionKind::kAtom, pair, {}};
  if (pair.unmarked_count() == 0) return node;

  if (pair.upper.tree_count() >= 2) {
    node.kind = DecompositionKind::kForestProduct;
    for (const Tree& t : pair.upper.trees()) node.children.push_back(decompose(sub_pair(pair, t)));
    return node;
  }

  const Tree& tree = pair.upper.trees().front();
  node.kind = pair.is_marked(tree.leaves()) ? DecompositionKind::kTwistedProduct
                                            : DecompositionKind::kSpecialVee;
  node.children.push_back(decompose(sub_pair(pair, tree.left())));
  node.children.push_back(decompose(sub_pair(pair, tree.right())));
  return node;
}

std::string format_trace(const DecompositionNode& root) {
  std::ostringstream out;
  trace(root, 0, out);
  return out.str();
}

std::size_t count_special_nodes(const DecompositionNode& root) {
  std::size_t count = root.kind == DecompositionKind::kSpecialVee ? 1 : 0;
  for (const auto& child : root.children) count += count_special_nodes(child);
  return count;
}

// ---------------------------------------------------------------------------
// FastEvaluator

BivariatePolynomial FastEvaluator::z(const MarkedTreePair& pair) {
  BivariatePolynomial out(1);
  for (const Tree& t : pair.upper.trees()) {
    out = out * z_tree(t, marked_within(pair.marked, t.leaves()));
  }
  return out;
}

BivariatePolynomial FastEvaluator::m(const MarkedTreePair& pair) {
  BivariatePolynomial out(1);
  for (const Tree& t : pair.upper.trees()) {
    out = out * m_tree(t, marked_within(pair.marked, t.leaves()));
  }
  return out;
}

UnivariatePolynomial FastEvaluator::chi_by_exponents(const MarkedTreePair& pair) {
  UnivariatePolynomial out(1);
  for (const Tree& t : pair.upper.trees()) {
    out = out * chi_tree(t, marked_within(pair.marked, t.leaves()));
  }
  return out;
}

BivariatePolynomial FastEvaluator::z_tree(const Tree& tree, const std::vector<VertexId>& marked) {
  if (tree.is_leaf() || marked.size() == tree.inner_count()) return BivariatePolynomial(1);
  const std::string key = memo_key(tree, marked);
  if (auto it = z_memo_.find(key); it != z_memo_.end()) return it->second;

  const Tree t1 = tree.left();
  const Tree t2 = tree.right();
  const auto z1 = z_tree(t1, marked_within(marked, t1.leaves()));
  const auto z2 = z_tree(t2, marked_within(marked, t2.leaves()));
  BivariatePolynomial z;
  if (root_marked(tree, marked)) {
    z = z1 * z2;
  } else {
    const auto x = BivariatePolynomial::x();
    const auto xy = BivariatePolynomial::monomial(1, 1);
    z = xy * z1 * z2 + z1.x_partial_x() * z2.x_partial_x() +
        x * (z1.y_partial_y() * z2.y_partial_y());
  }
  z_memo_.emplace(key, z);
  return z;
}

BivariatePolynomial FastEvaluator::m_tree(const Tree& tree, const std::vector<VertexId>& marked) {
  if (tree.is_leaf() || marked.size() == tree.inner_count()) return BivariatePolynomial(1);
  const std::string key = memo_key(tree, marked);
  if (auto it = m_memo_.find(key); it != m_memo_.end()) return it->second;

  const Tree t1 = tree.left();
  const Tree t2 = tree.right();
  const auto m1 = m_tree(t1, marked_within(marked, t1.leaves()));
  const auto m2 = m_tree(t2, marked_within(marked, t2.leaves()));
  BivariatePolynomial m;
  if (root_marked(tree, marked)) {
    m = m1 * m2;
  } else {
    const auto one_minus_x = BivariatePolynomial(1) - BivariatePolynomial::x();
    const auto xy = BivariatePolynomial::monomial(1, 1);
    m = xy * m1 * m2 + one_minus_x * (m1.x_partial_x() * m2.x_partial_x());
  }
  m_memo_.emplace(key, m);
  return m;
}

UnivariatePolynomial FastEvaluator::chi_tree(const Tree& tree,
                                             const std::vector<VertexId>& marked) {
  if (tree.is_leaf() || marked.size() == tree.inner_count()) return UnivariatePolynomial(1);
  const std::string key = memo_key(tree, marked);
  if (auto it = chi_memo_.find(key); it != chi_memo_.end()) return it->second;

  const Tree t1 = tree.left();
  const Tree t2 = tree.right();
  const auto marked1 = marked_within(marked, t1.leaves());
  const auto marked2 = marked_within(marked, t2.leaves());
  UnivariatePolynomial chi = chi_tree(t1, marked1) * chi_tree(t2, marked2);
  if (!root_marked(tree, marked)) {
    const long long deg1 = static_cast<long long>(unmarked_in(t1, marked1));
    const long long deg2 = static_cast<long long>(unmarked_in(t2, marked2));
    chi = UnivariatePolynomial::linear_factor((deg1 + 1) * (deg2 + 1)) * chi;
  }
  chi_memo_.emplace(key, chi);
  return chi;
}

BivariatePolynomial z_fast(const MarkedTreePair& pair) { return FastEvaluator().z(pair); }

BivariatePolynomial m_fast(const MarkedTreePair& pair) { return FastEvaluator().m(pair); }

std::vector<long long> exponents(const MarkedTreePair& pair) {
  std::vector<long long> out;
  std::vector<Tree> stack(pair.upper.trees().begin(), pair.upper.trees().end());
  while (!stack.empty()) {
    const Tree t = stack.back();
    stack.pop_back();
    if (t.is_leaf()) continue;
    const Tree t1 = t.left();
    const Tree t2 = t.right();
    if (!pair.is_marked(t.leaves())) {
      const auto d1 = static_cast<long long>(t1.leaf_count() -
                                             marked_within(pair.marked, t1.leaves()).size());
      const auto d2 = static_cast<long long>(t2.leaf_count() -
                                             marked_within(pair.marked, t2.leaves()).size());
      out.push_back(d1 * d2);
    }
    stack.push_back(t1);
    stack.push_back(t2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

UnivariatePolynomial chi_fast(const MarkedTreePair& pair) { return from_roots(exponents(pair)); }

UnivariatePolynomial chi_from_exponents(const MarkedTreePair& pair) {
  return FastEvaluator().chi_by_exponents(pair);
}

BigInt mobius_fast(const MarkedTreePair& pair) {
  BigInt mu = 1;
  for (long long e : exponents(pair)) mu *= -e;
  return mu;
}

namespace {

BigInt mobius_by_decomposition(const DecompositionNode& node) {
  BigInt mu = 1;
  for (const auto& child : node.children) mu *= mobius_by_decomposition(child);
  if (node.kind == DecompositionKind::kSpecialVee) {
    const long long deg1 = static_cast<long long>(node.children[0].degree());
    const long long deg2 = static_cast<long long>(node.children[1].degree());
    mu *= -(deg1 + 1) * (deg2 + 1);
  }
  return mu;
}

}  // namespace

BigInt mobius_from_exponents(const MarkedTreePair& pair) {
  return mobius_by_decomposition(decompose(pair));
}

}  // namespace forestposet
