#pragma once

// Invariants of an interval [F, F'] computed from the marked pair (F', V)
// alone, by recursive decomposition and without materializing the interval.
//
// Decomposition cases, tried in this order:
//   - F' has at least two trees: product over its trees;
//   - F' is a tree whose lowest vertex is marked: product of the two subtree
//     intervals (twisted product as a partitive poset);
//   - F' is a tree whose lowest vertex is unmarked: special interval, a
//     vee-product of the two subtree intervals.
// A pair without unmarked vertices is a one-element interval (Atom).
//
// For a special interval with subtree polynomials Z1, Z2, M1, M2:
//   Z = x y Z1 Z2 + dx(x Z1) dx(x Z2) + x dy(y Z1) dy(y Z2)
//   M = x y M1 M2 + (1 - x) dx(x M1) dx(x M2)
//   chi = (y - (deg1 + 1)(deg2 + 1)) chi1 chi2

#include <string>
#include <unordered_map>
#include <vector>

#include "forestposet/order.hpp"
#include "forestposet/polynomial.hpp"

namespace forestposet {

enum class DecompositionKind { kAtom, kForestProduct, kTwistedProduct, kSpecialVee };

const char* to_string(DecompositionKind kind);

struct DecompositionNode {
  DecompositionKind kind = DecompositionKind::kAtom;
  MarkedTreePair pair;
  std::vector<DecompositionNode> children;

  std::size_t degree() const { return pair.unmarked_count(); }
};

DecompositionNode decompose(const MarkedTreePair& pair);

// One node per line, indented by depth: "<kind> <upper> [marked ...] deg=<d>".
std::string format_trace(const DecompositionNode& root);

std::size_t count_special_nodes(const DecompositionNode& root);

// The pair restricted to one tree of its upper forest.
MarkedTreePair sub_pair(const MarkedTreePair& pair, const Tree& tree);

// Memoized evaluator keyed by canonical (subtree, marked subset).
class FastEvaluator {
 public:
  BivariatePolynomial z(const MarkedTreePair& pair);
  BivariatePolynomial m(const MarkedTreePair& pair);
  UnivariatePolynomial chi_by_exponents(const MarkedTreePair& pair);

 private:
  BivariatePolynomial z_tree(const Tree& tree, const std::vector<VertexId>& marked);
  BivariatePolynomial m_tree(const Tree& tree, const std::vector<VertexId>& marked);
  UnivariatePolynomial chi_tree(const Tree& tree, const std::vector<VertexId>& marked);

  std::unordered_map<std::string, BivariatePolynomial> z_memo_;
  std::unordered_map<std::string, BivariatePolynomial> m_memo_;
  std::unordered_map<std::string, UnivariatePolynomial> chi_memo_;
};

BivariatePolynomial z_fast(const MarkedTreePair& pair);
BivariatePolynomial m_fast(const MarkedTreePair& pair);

// d1 * d2 for every unmarked vertex, where d_i is the leaf count of the i-th
// child subtree minus its number of marked vertices. Sorted ascending.
std::vector<long long> exponents(const MarkedTreePair& pair);

// Product of (y - e) over the exponents.
UnivariatePolynomial chi_fast(const MarkedTreePair& pair);
// The same polynomial, expanded along the decomposition instead.
UnivariatePolynomial chi_from_exponents(const MarkedTreePair& pair);

// Product of (-e) over the exponents, i.e. chi_fast at 0.
BigInt mobius_fast(const MarkedTreePair& pair);
// mu = -(deg1 + 1)(deg2 + 1) mu1 mu2 at special nodes, products elsewhere.
BigInt mobius_from_exponents(const MarkedTreePair& pair);

}  // namespace forestposet
