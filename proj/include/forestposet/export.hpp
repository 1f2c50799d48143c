#pragma once

// Machine-readable output: nested-array forests, polynomial term lists,
// interval documents and Graphviz Hasse diagrams.

#include <string>

#include <json.hpp>

#include "forestposet/forest.hpp"
#include "forestposet/order.hpp"
#include "forestposet/partitive.hpp"
#include "forestposet/polynomial.hpp"

namespace forestposet {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json to_json(const BigInt& value);

// Leaf -> "a", node -> [left, right].
nlohmann::json to_json(const Tree& tree);
// Array of trees.
nlohmann::json to_json(const Forest& forest);

// [[x_degree, y_degree, coefficient], ...] in lexicographic order.
nlohmann::json to_json(const BivariatePolynomial& poly);
// [[degree, coefficient], ...] in increasing degree.
nlohmann::json to_json(const UnivariatePolynomial& poly);

// {"lower", "upper", "elements", "coranks", "covers"}
nlohmann::json to_json(const IntervalPoset& interval);
// {"ground", "rank_shift", "elements": [{"tag", "corank", "partition"}], "covers"}
nlohmann::json to_json(const PartitivePoset& poset);

// Hasse diagram, bottom at the bottom, same-corank nodes on one rank.
std::string to_dot(const IntervalPoset& interval);

}  // namespace forestposet
