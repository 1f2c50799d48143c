#include "forestposet/export.hpp"

#include <limits>
#include <map>
#include <sstream>

namespace forestposet {

nlohmann::json to_json(const BigInt& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(value);
  }
  return value.str();
}

nlohmann::json to_json(const Tree& tree) {
  if (tree.is_leaf()) return tree.label();
  return nlohmann::json::array({to_json(tree.left()), to_json(tree.right())});
}

nlohmann::json to_json(const Forest& forest) {
  auto out = nlohmann::json::array();
  for (const Tree& t : forest.trees()) out.push_back(to_json(t));
  return out;
}

nlohmann::json to_json(const BivariatePolynomial& poly) {
  auto out = nlohmann::json::array();
  for (const auto& [i, j, c] : poly.terms()) out.push_back({i, j, to_json(c)});
  return out;
}

nlohmann::json to_json(const UnivariatePolynomial& poly) {
  auto out = nlohmann::json::array();
  for (const auto& [d, c] : poly.terms()) out.push_back({d, to_json(c)});
  return out;
}

nlohmann::json to_json(const IntervalPoset& interval) {
  nlohmann::json out;
  out["lower"] = interval.lower.text();
  out["upper"] = interval.upper.text();
  auto elements = nlohmann::json::array();
  for (const Forest& f : interval.elements) elements.push_back(f.text());
  out["elements"] = elements;
  out["coranks"] = interval.order.coranks();
  auto covers = nlohmann::json::array();
  for (const auto& [a, b] : interval.order.covers()) covers.push_back({a, b});
  out["covers"] = covers;
  return out;
}

nlohmann::json to_json(const PartitivePoset& poset) {
  nlohmann::json out;
  out["ground"] = poset.ground;
  out["rank_shift"] = poset.rank_shift;
  auto elements = nlohmann::json::array();
  for (std::size_t a = 0; a < poset.size(); ++a) {
    elements.push_back({{"tag", poset.tags[a]},
                        {"corank", poset.order.corank(a)},
                        {"partition", poset.part_map[a].to_string()}});
  }
  out["elements"] = elements;
  auto covers = nlohmann::json::array();
  for (const auto& [a, b] : poset.order.covers()) covers.push_back({a, b});
  out["covers"] = covers;
  return out;
}

std::string to_dot(const IntervalPoset& interval) {
  std::ostringstream out;
  out << "digraph interval {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  std::map<int, std::vector<std::size_t>> by_corank;
  for (std::size_t a = 0; a < interval.elements.size(); ++a) {
    out << "  n" << a << " [label=\"" << interval.elements[a].text() << "\"];\n";
    by_corank[interval.order.corank(a)].push_back(a);
  }
  for (const auto& [corank, nodes] : by_corank) {
    out << "  { rank=same;";
    for (std::size_t a : nodes) out << " n" << a << ";";
    out << " }  // corank " << corank << "\n";
  }
  for (const auto& [a, b] : interval.order.covers()) {
    out << "  n" << a << " -> n" << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace forestposet
