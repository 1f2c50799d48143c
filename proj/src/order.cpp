#include "forestposet/order.hpp"

#include <algorithm>
#include <functional>

namespace forestposet {

NotComparableError::NotComparableError(const Forest& lower, const Forest& upper)
    : std::invalid_argument("forest " + lower.text() + " is not below " + upper.text()) {}

MarkedTreePair::MarkedTreePair(Forest upper_forest, std::vector<VertexId> marked_vertices)
    : upper(std::move(upper_forest)), marked(std::move(marked_vertices)) {
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  const auto all = inner_vertices(upper);
  for (const VertexId& v : marked) {
    if (!std::binary_search(all.begin(), all.end(), v)) {
      std::string joined;
      for (const Label& l : v) joined += (joined.empty() ? "" : ",") + l;
      throw std::invalid_argument("marked vertex {" + joined + "} is not an inner vertex of " +
                                  upper.text());
    }
  }
}

bool MarkedTreePair::is_marked(const VertexId& v) const {
  return std::binary_search(marked.begin(), marked.end(), v);
}

std::string MarkedTreePair::key() const {
  std::string out = upper.text() + " #";
  for (const VertexId& v : marked) {
    out += " {";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
    out += "}";
  }
  return out;
}

namespace {

// Embeds the trees of `lower` (which together cover exactly the leaves of
// `upper`) under `upper`; returns the marked vertices or nullopt.
std::optional<std::vector<VertexId>> embed_under(const std::vector<Tree>& lower,
                                                 const Tree& upper) {
  if (upper.is_leaf()) return std::vector<VertexId>{};

  const Tree t1 = upper.left();
  const Tree t2 = upper.right();
  std::vector<Tree> side1;
  std::vector<Tree> side2;
  std::optional<Tree> straddling;
  for (const Tree& t : lower) {
    if (is_subset(t.leaves(), t1.leaves())) {
      side1.push_back(t);
    } else if (is_subset(t.leaves(), t2.leaves())) {
      side2.push_back(t);
    } else if (straddling) {
      return std::nullopt;
    } else {
      straddling = t;
    }
  }

  std::vector<VertexId> marked;
  if (straddling) {
    Tree s1 = straddling->left();
    Tree s2 = straddling->right();
    if (!is_subset(s1.leaves(), t1.leaves())) std::swap(s1, s2);
    if (!is_subset(s1.leaves(), t1.leaves()) || !is_subset(s2.leaves(), t2.leaves())) {
      return std::nullopt;
    }
    side1.push_back(s1);
    side2.push_back(s2);
    marked.push_back(upper.leaves());
  }

  auto m1 = embed_under(side1, t1);
  if (!m1) return std::nullopt;
  auto m2 = embed_under(side2, t2);
  if (!m2) return std::nullopt;
  marked.insert(marked.end(), m1->begin(), m1->end());
  marked.insert(marked.end(), m2->begin(), m2->end());
  return marked;
}

std::optional<std::vector<VertexId>> embed(const Forest& lower, const Forest& upper) {
  if (lower.labels() != upper.labels()) {
    throw std::invalid_argument("forests " + lower.text() + " and " + upper.text() +
                                " are on different label sets");
  }
  std::vector<VertexId> marked;
  std::size_t placed = 0;
  for (const Tree& t : upper.trees()) {
    std::vector<Tree> inside;
    for (const Tree& s : lower.trees()) {
      if (is_subset(s.leaves(), t.leaves())) inside.push_back(s);
    }
    for (const Tree& s : inside) placed += s.leaf_count();
    auto m = embed_under(inside, t);
    if (!m) return std::nullopt;
    marked.insert(marked.end(), m->begin(), m->end());
  }
  // Some tree of `lower` was not inside any tree of `upper`.
  if (placed != lower.labels().size()) return std::nullopt;
  std::sort(marked.begin(), marked.end());
  return marked;
}

std::vector<Forest> sorted_unique(std::vector<Forest> forests) {
  std::sort(forests.begin(), forests.end(), [](const Forest& a, const Forest& b) {
    if (a.inner_count() != b.inner_count()) return a.inner_count() < b.inner_count();
    return a.text() < b.text();
  });
  forests.erase(std::unique(forests.begin(), forests.end()), forests.end());
  return forests;
}

}  // namespace

bool leq(const Forest& lower, const Forest& upper) { return embed(lower, upper).has_value(); }

std::vector<VertexId> marked_vertices(const Forest& lower, const Forest& upper) {
  auto m = embed(lower, upper);
  if (!m) throw NotComparableError(lower, upper);
  return *m;
}

MarkedTreePair marked_pair(const Forest& lower, const Forest& upper) {
  return MarkedTreePair(upper, marked_vertices(lower, upper));
}

std::vector<Forest> lower_set(const Tree& upper) {
  if (upper.is_leaf()) return {Forest({upper})};

  const auto below1 = lower_set(upper.left());
  const auto below2 = lower_set(upper.right());
  std::vector<Forest> out;
  for (const Forest& f1 : below1) {
    for (const Forest& f2 : below2) {
      std::vector<Tree> both = f1.trees();
      both.insert(both.end(), f2.trees().begin(), f2.trees().end());
      out.emplace_back(both);
      // G(F1, J1, F2, J2): graft one chosen tree from each side.
      for (std::size_t i = 0; i < f1.tree_count(); ++i) {
        for (std::size_t j = 0; j < f2.tree_count(); ++j) {
          std::vector<Tree> trees;
          for (std::size_t k = 0; k < f1.tree_count(); ++k) {
            if (k != i) trees.push_back(f1.trees()[k]);
          }
          for (std::size_t k = 0; k < f2.tree_count(); ++k) {
            if (k != j) trees.push_back(f2.trees()[k]);
          }
          trees.push_back(graft(f1.trees()[i], f2.trees()[j]));
          out.emplace_back(std::move(trees));
        }
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Forest> lower_set(const Forest& upper) {
  std::vector<std::vector<Tree>> partial{{}};
  for (const Tree& t : upper.trees()) {
    const auto below = lower_set(t);
    std::vector<std::vector<Tree>> next;
    next.reserve(partial.size() * below.size());
    for (const auto& prefix : partial) {
      for (const Forest& f : below) {
        auto trees = prefix;
        trees.insert(trees.end(), f.trees().begin(), f.trees().end());
        next.push_back(std::move(trees));
      }
    }
    partial = std::move(next);
  }
  std::vector<Forest> out;
  out.reserve(partial.size());
  for (auto& trees : partial) out.emplace_back(std::move(trees));
  return sorted_unique(std::move(out));
}

std::vector<TreeFactor> split_by_trees(const Forest& lower, const Forest& upper) {
  if (!leq(lower, upper)) throw NotComparableError(lower, upper);
  std::vector<TreeFactor> out;
  for (const Tree& t : upper.trees()) out.push_back({restrict(lower, t.leaves()), t});
  return out;
}

RootSplit split_at_root(const Forest& lower, const Tree& upper) {
  if (upper.is_leaf()) throw std::invalid_argument("cannot split a leaf at its root");
  const Forest upper_forest({upper});
  if (!leq(lower, upper_forest)) throw NotComparableError(lower, upper_forest);

  RootSplit split{upper.left(), upper.right(), {}, {}, false, {}, {}};
  std::vector<Tree> side1;
  std::vector<Tree> side2;
  for (const Tree& t : lower.trees()) {
    if (is_subset(t.leaves(), split.left_upper.leaves())) {
      side1.push_back(t);
    } else if (is_subset(t.leaves(), split.right_upper.leaves())) {
      side2.push_back(t);
    } else {
      Tree s1 = t.left();
      Tree s2 = t.right();
      if (!is_subset(s1.leaves(), split.left_upper.leaves())) std::swap(s1, s2);
      split.root_marked = true;
      split.left_part = s1.leaves();
      split.right_part = s2.leaves();
      side1.push_back(s1);
      side2.push_back(s2);
    }
  }
  split.left_lower = Forest(std::move(side1));
  split.right_lower = Forest(std::move(side2));
  return split;
}

std::size_t IntervalPoset::index_of(const Forest& f) const {
  auto it = std::find(elements.begin(), elements.end(), f);
  if (it == elements.end()) {
    throw NotComparableError(f, upper);
  }
  return static_cast<std::size_t>(it - elements.begin());
}

namespace {

IntervalPoset build_interval(const Forest& lower, const Forest& upper,
                             std::vector<Forest> elements,
                             const std::function<bool(std::size_t, std::size_t)>& related) {
  const std::size_t n = elements.size();
  std::vector<char> relation(n * n, 0);
  std::vector<int> corank(n);
  for (std::size_t a = 0; a < n; ++a) {
    corank[a] = static_cast<int>(elements[a].tree_count() - upper.tree_count());
    for (std::size_t b = 0; b < n; ++b) relation[a * n + b] = related(a, b) ? 1 : 0;
  }
  return IntervalPoset{lower, upper, std::move(elements),
                       FinitePoset(n, std::move(relation), std::move(corank))};
}

}  // namespace

IntervalPoset interval(const Forest& lower, const Forest& upper) {
  if (!leq(lower, upper)) throw NotComparableError(lower, upper);
  std::vector<Forest> elements;
  for (Forest& f : lower_set(upper)) {
    if (leq(lower, f)) elements.push_back(std::move(f));
  }
  return build_interval(lower, upper, elements, [&](std::size_t a, std::size_t b) {
    if (a == b) return true;
    if (elements[a].inner_count() >= elements[b].inner_count()) return false;
    return leq(elements[a], elements[b]);
  });
}

DownSet::DownSet(const Forest& upper) : upper_(upper), elements_(lower_set(upper)) {
  const std::size_t n = elements_.size();
  relation_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    relation_[a * n + a] = 1;
    for (std::size_t b = 0; b < n; ++b) {
      if (elements_[a].inner_count() < elements_[b].inner_count() &&
          forestposet::leq(elements_[a], elements_[b])) {
        relation_[a * n + b] = 1;
      }
    }
  }
}

IntervalPoset DownSet::interval_from(std::size_t lower_index) const {
  std::vector<std::size_t> members;
  for (std::size_t b = 0; b < size(); ++b) {
    if (leq(lower_index, b)) members.push_back(b);
  }
  std::vector<Forest> elements;
  elements.reserve(members.size());
  for (std::size_t m : members) elements.push_back(elements_[m]);
  return build_interval(elements_[lower_index], upper_, std::move(elements),
                        [&](std::size_t a, std::size_t b) { return leq(members[a], members[b]); });
}

std::vector<Forest> maximal_elements(const LabelSet& labels) {
  std::vector<Forest> out;
  for (const Tree& t : enumerate_trees(labels)) out.push_back(Forest({t}));
  return out;
}

}  // namespace forestposet
