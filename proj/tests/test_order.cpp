#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "forestposet/order.hpp"
#include "oracles.hpp"

using namespace forestposet;

namespace {

Forest F(const char* text) { return parse_forest(text); }

}  // namespace

TEST_CASE("leq basics") {
  CHECK(leq(F("a|b|c"), F("((a,b),c)")));
  CHECK(leq(F("(a,b)|c"), F("((a,b),c)")));
  CHECK(leq(F("(a,c)|b"), F("(a,(b,c))")));
  CHECK_FALSE(leq(F("((a,b),c)"), F("(a,b)|c")));
  CHECK_FALSE(leq(F("(a,b)|(c,d)"), F("((a,c),(b,d))")));
  CHECK(leq(F("(a,b)|(c,d)"), F("((a,b),(c,d))")));
  CHECK_THROWS_AS(leq(F("a|b"), F("(a,c)")), std::invalid_argument);
}

TEST_CASE("T1 | T2 <= T1 v T2") {
  for (const Tree& t : enumerate_trees(letters(5))) {
    CHECK(leq(Forest({t.left(), t.right()}), Forest({t})));
  }
}

TEST_CASE("leq is reflexive") {
  for (int n = 1; n <= 5; ++n) {
    for (const Forest& f : enumerate_forests(letters(n))) CHECK(leq(f, f));
  }
}

TEST_CASE("leq agrees with the topological-map definition") {
  for (int n = 1; n <= 4; ++n) {
    const auto forests = enumerate_forests(letters(n));
    for (const Forest& a : forests) {
      for (const Forest& b : forests) {
        INFO(a.text() << " <= " << b.text());
        CHECK(leq(a, b) == oracle::leq(a, b));
      }
    }
  }
}

TEST_CASE("leq agrees with the topological-map definition on sampled pairs at five labels") {
  std::mt19937_64 rng(7);
  const auto forests = enumerate_forests(letters(5));
  for (int s = 0; s < 3000; ++s) {
    const Forest& a = forests[rng() % forests.size()];
    const Forest& b = forests[rng() % forests.size()];
    INFO(a.text() << " <= " << b.text());
    CHECK(leq(a, b) == oracle::leq(a, b));
  }
}

TEST_CASE("lower_set") {
  CHECK(lower_set(Tree::leaf("a")) == std::vector<Forest>{F("a")});
  CHECK(lower_set(make_comb(letters(3))).size() == 5);
  CHECK(lower_set(make_comb(letters(4))).size() == 15);
  for (int n = 1; n <= 4; ++n) {
    const auto forests = enumerate_forests(letters(n));
    for (const Forest& g : forests) {
      const auto below = lower_set(g);
      std::vector<Forest> expected;
      for (const Forest& f : forests) {
        if (oracle::leq(f, g)) expected.push_back(f);
      }
      auto sorted = below;
      std::sort(sorted.begin(), sorted.end());
      std::sort(expected.begin(), expected.end());
      CHECK(sorted == expected);
      CHECK(below.front() == Forest::discrete(g.labels()));
      CHECK(below.back() == g);
    }
  }
}

TEST_CASE("marked_vertices") {
  const Forest g = F("((a,b),(c,d))");
  CHECK(marked_vertices(Forest::discrete(g.labels()), g).empty());
  CHECK(marked_vertices(g, g) == inner_vertices(g));
  CHECK(marked_vertices(F("(a,b)|c|d"), g) == std::vector<VertexId>{{"a", "b"}});
  CHECK(marked_vertices(F("(a,c)|b|d"), g) == std::vector<VertexId>{{"a", "b", "c", "d"}});
  CHECK_THROWS_AS(marked_vertices(F("((a,c),b)|d"), g), NotComparableError);
}

TEST_CASE("marked_vertices is the image of some topological map") {
  std::size_t ambiguous = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Forest& g : enumerate_forests(letters(n))) {
      for (const Forest& f : lower_set(g)) {
        const auto images = oracle::topological_images(f, g);
        const auto marks = marked_vertices(f, g);
        INFO(f.text() << " <= " << g.text());
        CHECK(images.count(marks) == 1);
        CHECK(marks.size() == f.inner_count());
        if (images.size() > 1) ++ambiguous;
      }
    }
  }
  MESSAGE("pairs with more than one vertex image: " << ambiguous);
}

TEST_CASE("marked_vertices is monotone") {
  for (int n = 1; n <= 4; ++n) {
    for (const Forest& g : enumerate_forests(letters(n))) {
      const auto below = lower_set(g);
      for (const Forest& f : below) {
        const auto mf = marked_vertices(f, g);
        for (const Forest& h : below) {
          if (!leq(f, h)) continue;
          const auto mh = marked_vertices(h, g);
          CHECK(std::includes(mh.begin(), mh.end(), mf.begin(), mf.end()));
        }
      }
    }
  }
}

TEST_CASE("MarkedTreePair validates its marks") {
  const Forest g = F("((a,b),c)");
  CHECK_NOTHROW(MarkedTreePair(g, {{"a", "b"}}));
  CHECK_THROWS_AS(MarkedTreePair(g, {{"a", "c"}}), std::invalid_argument);
  const MarkedTreePair p(g, {{"a", "b", "c"}, {"a", "b"}, {"a", "b"}});
  CHECK(p.marked.size() == 2);
  CHECK(p.unmarked_count() == 0);
  CHECK(p.is_marked({"a", "b"}));
}

TEST_CASE("interval") {
  const Forest g = F("((a,b),c)");
  const auto single = interval(g, g);
  CHECK(single.elements.size() == 1);
  CHECK(single.order.covers().empty());

  const auto two = interval(F("(a,b)|c"), g);
  CHECK(two.elements.size() == 2);
  CHECK(two.order.covers().size() == 1);
  CHECK(two.degree() == 1);

  const auto comb4 = interval(Forest::discrete(letters(4)), Forest({make_comb(letters(4))}));
  CHECK(comb4.elements.size() == 15);
  CHECK(comb4.elements.front() == comb4.lower);
  CHECK(comb4.elements.back() == comb4.upper);
  CHECK(comb4.index_of(F("(a,b)|c|d")) < comb4.elements.size());
  CHECK(comb4.index_of(F("(a,d)|(b,c)")) < comb4.elements.size());
  CHECK_THROWS_AS(comb4.index_of(F("((a,b),(c,d))")), NotComparableError);

  CHECK_THROWS_AS(interval(F("((a,c),b)"), F("(a,(b,c))")), NotComparableError);
}

TEST_CASE("interval coranks and covers") {
  for (int n = 1; n <= 4; ++n) {
    for (const Forest& g : enumerate_forests(letters(n))) {
      for (const Forest& f : lower_set(g)) {
        const auto iv = interval(f, g);
        const auto& p = iv.order;
        CHECK(p.bottom() == 0);
        CHECK(p.top() == iv.elements.size() - 1);
        for (std::size_t a = 0; a < p.size(); ++a) {
          CHECK(p.corank(a) ==
                static_cast<int>(iv.elements[a].tree_count() - g.tree_count()));
        }
        for (const auto& [a, b] : p.covers()) CHECK(p.corank(a) == p.corank(b) + 1);
        auto covers = p.covers();
        auto reduction = p.transitive_reduction();
        std::sort(covers.begin(), covers.end());
        std::sort(reduction.begin(), reduction.end());
        CHECK(covers == reduction);
      }
    }
  }
}

TEST_CASE("DownSet cuts out the same intervals") {
  const Forest g = F("((a,b),(c,d))");
  const DownSet down(g);
  CHECK(down.size() == lower_set(g).size());
  for (std::size_t i = 0; i < down.size(); ++i) {
    const auto cut = down.interval_from(i);
    const auto direct = interval(down.elements()[i], g);
    CHECK(cut.elements == direct.elements);
    CHECK(cut.order.covers() == direct.order.covers());
  }
}

TEST_CASE("split_by_trees and split_at_root") {
  const auto factors = split_by_trees(F("a|b|(c,d)|e"), F("((a,b),e)|(c,d)"));
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].upper.text() == "((a,b),e)");
  CHECK(factors[0].lower.text() == "a|b|e");
  CHECK(factors[1].lower.text() == "(c,d)");

  const Tree t = parse_tree("((a,b),(c,d))");
  const RootSplit vee = split_at_root(F("(a,b)|c|d"), t);
  CHECK_FALSE(vee.root_marked);
  CHECK(vee.left_lower.text() == "(a,b)");
  CHECK(vee.right_lower.text() == "c|d");

  const RootSplit twisted = split_at_root(F("(a,c)|b|d"), t);
  CHECK(twisted.root_marked);
  CHECK(twisted.left_part == LabelSet{"a"});
  CHECK(twisted.right_part == LabelSet{"c"});
  CHECK(twisted.left_lower.text() == "a|b");
  CHECK(twisted.right_lower.text() == "c|d");
  CHECK_THROWS_AS(split_at_root(F("a"), Tree::leaf("a")), std::invalid_argument);
}

TEST_CASE("maximal_elements") {
  CHECK(maximal_elements(letters(2)) == std::vector<Forest>{F("(a,b)")});
  CHECK(maximal_elements(letters(3)).size() == 3);
  for (const Forest& t : maximal_elements(letters(4))) {
    CHECK(leq(Forest::discrete(letters(4)), t));
    for (const Forest& f : enumerate_forests(letters(4))) {
      if (leq(t, f)) CHECK(f == t);
    }
  }
}
