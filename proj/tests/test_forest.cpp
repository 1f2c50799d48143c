#include <doctest.h>

#include <set>

#include "forestposet/forest.hpp"
#include "oracles.hpp"

using namespace forestposet;

TEST_CASE("parse single leaf and simple forest") {
  const Forest a = parse_forest("a");
  CHECK(a.tree_count() == 1);
  CHECK(a.trees()[0].is_leaf());
  CHECK(a.text() == "a");

  const Forest f = parse_forest("(a,b)|c");
  REQUIRE(f.tree_count() == 2);
  CHECK(f.trees()[0].text() == "(a,b)");
  CHECK(f.trees()[1].text() == "c");
}

TEST_CASE("parse canonicalizes child order") {
  CHECK(parse_forest("((b,a),c)").text() == "((a,b),c)");
  CHECK(parse_forest("(c,(b,a))").text() == "((a,b),c)");
  CHECK(parse_forest(" ( b , a ) ").text() == "(a,b)");
  CHECK(parse_forest("c|(d,a)|b").text() == "(a,d)|b|c");
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_forest(""), ParseError);
  CHECK_THROWS_AS(parse_forest("(a,b"), ParseError);
  CHECK_THROWS_AS(parse_forest("(a)"), ParseError);
  CHECK_THROWS_AS(parse_forest("a|"), ParseError);
  CHECK_THROWS_AS(parse_forest("a b"), ParseError);
  CHECK_THROWS_AS(parse_forest("(a,-)"), ParseError);
  try {
    parse_forest("(a,b))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("duplicate labels are named") {
  try {
    parse_forest("(a,b)|a");
    FAIL("expected a duplicate-label error");
  } catch (const DuplicateLabelError& e) {
    CHECK(e.label() == "a");
  }
  CHECK_THROWS_AS(parse_forest("(a,a)"), DuplicateLabelError);
  CHECK_THROWS_AS(make_label_set({"x", "y", "x"}), DuplicateLabelError);
}

TEST_CASE("labels") {
  CHECK(is_valid_label("a"));
  CHECK(is_valid_label("Leaf_12"));
  CHECK_FALSE(is_valid_label(""));
  CHECK_FALSE(is_valid_label("a-b"));
  CHECK_FALSE(is_valid_label("a b"));
  const Forest f = parse_forest("(x10,x2)|Y");
  CHECK(f.text() == "Y|(x10,x2)");
}

TEST_CASE("format_forest") {
  CHECK(format_forest(Forest({Tree::leaf("a")})) == "a");
  CHECK(format_forest(Forest({graft(Tree::leaf("b"), Tree::leaf("a"))})) == "(a,b)");
  CHECK(format_forest(Forest({graft(Tree::leaf("c"), Tree::leaf("d")), Tree::leaf("a")})) ==
        "a|(c,d)");
}

TEST_CASE("graft") {
  const Tree a = Tree::leaf("a");
  const Tree b = Tree::leaf("b");
  const Tree c = Tree::leaf("c");
  CHECK(graft(a, b).text() == "(a,b)");
  CHECK(graft(graft(a, b), c).text() == "((a,b),c)");
  CHECK(graft(c, graft(a, b)) == graft(graft(a, b), c));
  const Tree t = graft(graft(a, b), graft(c, Tree::leaf("d")));
  CHECK(t.inner_count() == 3);
  CHECK(inner_vertices(t).size() == 3);
  CHECK_THROWS_AS(graft(graft(a, b), a), std::invalid_argument);
}

TEST_CASE("restrict") {
  const Forest f = parse_forest("(a,b)|c");
  CHECK(restrict(f, {"c"}).text() == "c");
  CHECK(restrict(f, f.labels()) == f);
  CHECK(restrict(parse_forest("(a,b)|(c,d)"), {"a", "b"}).text() == "(a,b)");
  CHECK_THROWS_AS(restrict(f, {"a"}), std::invalid_argument);
  CHECK_THROWS_AS(restrict(f, {"z"}), std::invalid_argument);
}

TEST_CASE("inner_vertices") {
  CHECK(inner_vertices(Forest::discrete(letters(4))).empty());
  CHECK(inner_vertices(parse_forest("((a,b),c)")) ==
        std::vector<VertexId>{{"a", "b"}, {"a", "b", "c"}});
  CHECK(inner_vertices(parse_forest("((a,b),(c,d))")) ==
        std::vector<VertexId>{{"a", "b"}, {"a", "b", "c", "d"}, {"c", "d"}});
}

TEST_CASE("enumerate_trees") {
  CHECK(enumerate_trees({"a"}).size() == 1);
  CHECK(enumerate_trees(letters(2)).size() == 1);
  const auto three = enumerate_trees(letters(3));
  std::set<std::string> texts;
  for (const auto& t : three) texts.insert(t.text());
  CHECK(texts == std::set<std::string>{"((a,b),c)", "((a,c),b)", "(a,(b,c))"});
  CHECK(enumerate_trees(letters(5)).size() == 105);
  for (int n = 2; n <= 7; ++n) {
    CHECK(enumerate_trees(letters(n)).size() == oracle::tree_count(n));
  }
  CHECK_THROWS_AS(enumerate_trees({}), std::invalid_argument);
}

TEST_CASE("enumerate_forests") {
  CHECK(enumerate_forests({"a"}).size() == 1);
  CHECK(enumerate_forests(letters(3)).size() == 7);
  CHECK(enumerate_forests(letters(5)).size() == 266);
  for (int n = 1; n <= 6; ++n) {
    CHECK(enumerate_forests(letters(n)).size() == oracle::forest_count(n));
  }
  CHECK_THROWS_AS(enumerate_forests({}), std::invalid_argument);
}

TEST_CASE("enumerations are duplicate-free and canonical") {
  for (int n = 1; n <= 5; ++n) {
    const auto forests = enumerate_forests(letters(n));
    std::set<std::string> texts;
    for (const Forest& f : forests) {
      texts.insert(f.text());
      CHECK(f.tree_count() + f.inner_count() == static_cast<std::size_t>(n));
      CHECK(f.tree_count() + inner_vertices(f).size() == static_cast<std::size_t>(n));
      CHECK(parse_forest(format_forest(f)) == f);
      CHECK(Forest(f.trees()) == f);
    }
    CHECK(texts.size() == forests.size());
  }
}

namespace {

// The same tree with the children of every node swapped.
Tree mirrored(const Tree& t) {
  if (t.is_leaf()) return t;
  return graft(mirrored(t.right()), mirrored(t.left()));
}

std::string planar_mirror_text(const Tree& t) {
  if (t.is_leaf()) return t.label();
  return "(" + planar_mirror_text(t.right()) + "," + planar_mirror_text(t.left()) + ")";
}

}  // namespace

TEST_CASE("canonical form is order-insensitive and idempotent") {
  for (int n = 1; n <= 5; ++n) {
    for (const Tree& t : enumerate_trees(letters(n))) {
      CHECK(mirrored(t) == t);
      CHECK(parse_tree(planar_mirror_text(t)) == t);
      CHECK(parse_tree(t.text()).text() == t.text());
    }
  }
}

TEST_CASE("combs") {
  CHECK(make_comb({"a"}).text() == "a");
  CHECK(make_comb({"a", "b", "c"}).text() == "((a,b),c)");
  CHECK(make_comb({"a", "b", "c", "d"}).text() == "(((a,b),c),d)");
  CHECK(make_comb({"c", "a", "b"}).text() == "((a,c),b)");
  CHECK_THROWS_AS(make_comb({"a", "a"}), DuplicateLabelError);
  CHECK_THROWS_AS(make_comb({}), std::invalid_argument);

  CHECK(is_comb(parse_tree("((a,b),c)")));
  CHECK_FALSE(is_comb(parse_tree("((a,b),(c,d))")));
  CHECK(is_comb(Tree::leaf("a")));
  for (int n = 1; n <= 6; ++n) CHECK(is_comb(make_comb(letters(n))));

  // n!/2 combs on n >= 2 labels: the bottom cherry is unordered.
  std::size_t combs = 0;
  for (const Tree& t : enumerate_trees(letters(5))) combs += is_comb(t);
  CHECK(combs == 60);
}

TEST_CASE("set helpers") {
  CHECK(is_subset({"a"}, {"a", "b"}));
  CHECK_FALSE(is_subset({"c"}, {"a", "b"}));
  CHECK(are_disjoint({"a"}, {"b"}));
  CHECK(set_union({"a", "c"}, {"b"}) == LabelSet{"a", "b", "c"});
  CHECK(set_difference({"a", "b", "c"}, {"b"}) == LabelSet{"a", "c"});
}
