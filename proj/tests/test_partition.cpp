#include <doctest.h>

#include <algorithm>
#include <set>

#include "forestposet/invariants.hpp"
#include "forestposet/order.hpp"
#include "forestposet/partition.hpp"
#include "oracles.hpp"

using namespace forestposet;

namespace {

SetPartition P(std::vector<LabelSet> blocks) { return SetPartition(std::move(blocks)); }

}  // namespace

TEST_CASE("SetPartition basics") {
  const SetPartition p = P({{"c"}, {"b", "a"}});
  CHECK(p.to_string() == "ab|c");
  CHECK(p.block_count() == 2);
  CHECK(p.block_of("a") == p.block_of("b"));
  CHECK(p.block_of("a") != p.block_of("c"));
  CHECK_THROWS_AS(p.block_of("z"), std::invalid_argument);
  CHECK(p.merged("a", "c").to_string() == "abc");
  CHECK(SetPartition::finest(letters(3)).to_string() == "a|b|c");
  CHECK(SetPartition::coarsest(letters(3)).to_string() == "abc");
  CHECK(P({{"x1", "x2"}, {"y"}}).to_string() == "x1,x2|y");
  CHECK(p.disjoint_union(P({{"d"}})).to_string() == "ab|c|d");
  CHECK_THROWS_AS(P({{"a"}, {"a", "b"}}), std::invalid_argument);
  CHECK_THROWS_AS(P({{}}), std::invalid_argument);
}

TEST_CASE("refines") {
  const LabelSet ground = letters(3);
  for (const auto& q : enumerate_set_partitions(ground)) {
    CHECK(refines(SetPartition::finest(ground), q));
    CHECK(refines(q, SetPartition::coarsest(ground)));
  }
  CHECK(refines(P({{"a", "b"}, {"c"}}), P({{"a", "b", "c"}})));
  CHECK_FALSE(refines(P({{"a", "b"}, {"c"}}), P({{"a", "c"}, {"b"}})));
  CHECK_THROWS_AS(refines(P({{"a"}}), P({{"b"}})), std::invalid_argument);
}

TEST_CASE("enumerate_set_partitions counts Bell numbers") {
  for (int n = 1; n <= 7; ++n) {
    const auto parts = enumerate_set_partitions(letters(n));
    CHECK(parts.size() == oracle::bell(n));
    CHECK(std::set<SetPartition>(parts.begin(), parts.end()).size() == parts.size());
  }
}

TEST_CASE("partition_char_poly") {
  CHECK(partition_char_poly(1) == UnivariatePolynomial(1));
  CHECK(partition_char_poly(2) == from_roots({1}));
  CHECK(partition_char_poly(3) == from_roots({1, 2}));
  CHECK(partition_char_poly(4).eval(0) == -6);
  CHECK_THROWS_AS(partition_char_poly(0), std::invalid_argument);
  for (int n = 1; n <= 6; ++n) {
    const auto lattice = partition_lattice(letters(n));
    CHECK(characteristic_polynomial(lattice.order) == partition_char_poly(n));
    CHECK(partition_char_poly(n) == oracle::partition_lattice_chi(n));
  }
}

TEST_CASE("partition lattice is semimodular") {
  CHECK(check_semimodular(partition_lattice(letters(3)).order));
  CHECK(check_semimodular(partition_lattice(letters(4)).order));
}

TEST_CASE("comb_iso") {
  const Tree comb = make_comb(letters(4));
  CHECK(comb_iso(Forest::discrete(letters(4)), comb) == SetPartition::finest(letters(4)));
  CHECK(comb_iso(Forest({comb}), comb) == SetPartition::coarsest(letters(4)));
  CHECK_THROWS_AS(comb_iso(Forest::discrete(letters(4)), parse_tree("((a,b),(c,d))")),
                  std::invalid_argument);
  CHECK_THROWS_AS(comb_iso(parse_forest("((a,c),b)|d"), comb), NotComparableError);

  for (int n = 1; n <= 5; ++n) {
    const LabelSet labels = letters(n);
    const Tree c = make_comb(labels);
    const auto iv = interval(Forest::discrete(labels), Forest({c}));
    std::vector<SetPartition> images;
    for (const Forest& f : iv.elements) images.push_back(comb_iso(f, c));
    std::set<SetPartition> distinct(images.begin(), images.end());
    CHECK(distinct.size() == images.size());
    CHECK(images.size() == oracle::bell(n));
    for (std::size_t a = 0; a < images.size(); ++a) {
      for (std::size_t b = 0; b < images.size(); ++b) {
        CHECK(iv.order.leq(a, b) == refines(images[a], images[b]));
      }
    }
  }
}
