#include <doctest.h>

#include "forestposet/invariants.hpp"
#include "forestposet/order.hpp"
#include "forestposet/partition.hpp"
#include "oracles.hpp"

using namespace forestposet;

namespace {

const BivariatePolynomial X = BivariatePolynomial::x();
const BivariatePolynomial Y = BivariatePolynomial::y();
const BivariatePolynomial ONE(1);

IntervalPoset comb_interval(int n) {
  const LabelSet labels = letters(n);
  return interval(Forest::discrete(labels), Forest({make_comb(labels)}));
}

// Chain 0 < 1 < ... < n-1 with corank n-1-i.
FinitePoset chain(std::size_t n) {
  std::vector<char> rel(n * n, 0);
  std::vector<int> corank(n);
  for (std::size_t a = 0; a < n; ++a) {
    corank[a] = static_cast<int>(n - 1 - a);
    for (std::size_t b = a; b < n; ++b) rel[a * n + b] = 1;
  }
  return FinitePoset(n, rel, corank);
}

}  // namespace

TEST_CASE("mobius") {
  const FinitePoset two = chain(2);
  CHECK(mobius(two, 0, 0) == 1);
  CHECK(mobius(two, 0, 1) == -1);
  CHECK(mobius(chain(3), 0, 2) == 0);
  const auto c4 = comb_interval(4);
  CHECK(mobius(c4.order, c4.order.bottom(), c4.order.top()) == -6);
  CHECK_THROWS_AS(mobius(two, 1, 0), std::invalid_argument);
}

TEST_CASE("mobius agrees with signed chain counts") {
  for (int n = 1; n <= 4; ++n) {
    for (const Forest& g : enumerate_forests(letters(n))) {
      const DownSet down(g);
      for (std::size_t i = 0; i < down.size(); ++i) {
        const auto iv = down.interval_from(i);
        const MobiusTable mu(iv.order);
        for (std::size_t a = 0; a < iv.order.size(); ++a) {
          for (std::size_t b = 0; b < iv.order.size(); ++b) {
            if (iv.order.leq(a, b)) CHECK(mu(a, b) == oracle::hall_mobius(iv.order, a, b));
          }
        }
      }
    }
  }
}

TEST_CASE("polynomials of small intervals") {
  const Forest t = parse_forest("((a,b),c)");
  const auto single = interval(t, t);
  CHECK(m_polynomial(single.order) == ONE);
  CHECK(z_polynomial(single.order) == ONE);
  CHECK(characteristic_polynomial(single.order) == UnivariatePolynomial(1));
  CHECK(cardinal_polynomial(single.order) == UnivariatePolynomial(1));

  const auto degree_one = interval(parse_forest("(a,b)|c"), t);
  CHECK(m_polynomial(degree_one.order) == X * Y - X + ONE);
  CHECK(z_polynomial(degree_one.order) == X * Y + X + ONE);

  const auto c3 = comb_interval(3);
  const auto x2 = X * X;
  const auto y2 = Y * Y;
  CHECK(m_polynomial(c3.order) ==
        x2 * y2 - BivariatePolynomial::monomial(2, 1, 3) + BivariatePolynomial::monomial(2, 0, 2) +
            BivariatePolynomial::monomial(1, 1, 3) - BivariatePolynomial::monomial(1, 0, 3) + ONE);
  CHECK(characteristic_polynomial(c3.order) == from_roots({1, 2}));
  CHECK(cardinal_polynomial(c3.order).to_string('x') == "x^2 + 3*x + 1");

  const auto balanced =
      interval(Forest::discrete(letters(4)), parse_forest("((a,b),(c,d))"));
  CHECK(characteristic_polynomial(balanced.order) == from_roots({1, 1, 4}));
}

TEST_CASE("Z is the sum over comparable pairs") {
  const auto c4 = comb_interval(4);
  const auto z = z_polynomial(c4.order);
  std::size_t comparable = 0;
  for (std::size_t a = 0; a < c4.order.size(); ++a) {
    for (std::size_t b = 0; b < c4.order.size(); ++b) comparable += c4.order.leq(a, b);
  }
  CHECK(z.eval(1, 1) == comparable);
  // Only the top has corank 0, so Z(x, 0) = Card(x).
  UnivariatePolynomial z_at_zero;
  for (const auto& [i, j, c] : z.terms()) {
    if (j == 0) z_at_zero += UnivariatePolynomial::monomial(i, c);
  }
  CHECK(z_at_zero == cardinal_polynomial(c4.order));
}

TEST_CASE("partition-lattice intervals have Stirling characteristic polynomials") {
  for (int n = 1; n <= 5; ++n) {
    const auto iv = comb_interval(n);
    CHECK(characteristic_polynomial(iv.order) == oracle::partition_lattice_chi(n));
    CHECK(cardinal_polynomial(iv.order).eval(1) == oracle::bell(n));
  }
}

TEST_CASE("check_ranked") {
  CHECK(check_ranked(chain(2), 1));
  CHECK(check_ranked(chain(4), 3));
  CHECK_FALSE(check_ranked(chain(4), 2));
  for (int n = 1; n <= 4; ++n) {
    for (const Forest& g : enumerate_forests(letters(n))) {
      for (const Forest& f : lower_set(g)) CHECK(check_ranked(interval(f, g)));
    }
  }
}

TEST_CASE("check_ranked rejects a rank-skipping cover") {
  // Diamond 0 < {1, 2} < 3, with a corrupted cover 0 -> 3 and the 0 -> 2
  // cover removed, so one maximal chain has length 1.
  std::vector<char> rel = {1, 1, 1, 1,  //
                           0, 1, 0, 1,  //
                           0, 0, 1, 1,  //
                           0, 0, 0, 1};
  const std::vector<int> corank = {2, 1, 1, 0};
  const FinitePoset good(4, rel, corank);
  CHECK(check_ranked(good, 2));
  const FinitePoset corrupted(4, rel, corank, {{0, 1}, {1, 3}, {0, 3}, {2, 3}});
  CHECK_FALSE(check_ranked(corrupted, 2));
}

TEST_CASE("semimodularity") {
  CHECK(check_semimodular(chain(2)));
  CHECK(check_semimodular(interval(parse_forest("a|b"), parse_forest("(a,b)")).order));
  CHECK(check_semimodular(comb_interval(3).order));
  CHECK(check_semimodular(comb_interval(4).order));

  std::size_t failures = 0;
  for (const Forest& g : enumerate_forests(letters(4))) {
    for (const Forest& f : lower_set(g)) {
      failures += !check_semimodular(interval(f, g).order);
    }
  }
  CHECK(failures > 0);

  const auto balanced = interval(Forest::discrete(letters(4)), parse_forest("((a,b),(c,d))"));
  const auto witness = semimodularity_violation(balanced.order);
  REQUIRE(witness.has_value());
  CHECK(balanced.elements[witness->first].tree_count() == 3);
  CHECK(balanced.elements[witness->second].tree_count() == 3);
}

TEST_CASE("FinitePoset validates sizes") {
  CHECK_THROWS_AS(FinitePoset(2, {1, 1, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset(2, {1, 1, 0, 1}, {1}), std::invalid_argument);
}
