#include <doctest.h>

#include <random>

#include "forestposet/polynomial.hpp"

using namespace forestposet;

namespace {

const BivariatePolynomial X = BivariatePolynomial::x();
const BivariatePolynomial Y = BivariatePolynomial::y();
const BivariatePolynomial ONE(1);

BivariatePolynomial random_poly(std::mt19937_64& rng) {
  BivariatePolynomial p;
  for (int k = 0; k < 5; ++k) {
    p.add_term(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
               static_cast<long long>(rng() % 11) - 5);
  }
  return p;
}

}  // namespace

TEST_CASE("zero coefficients are not stored") {
  BivariatePolynomial p = X + Y - X;
  CHECK(p.coefficients().size() == 1);
  CHECK(p == Y);
  CHECK((X - X).is_zero());
  UnivariatePolynomial u = UnivariatePolynomial::monomial(2) - UnivariatePolynomial::monomial(2);
  CHECK(u.is_zero());
  CHECK(u.degree() == -1);
  CHECK(UnivariatePolynomial::monomial(3, 0).is_zero());
}

TEST_CASE("multiplication") {
  CHECK((X + ONE) * (X - ONE) == X * X - ONE);
  CHECK(((X + Y) * (X + Y)).coefficient(1, 1) == 2);
  const auto u = UnivariatePolynomial::linear_factor(1) * UnivariatePolynomial::linear_factor(2);
  CHECK(u.to_string('y') == "y^2 - 3*y + 2");
}

TEST_CASE("partial derivatives") {
  CHECK(ONE.x_partial_x() == ONE);
  const BivariatePolynomial p = ONE - X + X * Y;
  CHECK(p.x_partial_x() == ONE - BivariatePolynomial::monomial(1, 0, 2) +
                               BivariatePolynomial::monomial(1, 1, 2));
  CHECK((X * X * Y).partial_x() == BivariatePolynomial::monomial(1, 1, 2));
  CHECK((X * Y * Y).partial_y() == BivariatePolynomial::monomial(1, 1, 2));
  CHECK(ONE.partial_x().is_zero());
  CHECK((X * Y).y_partial_y() == BivariatePolynomial::monomial(1, 1, 2));
}

TEST_CASE("x_partial_x matches finite differences") {
  // For f of degree <= 5, f'(0) = sum_{k=1..5} (-1)^(k+1) Delta^k f(0) / k;
  // scaled by 60 to stay in integers.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BivariatePolynomial p = random_poly(rng);
    const BivariatePolynomial q = X * p;
    const BivariatePolynomial dq = p.x_partial_x();
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        std::vector<BigInt> diff;
        for (int h = 0; h <= 5; ++h) diff.push_back(q.eval(x + h, y));
        BigInt slope = 0;
        for (int k = 1; k <= 5; ++k) {
          for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
          diff.pop_back();
          slope += (k % 2 == 1 ? 1 : -1) * diff[0] * (60 / k);
        }
        CHECK(slope == 60 * dq.eval(x, y));
      }
    }
  }
}

TEST_CASE("evaluation") {
  const BivariatePolynomial m = X * Y - X + ONE;
  CHECK(m.eval(1, 1) == 1);
  CHECK(m.eval(3, 5) == 13);
  CHECK(m.at_y_one() == UnivariatePolynomial(1));
  const UnivariatePolynomial u = from_roots({1, 2, 3});
  CHECK(u.eval(0) == -6);
  CHECK(u.eval(2) == 0);
  CHECK(u.eval(4) == 6);
}

TEST_CASE("univariate helpers") {
  const UnivariatePolynomial u = from_roots({1, 1, 4});
  CHECK(u.degree() == 3);
  CHECK(u.is_monic());
  CHECK(u.coefficient(0) == -4);
  CHECK(u.to_string('y') == "y^3 - 6*y^2 + 9*y - 4");
  auto q = u.divide_by_linear(4);
  REQUIRE(q.has_value());
  CHECK(*q == from_roots({1, 1}));
  CHECK_FALSE(u.divide_by_linear(2).has_value());
  CHECK(from_roots({}) == UnivariatePolynomial(1));
  CHECK(format_factored({}) == "1");
  CHECK(format_factored({1, 1, 4}) == "(y - 1)^2*(y - 4)");
  CHECK(format_factored({2}) == "(y - 2)");
  CHECK(UnivariatePolynomial().to_string('y') == "0");
}

TEST_CASE("bivariate text and terms") {
  const BivariatePolynomial m = X * X * Y * Y - BivariatePolynomial::monomial(2, 1, 3) + ONE;
  CHECK(m.to_string() == "x^2*y^2 - 3*x^2*y + 1");
  const auto terms = m.terms();
  REQUIRE(terms.size() == 3);
  CHECK(std::get<0>(terms[0]) == 0);
  CHECK(std::get<0>(terms[2]) == 2);
  CHECK(std::get<1>(terms[2]) == 2);
}

TEST_CASE("big coefficients stay exact") {
  UnivariatePolynomial p(1);
  for (int k = 1; k <= 30; ++k) p = p * UnivariatePolynomial::linear_factor(k);
  BigInt factorial = 1;
  for (int k = 1; k <= 30; ++k) factorial *= k;
  CHECK(p.eval(0) == factorial);  // 30 factors, even sign
  CHECK(p.coefficient(29) == -465);
}
