#pragma once

// Sparse polynomials with arbitrary-precision integer coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace forestposet {

using BigInt = boost::multiprecision::cpp_int;

class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(BigInt constant);
  static UnivariatePolynomial monomial(int degree, BigInt coefficient = 1);
  // y - root
  static UnivariatePolynomial linear_factor(const BigInt& root);

  const std::map<int, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int degree) const;
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_monic() const;

  BigInt eval(const BigInt& at) const;

  // Quotient by (y - root) when it divides exactly.
  std::optional<UnivariatePolynomial> divide_by_linear(const BigInt& root) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& other);
  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // (degree, coefficient) pairs in increasing degree.
  std::vector<std::pair<int, BigInt>> terms() const;
  // Expanded form, highest degree first, e.g. "y^2 - 3*y + 2".
  std::string to_string(char variable = 'y') const;

 private:
  void add_term(int degree, const BigInt& coefficient);
  std::map<int, BigInt> coeffs_;
};

class BivariatePolynomial {
 public:
  using Exponent = std::pair<int, int>;  // (x-degree, y-degree)

  BivariatePolynomial() = default;
  explicit BivariatePolynomial(BigInt constant);
  static BivariatePolynomial monomial(int x_degree, int y_degree, BigInt coefficient = 1);
  static BivariatePolynomial x() { return monomial(1, 0); }
  static BivariatePolynomial y() { return monomial(0, 1); }

  const std::map<Exponent, BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(int x_degree, int y_degree) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_term(int x_degree, int y_degree, const BigInt& coefficient);

  BivariatePolynomial partial_x() const;
  BivariatePolynomial partial_y() const;
  // d/dx (x * P) and d/dy (y * P).
  BivariatePolynomial x_partial_x() const;
  BivariatePolynomial y_partial_y() const;

  BigInt eval(const BigInt& x, const BigInt& y) const;
  // P(x, 1) as a polynomial in x.
  UnivariatePolynomial at_y_one() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator-=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // (x-degree, y-degree, coefficient) triples in lexicographic order.
  std::vector<std::tuple<int, int, BigInt>> terms() const;
  std::string to_string() const;

 private:
  std::map<Exponent, BigInt> coeffs_;
};

// Product of (y - e) over the given roots.
UnivariatePolynomial from_roots(const std::vector<long long>& roots);

// "(y - 1)^2*(y - 4)"; "1" for the empty product.
std::string format_factored(const std::vector<long long>& roots, char variable = 'y');

}  // namespace forestposet
