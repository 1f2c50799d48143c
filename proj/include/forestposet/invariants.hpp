#pragma once

// Brute-force invariants of finite ranked posets: the Moebius function and
// its generating polynomials, computed directly from the order relation.

#include <optional>
#include <utility>
#include <vector>

#include "forestposet/order.hpp"
#include "forestposet/polynomial.hpp"
#include "forestposet/poset.hpp"

namespace forestposet {

// mu(a, b) for all pairs; entries with a not <= b are zero.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& poset);
  const BigInt& operator()(std::size_t a, std::size_t b) const { return values_[a * size_ + b]; }

 private:
  std::size_t size_;
  std::vector<BigInt> values_;
};

// Throws std::invalid_argument unless a <= b.
BigInt mobius(const FinitePoset& poset, std::size_t a, std::size_t b);

// sum over a <= b of mu(a,b) x^crk(a) y^crk(b)
BivariatePolynomial m_polynomial(const FinitePoset& poset);
// sum over a <= b of x^crk(a) y^crk(b)
BivariatePolynomial z_polynomial(const FinitePoset& poset);
// sum over b of mu(0, b) y^crk(b)
UnivariatePolynomial characteristic_polynomial(const FinitePoset& poset);
// sum over a of x^crk(a)
UnivariatePolynomial cardinal_polynomial(const FinitePoset& poset);

// Every maximal chain of covers from the minimum has `expected_length` covers.
bool check_ranked(const FinitePoset& poset, int expected_length);
bool check_ranked(const IntervalPoset& interval);

// Upper semimodularity on the cover graph: whenever x and y both cover their
// meet, their join (if it exists) covers both. Pairs without a meet or join
// are skipped since intervals need not be lattices.
std::optional<std::pair<std::size_t, std::size_t>> semimodularity_violation(
    const FinitePoset& poset);
bool check_semimodular(const FinitePoset& poset);

}  // namespace forestposet
