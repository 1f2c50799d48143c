#include "forestposet/invariants.hpp"

#include <limits>
#include <stdexcept>

namespace forestposet {

MobiusTable::MobiusTable(const FinitePoset& poset) : size_(poset.size()) {
  values_.assign(size_ * size_, BigInt(0));
  const auto order = poset.linear_extension();
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b : order) {
      if (!poset.leq(a, b)) continue;
      if (a == b) {
        values_[a * size_ + b] = 1;
        continue;
      }
      BigInt sum = 0;
      for (std::size_t c = 0; c < size_; ++c) {
        if (poset.leq(a, c) && poset.less(c, b)) sum += values_[a * size_ + c];
      }
      values_[a * size_ + b] = -sum;
    }
  }
}

BigInt mobius(const FinitePoset& poset, std::size_t a, std::size_t b) {
  if (a >= poset.size() || b >= poset.size() || !poset.leq(a, b)) {
    throw std::invalid_argument("mobius: elements are not comparable");
  }
  // mu(a, .) only depends on the elements above a.
  std::vector<BigInt> row(poset.size(), BigInt(0));
  for (std::size_t c : poset.linear_extension()) {
    if (!poset.leq(a, c) || !poset.leq(c, b)) continue;
    if (c == a) {
      row[c] = 1;
      continue;
    }
    BigInt sum = 0;
    for (std::size_t d = 0; d < poset.size(); ++d) {
      if (poset.leq(a, d) && poset.less(d, c)) sum += row[d];
    }
    row[c] = -sum;
  }
  return row[b];
}

BivariatePolynomial m_polynomial(const FinitePoset& poset) {
  const MobiusTable mu(poset);
  BivariatePolynomial out;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (poset.leq(a, b)) out.add_term(poset.corank(a), poset.corank(b), mu(a, b));
    }
  }
  return out;
}

BivariatePolynomial z_polynomial(const FinitePoset& poset) {
  BivariatePolynomial out;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (poset.leq(a, b)) out.add_term(poset.corank(a), poset.corank(b), 1);
    }
  }
  return out;
}

UnivariatePolynomial characteristic_polynomial(const FinitePoset& poset) {
  const std::size_t zero = poset.bottom();
  if (zero == poset.size()) throw std::invalid_argument("poset has no minimum");
  const MobiusTable mu(poset);
  UnivariatePolynomial out;
  for (std::size_t b = 0; b < poset.size(); ++b) {
    out += UnivariatePolynomial::monomial(poset.corank(b), mu(zero, b));
  }
  return out;
}

UnivariatePolynomial cardinal_polynomial(const FinitePoset& poset) {
  UnivariatePolynomial out;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    out += UnivariatePolynomial::monomial(poset.corank(a));
  }
  return out;
}

bool check_ranked(const FinitePoset& poset, int expected_length) {
  const std::size_t n = poset.size();
  const std::size_t zero = poset.bottom();
  if (zero == n) return false;

  std::vector<std::vector<std::size_t>> up(n);
  for (const auto& [a, b] : poset.covers()) up[a].push_back(b);

  constexpr int kUnseen = std::numeric_limits<int>::max();
  std::vector<int> shortest(n, kUnseen);
  std::vector<int> longest(n, -1);
  shortest[zero] = 0;
  longest[zero] = 0;
  for (std::size_t a : poset.linear_extension()) {
    if (longest[a] < 0) continue;
    for (std::size_t b : up[a]) {
      shortest[b] = std::min(shortest[b], shortest[a] + 1);
      longest[b] = std::max(longest[b], longest[a] + 1);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (longest[a] < 0 || shortest[a] != longest[a]) return false;
    if (up[a].empty() && longest[a] != expected_length) return false;
  }
  return true;
}

bool check_ranked(const IntervalPoset& interval) {
  return check_ranked(interval.order, static_cast<int>(interval.degree()));
}

std::optional<std::pair<std::size_t, std::size_t>> semimodularity_violation(
    const FinitePoset& poset) {
  const std::size_t n = poset.size();
  std::vector<char> is_cover(n * n, 0);
  for (const auto& [a, b] : poset.covers()) is_cover[a * n + b] = 1;
  auto covers = [&](std::size_t upper, std::size_t lower) { return is_cover[lower * n + upper]; };

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      std::optional<std::size_t> meet;
      for (std::size_t m = 0; m < n && !meet; ++m) {
        if (!poset.leq(m, x) || !poset.leq(m, y)) continue;
        bool greatest = true;
        for (std::size_t l = 0; l < n && greatest; ++l) {
          if (poset.leq(l, x) && poset.leq(l, y)) greatest = poset.leq(l, m);
        }
        if (greatest) meet = m;
      }
      if (!meet || !covers(x, *meet) || !covers(y, *meet)) continue;

      std::optional<std::size_t> join;
      for (std::size_t j = 0; j < n && !join; ++j) {
        if (!poset.leq(x, j) || !poset.leq(y, j)) continue;
        bool least = true;
        for (std::size_t u = 0; u < n && least; ++u) {
          if (poset.leq(x, u) && poset.leq(y, u)) least = poset.leq(j, u);
        }
        if (least) join = j;
      }
      if (!join) continue;
      if (!covers(*join, x) || !covers(*join, y)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool check_semimodular(const FinitePoset& poset) {
  return !semimodularity_violation(poset).has_value();
}

}  // namespace forestposet
