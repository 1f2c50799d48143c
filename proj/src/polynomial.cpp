#include "forestposet/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace forestposet {

namespace {

std::string format_term(const BigInt& coefficient, const std::string& monomial, bool first) {
  std::ostringstream out;
  BigInt magnitude = abs(coefficient);
  if (first) {
    if (coefficient < 0) out << "-";
  } else {
    out << (coefficient < 0 ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude;
  } else if (magnitude == 1) {
    out << monomial;
  } else {
    out << magnitude << "*" << monomial;
  }
  return out.str();
}

std::string power(char variable, int degree) {
  if (degree == 0) return "";
  if (degree == 1) return std::string(1, variable);
  return std::string(1, variable) + "^" + std::to_string(degree);
}

}  // namespace

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(BigInt constant) { add_term(0, constant); }

UnivariatePolynomial UnivariatePolynomial::monomial(int degree, BigInt coefficient) {
  UnivariatePolynomial p;
  p.add_term(degree, coefficient);
  return p;
}

UnivariatePolynomial UnivariatePolynomial::linear_factor(const BigInt& root) {
  UnivariatePolynomial p = monomial(1);
  p.add_term(0, -root);
  return p;
}

void UnivariatePolynomial::add_term(int degree, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(degree, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt UnivariatePolynomial::coefficient(int degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

int UnivariatePolynomial::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

bool UnivariatePolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.rbegin()->second == 1;
}

BigInt UnivariatePolynomial::eval(const BigInt& at) const {
  BigInt result = 0;
  for (int d = degree(); d >= 0; --d) result = result * at + coefficient(d);
  return result;
}

std::optional<UnivariatePolynomial> UnivariatePolynomial::divide_by_linear(
    const BigInt& root) const {
  if (degree() < 1) return std::nullopt;
  // Synthetic division, highest degree first.
  UnivariatePolynomial quotient;
  BigInt carry = 0;
  for (int d = degree(); d >= 1; --d) {
    carry = carry * root + coefficient(d);
    quotient.add_term(d - 1, carry);
  }
  const BigInt remainder = carry * root + coefficient(0);
  if (remainder != 0) return std::nullopt;
  return quotient;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  for (const auto& [d, c] : other.coeffs_) add_term(d, c);
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& other) {
  for (const auto& [d, c] : other.coeffs_) add_term(d, -c);
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial out;
  for (const auto& [da, ca] : a.coeffs_) {
    for (const auto& [db, cb] : b.coeffs_) out.add_term(da + db, ca * cb);
  }
  return out;
}

std::vector<std::pair<int, BigInt>> UnivariatePolynomial::terms() const {
  return {coeffs_.begin(), coeffs_.end()};
}

std::string UnivariatePolynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out += format_term(it->second, power(variable, it->first), first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(BigInt constant) { add_term(0, 0, constant); }

BivariatePolynomial BivariatePolynomial::monomial(int x_degree, int y_degree,
                                                  BigInt coefficient) {
  BivariatePolynomial p;
  p.add_term(x_degree, y_degree, coefficient);
  return p;
}

void BivariatePolynomial::add_term(int x_degree, int y_degree, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.try_emplace({x_degree, y_degree}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt BivariatePolynomial::coefficient(int x_degree, int y_degree) const {
  auto it = coeffs_.find({x_degree, y_degree});
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

BivariatePolynomial BivariatePolynomial::partial_x() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : coeffs_) {
    if (e.first > 0) out.add_term(e.first - 1, e.second, c * e.first);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::partial_y() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : coeffs_) {
    if (e.second > 0) out.add_term(e.first, e.second - 1, c * e.second);
  }
  return out;
}

BivariatePolynomial BivariatePolynomial::x_partial_x() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : coeffs_) out.add_term(e.first, e.second, c * (e.first + 1));
  return out;
}

BivariatePolynomial BivariatePolynomial::y_partial_y() const {
  BivariatePolynomial out;
  for (const auto& [e, c] : coeffs_) out.add_term(e.first, e.second, c * (e.second + 1));
  return out;
}

BigInt BivariatePolynomial::eval(const BigInt& x, const BigInt& y) const {
  BigInt total = 0;
  for (const auto& [e, c] : coeffs_) {
    total += c * pow(x, static_cast<unsigned>(e.first)) * pow(y, static_cast<unsigned>(e.second));
  }
  return total;
}

UnivariatePolynomial BivariatePolynomial::at_y_one() const {
  UnivariatePolynomial out;
  for (const auto& [e, c] : coeffs_) out += UnivariatePolynomial::monomial(e.first, c);
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e.first, e.second, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e.first, e.second, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  return out;
}

std::vector<std::tuple<int, int, BigInt>> BivariatePolynomial::terms() const {
  std::vector<std::tuple<int, int, BigInt>> out;
  out.reserve(coeffs_.size());
  for (const auto& [e, c] : coeffs_) out.emplace_back(e.first, e.second, c);
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string monomial = power('x', it->first.first);
    const std::string ypart = power('y', it->first.second);
    if (!monomial.empty() && !ypart.empty()) monomial += "*";
    monomial += ypart;
    out += format_term(it->second, monomial, first);
    first = false;
  }
  return out;
}

UnivariatePolynomial from_roots(const std::vector<long long>& roots) {
  UnivariatePolynomial out(1);
  for (long long r : roots) out = out * UnivariatePolynomial::linear_factor(r);
  return out;
}

std::string format_factored(const std::vector<long long>& roots, char variable) {
  if (roots.empty()) return "1";
  std::map<long long, int> multiplicity;
  for (long long r : roots) ++multiplicity[r];
  std::string out;
  for (const auto& [r, m] : multiplicity) {
    if (!out.empty()) out += "*";
    out += "(" + std::string(1, variable);
    if (r >= 0) {
      out += " - " + std::to_string(r);
    } else {
      out += " + " + std::to_string(-r);
    }
    out += ")";
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace forestposet
