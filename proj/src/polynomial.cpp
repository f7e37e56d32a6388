#include "krstrata/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace krstrata {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::q_minus_one() { return IntPolynomial(std::vector<BigInt>{-1, 1}); }

BigInt IntPolynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : BigInt(0);
}

BigInt IntPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace krstrata
