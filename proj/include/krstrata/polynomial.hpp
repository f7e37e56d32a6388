#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>
#include <vector>

namespace krstrata {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in q over the integers, ascending coefficients with
/// no trailing zeros (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(long long constant);  // NOLINT(google-explicit-constructor)

  static IntPolynomial monomial(int degree, BigInt coefficient = 1);
  /// q - 1
  static IntPolynomial q_minus_one();

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  BigInt coefficient(int k) const;

  BigInt evaluate(const BigInt& q) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace krstrata
