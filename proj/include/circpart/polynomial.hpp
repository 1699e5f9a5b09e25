#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace circpart {

// Dense univariate polynomial over the integers, coefficients in ascending
// degree. Trailing zeros are stripped, so the zero polynomial is empty.
// Arithmetic is overflow-checked and throws std::overflow_error.
class IntPolynomial {
 public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> ascending);

  static IntPolynomial constant(Coeff c);
  static IntPolynomial monomial(Coeff c, int degree);
  // c0 + c1 t
  static IntPolynomial linear(Coeff c0, Coeff c1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Coeff coeff(int k) const;
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  Coeff operator()(Coeff t) const;
  // p(inner(t))
  IntPolynomial compose(const IntPolynomial& inner) const;
  // Synthetic division by (t - root): quotient and remainder.
  std::pair<IntPolynomial, Coeff> divide_linear(Coeff root) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Human-readable form, highest degree first, e.g. "t^3 - 5t^2 + 8t - 4".
  std::string to_string(char var = 't') const;

 private:
  void normalize();
  std::vector<Coeff> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t factorial(int n);

}  // namespace circpart
