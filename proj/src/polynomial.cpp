#include "circpart/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace circpart {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

IntPolynomial::IntPolynomial(std::vector<Coeff> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial IntPolynomial::constant(Coeff c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(Coeff c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(Coeff c0, Coeff c1) { return IntPolynomial({c0, c1}); }

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::Coeff IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial::Coeff IntPolynomial::operator()(Coeff t) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

std::pair<IntPolynomial, IntPolynomial::Coeff> IntPolynomial::divide_linear(Coeff root) const {
  if (coeffs_.empty()) return {IntPolynomial(), 0};
  std::vector<Coeff> q(coeffs_.size() - 1, 0);
  Coeff carry = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Coeff v = checked_add(coeffs_[i], checked_mul(carry, root));
    if (i == 0) return {IntPolynomial(std::move(q)), v};
    q[i - 1] = v;
    carry = v;
  }
  return {IntPolynomial(std::move(q)), 0};
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = checked_mul(c, -1);
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) { return *this += -other; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<IntPolynomial::Coeff> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Coeff c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag;
    if (k >= 1) out << var;
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

}  // namespace circpart
