#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace klnet {

// Coefficient type. Natural-basis coefficients of long reversal products grow
// factorially, so fixed-width integers are not enough.
using Int = boost::multiprecision::cpp_int;

// Polynomial in q with exact integer coefficients, ascending by degree.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static QPoly zero() { return QPoly{}; }
  static QPoly one() { return constant(1); }
  static QPoly constant(Int c);
  static QPoly monomial(Int c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int d) const;
  Int eval_at_one() const;

  QPoly& operator+=(const QPoly& r);
  QPoly& operator-=(const QPoly& r);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly& operator*=(const QPoly& r) { return *this = *this * r; }

  // Multiply by q^k.
  QPoly shifted(int k) const;

  bool operator==(const QPoly&) const = default;

  // Human form, e.g. "1 + q^2"; "0" for the zero polynomial.
  std::string str() const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

// [p]_q = 1 + q + ... + q^{p-1}, with [0]_q = 0.
QPoly q_int(int p);
// [p]_q! = [1]_q [2]_q ... [p]_q, with [0]_q! = 1.
QPoly q_factorial(int p);

// Exact quotient if d divides p over the integers, otherwise nullopt with the
// division remainder written to *remainder when requested. A nonzero remainder
// is an ordinary outcome here (candidate factorizations probe divisibility),
// not an error; a zero divisor is.
std::optional<QPoly> div_exact(const QPoly& p, const QPoly& d, QPoly* remainder = nullptr);

}  // namespace klnet
