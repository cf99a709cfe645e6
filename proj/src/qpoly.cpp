#include "klnet/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace klnet {

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::constant(Int c) {
  QPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

QPoly QPoly::monomial(Int c, int degree) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  QPoly p;
  if (c != 0) {
    p.coeffs_.assign(degree + 1, Int(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

Int QPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[d];
}

Int QPoly::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

QPoly& QPoly::operator+=(const QPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size(), Int(0));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& r) {
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size(), Int(0));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly{};
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Int> out(coeffs_.size() + k, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
  return QPoly(std::move(out));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "q";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

QPoly q_int(int p) {
  if (p < 0) throw std::invalid_argument("q_int: negative argument");
  return QPoly(std::vector<Int>(p, Int(1)));
}

QPoly q_factorial(int p) {
  if (p < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly out = QPoly::one();
  for (int k = 2; k <= p; ++k) out *= q_int(k);
  return out;
}

std::optional<QPoly> div_exact(const QPoly& p, const QPoly& d, QPoly* remainder) {
  if (d.is_zero()) throw std::invalid_argument("div_exact: zero divisor");
  std::vector<Int> rem = p.coeffs();
  std::vector<Int> quot;
  const auto& dc = d.coeffs();
  const Int& lead = dc.back();
  if (static_cast<int>(rem.size()) >= d.degree() + 1)
    quot.assign(rem.size() - dc.size() + 1, Int(0));
  auto trim = [&rem]() {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  };
  trim();
  while (static_cast<int>(rem.size()) >= static_cast<int>(dc.size())) {
    const Int& top = rem.back();
    if (top % lead != 0) break;  // no quotient over the integers
    Int f = top / lead;
    size_t shift = rem.size() - dc.size();
    for (size_t i = 0; i < dc.size(); ++i) rem[shift + i] -= f * dc[i];
    quot[shift] = std::move(f);
    trim();
  }
  QPoly r(std::move(rem));
  if (remainder) *remainder = r;
  if (!r.is_zero()) return std::nullopt;
  return QPoly(std::move(quot));
}

}  // namespace klnet
