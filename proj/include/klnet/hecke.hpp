#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "klnet/perm.hpp"
#include "klnet/qpoly.hpp"

namespace klnet {

// Element of H_n(q) in the natural basis: a finite map v -> coefficient of
// T_v. Zero coefficients are never stored; all keys share the degree n.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}
  static HeckeElement zero(int n) { return HeckeElement(n); }
  static HeckeElement unit(int n) { return basis(Permutation::identity(n)); }
  static HeckeElement basis(const Permutation& w);

  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, QPoly>& terms() const { return terms_; }
  QPoly coeff(const Permutation& v) const;

  // Accumulates p into the coefficient of T_v.
  void add_term(const Permutation& v, const QPoly& p);

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement scaled(const QPoly& f) const;
  // Specialization q = 1 (the map to Z[S_n]).
  std::map<Permutation, Int> at_q_one() const;

  bool operator==(const HeckeElement&) const = default;

 private:
  int n_;
  std::map<Permutation, QPoly> terms_;
};

// T_{s_i} * h. Two-case rule per term: T_{s_i}T_w = T_{s_i w} when
// s_i w > w, and q T_{s_i w} + (q-1) T_w when s_i w < w.
HeckeElement mul_by_generator(const HeckeElement& h, int i);

// h * T_{s_i}, the mirror rule keyed on w s_i vs w.
HeckeElement mul_by_generator_right(const HeckeElement& h, int i);

// Sum of T_u over the parabolic subgroup below s_[a,b]; coefficient 1 each.
HeckeElement reversal_kl_element(int n, Interval iv);

// reversal_kl_element(iv) * h, via the coset staircase decomposition of the
// parabolic sum (O(width^2) generator multiplications instead of width!).
HeckeElement left_mul_reversal_kl(Interval iv, const HeckeElement& h);

// Bilinear Hecke product; the right factor is expanded along reduced words.
HeckeElement mul(const HeckeElement& h, const HeckeElement& g);

// The product of the modified Kazhdan-Lusztig elements of the reversals
// s_[a_1,b_1], ..., s_[a_m,b_m], taken in the written order: factor j acts at
// the j-th column of the corresponding star network. Empty sequence gives T_e.
HeckeElement product_of_reversal_kls(int n, const std::vector<Interval>& A);

// Memoized oracle for the modified Kazhdan-Lusztig basis, computed by the
// descent recursion with mu-corrections. Thread-safe behind one lock; heavy
// parallel sweeps should each own an instance instead.
class KLOracle {
 public:
  // Sum over v <= w of P_{v,w}(q) T_v.
  const HeckeElement& basis_element(const Permutation& w);
  // P_{v,w}(q); the zero polynomial when v is not below w.
  QPoly polynomial(const Permutation& v, const Permutation& w);

 private:
  const HeckeElement& compute_locked(const Permutation& w);
  std::mutex mutex_;
  std::map<Permutation, HeckeElement> memo_;
};

// Process-wide oracle shared by the CLI and the library front doors.
KLOracle& kl_oracle();

HeckeElement kl_basis_element(const Permutation& w);
QPoly kl_polynomial(const Permutation& v, const Permutation& w);

}  // namespace klnet
