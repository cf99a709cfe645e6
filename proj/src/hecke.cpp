#include "klnet/hecke.hpp"

#include <stdexcept>

namespace klnet {

HeckeElement HeckeElement::basis(const Permutation& w) {
  HeckeElement h(w.degree());
  h.terms_.emplace(w, QPoly::one());
  return h;
}

QPoly HeckeElement::coeff(const Permutation& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? QPoly{} : it->second;
}

void HeckeElement::add_term(const Permutation& v, const QPoly& p) {
  if (v.degree() != n_) throw std::invalid_argument("HeckeElement: degree mismatch");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.emplace(v, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: degree mismatch");
  for (const auto& [v, p] : o.terms_) add_term(v, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.n_ != n_) throw std::invalid_argument("HeckeElement: degree mismatch");
  for (const auto& [v, p] : o.terms_) add_term(v, QPoly{} - p);
  return *this;
}

HeckeElement HeckeElement::scaled(const QPoly& f) const {
  HeckeElement out(n_);
  if (f.is_zero()) return out;
  for (const auto& [v, p] : terms_) out.terms_.emplace(v, p * f);
  return out;
}

std::map<Permutation, Int> HeckeElement::at_q_one() const {
  std::map<Permutation, Int> out;
  for (const auto& [v, p] : terms_) {
    Int s = p.eval_at_one();
    if (s != 0) out.emplace(v, std::move(s));
  }
  return out;
}

HeckeElement mul_by_generator(const HeckeElement& h, int i) {
  if (i < 1 || i >= h.degree()) throw std::invalid_argument("mul_by_generator: index out of range");
  HeckeElement out(h.degree());
  const QPoly q = QPoly::monomial(1, 1);
  const QPoly qm1 = q - QPoly::one();
  for (const auto& [w, p] : h.terms()) {
    Permutation sw = left_gen(i, w);
    if (!has_left_descent(w, i)) {
      out.add_term(sw, p);
    } else {
      out.add_term(sw, p * q);
      out.add_term(w, p * qm1);
    }
  }
  return out;
}

HeckeElement mul_by_generator_right(const HeckeElement& h, int i) {
  if (i < 1 || i >= h.degree()) throw std::invalid_argument("mul_by_generator_right: index out of range");
  HeckeElement out(h.degree());
  const QPoly q = QPoly::monomial(1, 1);
  const QPoly qm1 = q - QPoly::one();
  for (const auto& [w, p] : h.terms()) {
    Permutation ws = right_gen(w, i);
    if (!has_right_descent(w, i)) {
      out.add_term(ws, p);
    } else {
      out.add_term(ws, p * q);
      out.add_term(w, p * qm1);
    }
  }
  return out;
}

HeckeElement reversal_kl_element(int n, Interval iv) {
  check_interval(n, iv);
  HeckeElement out(n);
  for (const Permutation& u : below_reversal(n, iv)) out.add_term(u, QPoly::one());
  return out;
}

HeckeElement left_mul_reversal_kl(Interval iv, const HeckeElement& h) {
  check_interval(h.degree(), iv);
  // Parabolic sum as a product of staircases: for each new window generator
  // g_j = s_{a+j-1}, multiply by T_e + sum_{i<=j} T_{g_i g_{i+1} ... g_j}.
  HeckeElement acc = h;
  for (int j = iv.a; j < iv.b; ++j) {
    HeckeElement next = acc;
    HeckeElement chain = acc;
    for (int i = j; i >= iv.a; --i) {
      chain = mul_by_generator(chain, i);
      next += chain;
    }
    acc = std::move(next);
  }
  return acc;
}

HeckeElement mul(const HeckeElement& h, const HeckeElement& g) {
  if (h.degree() != g.degree()) throw std::invalid_argument("mul: degree mismatch");
  HeckeElement out(h.degree());
  for (const auto& [u, b] : g.terms()) {
    HeckeElement x = h;
    for (int i : reduced_word(u)) x = mul_by_generator_right(x, i);
    out += x.scaled(b);
  }
  return out;
}

HeckeElement product_of_reversal_kls(int n, const std::vector<Interval>& A) {
  // Factor j sits at column j of the star network, so with functional
  // composition the later columns act on the outside: fold by left-multiplying
  // with each successive factor.
  if (A.empty()) return HeckeElement::unit(n);
  HeckeElement acc = reversal_kl_element(n, A.front());
  for (size_t j = 1; j < A.size(); ++j) acc = left_mul_reversal_kl(A[j], acc);
  return acc;
}

const HeckeElement& KLOracle::basis_element(const Permutation& w) {
  std::lock_guard<std::mutex> lock(mutex_);
  return compute_locked(w);
}

const HeckeElement& KLOracle::compute_locked(const Permutation& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (w.is_identity())
    return memo_.emplace(w, HeckeElement::unit(w.degree())).first->second;

  int i = 1;
  while (!has_left_descent(w, i)) ++i;
  const Permutation u = left_gen(i, w);
  const int lw = length(w);
  const int lu = lw - 1;

  // C_w = (T_e + T_{s_i}) C_u - sum over z < u with s_i z < z of
  // mu(z,u) q^{(l(w)-l(z))/2} C_z, where mu is the coefficient at the top of
  // the allowed degree range of P_{z,u}.
  HeckeElement e = compute_locked(u);  // map references remain valid below
  const HeckeElement& cu = memo_.at(u);
  e += mul_by_generator(cu, i);
  std::vector<std::pair<Permutation, Int>> corrections;
  for (const auto& [z, p] : cu.terms()) {
    if (!has_left_descent(z, i)) continue;
    const int diff = lu - length(z);
    if (diff % 2 == 0) continue;
    Int mu = p.coeff((diff - 1) / 2);
    if (mu != 0) corrections.emplace_back(z, std::move(mu));
  }
  for (const auto& [z, mu] : corrections) {
    const HeckeElement& cz = compute_locked(z);
    e -= cz.scaled(QPoly::monomial(mu, (lw - length(z)) / 2));
  }
  return memo_.emplace(w, std::move(e)).first->second;
}

QPoly KLOracle::polynomial(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("kl_polynomial: degree mismatch");
  if (!bruhat_leq(v, w)) return QPoly{};
  std::lock_guard<std::mutex> lock(mutex_);
  // P_{v,w} = P_{v^{-1},w^{-1}}: reuse the inverse column when it is the one
  // already cached.
  if (memo_.find(w) == memo_.end()) {
    Permutation wi = w.inverse();
    auto it = memo_.find(wi);
    if (it != memo_.end()) return it->second.coeff(v.inverse());
  }
  return compute_locked(w).coeff(v);
}

KLOracle& kl_oracle() {
  static KLOracle oracle;
  return oracle;
}

HeckeElement kl_basis_element(const Permutation& w) { return kl_oracle().basis_element(w); }

QPoly kl_polynomial(const Permutation& v, const Permutation& w) {
  return kl_oracle().polynomial(v, w);
}

}  // namespace klnet
