#include "klnet/perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klnet {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: word is not a bijection of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: degree must be positive");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < degree(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> out(u.degree());
  for (int i = 1; i <= u.degree(); ++i) out[i - 1] = u(v(i));
  return Permutation(std::move(out));
}

int length(const Permutation& w) {
  int n = w.degree(), inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

void check_interval(int n, Interval iv) {
  if (iv.a < 1 || iv.a > iv.b || iv.b > n) throw std::invalid_argument("interval out of range");
}

Permutation reversal(int n, Interval iv) {
  check_interval(n, iv);
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = iv.contains(i) ? iv.a + iv.b - i : i;
  return Permutation(std::move(w));
}

Permutation longest_element(int n) { return reversal(n, {1, n}); }

Permutation simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  return reversal(n, {i, i + 1});
}

Permutation left_gen(int i, const Permutation& w) {
  if (i < 1 || i >= w.degree()) throw std::invalid_argument("generator index out of range");
  std::vector<int> out = w.word();
  for (int& v : out) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return Permutation(std::move(out));
}

Permutation right_gen(const Permutation& w, int i) {
  if (i < 1 || i >= w.degree()) throw std::invalid_argument("generator index out of range");
  std::vector<int> out = w.word();
  std::swap(out[i - 1], out[i]);
  return Permutation(std::move(out));
}

bool has_left_descent(const Permutation& w, int i) {
  int pos_i = 0, pos_i1 = 0;
  for (int p = 1; p <= w.degree(); ++p) {
    if (w(p) == i) pos_i = p;
    if (w(p) == i + 1) pos_i1 = p;
  }
  return pos_i1 < pos_i;
}

bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
  const int n = v.degree();
  // v <= w iff #{k<=i : v_k <= j} >= #{k<=i : w_k <= j} for all i,j.
  std::vector<int> rv(n + 1, 0), rw(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = v(i); j <= n; ++j) ++rv[j];
    for (int j = w(i); j <= n; ++j) ++rw[j];
    for (int j = 1; j <= n; ++j)
      if (rv[j] < rw[j]) return false;
  }
  return true;
}

std::vector<Permutation> below_reversal(int n, Interval iv) {
  check_interval(n, iv);
  std::vector<int> window(iv.width());
  for (int i = 0; i < iv.width(); ++i) window[i] = iv.a + i;
  std::vector<Permutation> out;
  do {
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = i;
    for (int i = 0; i < iv.width(); ++i) w[iv.a - 1 + i] = window[i];
    out.emplace_back(std::move(w));
  } while (std::next_permutation(window.begin(), window.end()));
  std::sort(out.begin(), out.end());
  return out;
}

bool matches_pattern(const std::vector<int>& y, const Permutation& u) {
  const int k = u.degree();
  if (static_cast<int>(y.size()) != k) throw std::invalid_argument("matches_pattern: length mismatch");
  for (size_t i = 0; i < y.size(); ++i)
    for (size_t j = i + 1; j < y.size(); ++j) {
      if (y[i] == y[j]) throw std::invalid_argument("matches_pattern: repeated letters");
      if ((y[i] < y[j]) != (u(static_cast<int>(i) + 1) < u(static_cast<int>(j) + 1))) return false;
    }
  return true;
}

namespace {

// Visit every k-subword of w; stop early when found.
bool any_subword_matches(const Permutation& w, const Permutation& u) {
  const int n = w.degree(), k = u.degree();
  std::vector<int> idx(k);
  std::vector<int> sub(k);
  // Iterative choose(n,k) enumeration.
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      sub[i] = w(idx[i] + 1);
      for (int j = 0; j < i; ++j)
        if ((sub[j] < sub[i]) != (u(j + 1) < u(i + 1))) {
          ok = false;
          break;
        }
    }
    if (ok) return true;
    int t = k - 1;
    while (t >= 0 && idx[t] == n - k + t) --t;
    if (t < 0) return false;
    ++idx[t];
    for (int i = t + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

bool avoids_pattern(const Permutation& w, const Permutation& u) {
  if (u.degree() > w.degree()) throw std::invalid_argument("avoids_pattern: pattern longer than word");
  return !any_subword_matches(w, u);
}

int gap3412(const Permutation& w) {
  const int n = w.degree();
  int best = -1;
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2) {
      if (w(i2) <= w(i1)) continue;
      for (int i3 = i2 + 1; i3 <= n; ++i3) {
        if (w(i3) >= w(i1)) continue;
        for (int i4 = i3 + 1; i4 <= n; ++i4) {
          if (!(w(i4) > w(i3) && w(i4) < w(i1))) continue;
          int gap = w(i1) - w(i4);
          if (best < 0 || gap < best) best = gap;
        }
      }
    }
  if (best < 0) throw std::domain_error("gap3412: permutation avoids 3412");
  return best;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> letters;
  Permutation u = w;
  while (!u.is_identity()) {
    int i = 1;
    while (!has_right_descent(u, i)) ++i;
    letters.push_back(i);
    u = right_gen(u, i);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

Permutation symmetry(const Permutation& w, Symmetry which) {
  const Permutation w0 = longest_element(w.degree());
  switch (which) {
    case Symmetry::kHReflect:
      return compose(w0, compose(w, w0));
    case Symmetry::kVReflect:
      return w.inverse();
    case Symmetry::kRotate:
      return compose(w0, compose(w.inverse(), w0));
  }
  throw std::invalid_argument("symmetry: unknown kind");
}

std::string to_string(const Permutation& w) {
  std::ostringstream os;
  if (w.degree() <= 9) {
    for (int i = 1; i <= w.degree(); ++i) os << w(i);
  } else {
    for (int i = 1; i <= w.degree(); ++i) {
      if (i > 1) os << ",";
      os << w(i);
    }
  }
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_permutation: empty input");
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    std::string buf(text);
    std::istringstream is(buf);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
      if (pos != tok.size()) throw std::invalid_argument("parse_permutation: bad entry '" + tok + "'");
      word.push_back(v);
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("parse_permutation: expected digits 1-9");
      word.push_back(c - '0');
    }
  }
  return Permutation(std::move(word));
}

std::string to_string(Interval iv) { return std::to_string(iv.a) + "-" + std::to_string(iv.b); }

Interval parse_interval(std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("parse_interval: expected 'a-b'");
  try {
    int a = std::stoi(std::string(text.substr(0, dash)));
    int b = std::stoi(std::string(text.substr(dash + 1)));
    if (a < 1 || b < a) throw std::invalid_argument("parse_interval: need 1 <= a <= b");
    return Interval{a, b};
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_interval: expected 'a-b'");
  }
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Interval> all_intervals(int n, int min_width) {
  std::vector<Interval> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + min_width - 1; b <= n; ++b) out.push_back(Interval{a, b});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace klnet
