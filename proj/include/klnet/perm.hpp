#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace klnet {

// Subinterval [a,b] of [1,n], 1-based, a <= b.
struct Interval {
  int a = 1;
  int b = 1;
  int width() const { return b - a + 1; }
  bool contains(int r) const { return a <= r && r <= b; }
  bool operator==(const Interval&) const = default;
  bool operator<(const Interval& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Permutation of [n] in one-line notation, 1-based values.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(word_.size()); }
  // w_i, 1-based.
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

 private:
  std::vector<int> word_;
};

// (uv)_i = u_{v_i}: apply v first, then u. Degrees must match.
Permutation compose(const Permutation& u, const Permutation& v);

// Inversion count.
int length(const Permutation& w);

// s_[a,b]: fixes everything outside [a,b] and reverses [a,b]; the longest
// element of the parabolic subgroup on s_a,...,s_{b-1}.
Permutation reversal(int n, Interval iv);

Permutation longest_element(int n);

// s_i as a permutation of [n].
Permutation simple_transposition(int n, int i);

// s_i * w (values i and i+1 swapped in the word of w).
Permutation left_gen(int i, const Permutation& w);
// w * s_i (entries at positions i and i+1 swapped).
Permutation right_gen(const Permutation& w, int i);

// true iff s_i * w < w, i.e. value i+1 precedes value i in w.
bool has_left_descent(const Permutation& w, int i);
// true iff w * s_i < w, i.e. w_i > w_{i+1}.
bool has_right_descent(const Permutation& w, int i);

// Bruhat order via the rank-matrix (dot) criterion, O(n^2).
bool bruhat_leq(const Permutation& v, const Permutation& w);

// All v <= s_[a,b]: exactly the permutations fixing [n] \ [a,b]. Sorted.
std::vector<Permutation> below_reversal(int n, Interval iv);

// Letters of y (distinct integers) appear in the same relative order as u.
bool matches_pattern(const std::vector<int>& y, const Permutation& u);

// No subword of w matches u.
bool avoids_pattern(const Permutation& w, const Permutation& u);

// min of w_{i1} - w_{i4} over 3412-occurrences; throws if w avoids 3412.
int gap3412(const Permutation& w);

// A reduced word (i_1,...,i_l) with s_{i_1}...s_{i_l} = w, built by repeated
// removal of the leftmost descent.
std::vector<int> reduced_word(const Permutation& w);

enum class Symmetry { kHReflect, kVReflect, kRotate };

// h-reflect: w0 w w0; v-reflect: w^{-1}; rotate: w0 w^{-1} w0.
Permutation symmetry(const Permutation& w, Symmetry which);

// "45312" for n <= 9, comma-separated ("4,5,3,1,2") otherwise.
std::string to_string(const Permutation& w);
Permutation parse_permutation(std::string_view text);

// "a-b"
std::string to_string(Interval iv);
Interval parse_interval(std::string_view text);

// Helpers for exhaustive sweeps.
std::vector<Permutation> all_permutations(int n);
std::vector<Interval> all_intervals(int n, int min_width = 1);

void check_interval(int n, Interval iv);

}  // namespace klnet
