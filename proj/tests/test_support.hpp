#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "klnet/hecke.hpp"
#include "klnet/network.hpp"

namespace klnet::testsupport {

// Independent count of covering families: at each vertex the routings are the
// ways to assign the window's paths to exiting edges respecting
// multiplicities, i.e. W! / prod mult(e)!.
inline std::uint64_t expected_family_count(const StarNetwork& f) {
  auto factorial = [](int x) {
    std::uint64_t r = 1;
    for (int t = 2; t <= x; ++t) r *= t;
    return r;
  };
  std::uint64_t total = 1;
  for (int k = 1; k <= f.m(); ++k) {
    std::uint64_t at_vertex = factorial(f.window(k).width());
    for (int id : f.out_edges(k)) at_vertex /= factorial(f.edge(id).multiplicity());
    total *= at_vertex;
  }
  return total;
}

// Independent oracle for width-2 products: the subexpression defect statistic.
// For generators (i_1,...,i_m) taken left to right, a subexpression assigns
// each slot e or s_{i_j}; slot j is a defect when right-multiplying the prefix
// by s_{i_j} (in left-to-right order) goes down. Returns sum_sigma
// q^{dfct(sigma)} T_{product(sigma)}.
inline HeckeElement subexpression_element(int n, const std::vector<int>& gens) {
  const int m = static_cast<int>(gens.size());
  HeckeElement acc(n);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Permutation prefix = Permutation::identity(n);
    int dfct = 0;
    for (int j = 0; j < m; ++j) {
      // Left-to-right products compose on the left under (uv)_i = u_{v_i}.
      if (has_left_descent(prefix, gens[j])) ++dfct;
      if (mask & (1u << j)) prefix = left_gen(gens[j], prefix);
    }
    acc.add_term(prefix, QPoly::monomial(1, dfct));
  }
  return acc;
}

// Builds unless the requested condensation has no planar embedding.
inline std::optional<StarNetwork> try_build(int n, const std::vector<Interval>& intervals,
                                            const std::vector<bool>& condensed) {
  try {
    return StarNetwork::build(n, intervals, condensed);
  } catch (const CondensationNotPlanar&) {
    return std::nullopt;
  }
}

inline std::optional<PathFamily> find_family(const StarNetwork& f,
                                             const std::function<bool(const PathFamily&)>& pred) {
  std::optional<PathFamily> out;
  int matches = 0;
  enumerate_families(f, [&](const PathFamily& fam) {
    if (pred(fam)) {
      ++matches;
      if (!out) out = fam;
    }
    return true;
  });
  return matches == 1 ? out : std::nullopt;  // unique match only
}

// All interval sequences over [1,n] of exactly length m (width >= 1 slots).
inline void for_each_interval_sequence(int n, int m,
                                       const std::function<void(const std::vector<Interval>&)>& fn) {
  const std::vector<Interval> menu = all_intervals(n);
  std::vector<Interval> seq(m, Interval{1, 1});
  std::function<void(int)> go = [&](int slot) {
    if (slot == m) {
      fn(seq);
      return;
    }
    for (Interval iv : menu) {
      seq[slot] = iv;
      go(slot + 1);
    }
  };
  go(0);
}

// All condensation flag vectors for m-1 junctions.
inline void for_each_flag_vector(int m, const std::function<void(const std::vector<bool>&)>& fn) {
  const int junctions = m > 0 ? m - 1 : 0;
  for (unsigned mask = 0; mask < (1u << junctions); ++mask) {
    std::vector<bool> flags(junctions);
    for (int t = 0; t < junctions; ++t) flags[t] = (mask >> t) & 1;
    fn(flags);
  }
}

}  // namespace klnet::testsupport
