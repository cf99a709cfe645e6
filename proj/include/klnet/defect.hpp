#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klnet/network.hpp"

namespace klnet {

// Record of one defect-removal step at x_k: the lexicographically least
// defective pair (r,t), the swap partner s (r <= s < t), and the final vertex
// x_ell of the rightmost prior crossing of paths s and t.
struct PhiTrace {
  int r = 0, s = 0, t = 0, ell = 0, k = 0;
  bool operator==(const PhiTrace&) const = default;
};

struct NoDefectAtVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDefects : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One defect-removal step: swaps the x_ell-to-x_k subpaths of paths s and t.
// Preserves the type and every defect at vertices beyond x_k, and lowers the
// defect count at x_k by exactly one (possibly creating earlier defects).
std::pair<PathFamily, PhiTrace> phi(const StarNetwork& f, const PathFamily& pi, int k);

// Applies phi at x_k until the vertex is defect-free.
PathFamily clear_vertex(const StarNetwork& f, PathFamily pi, int k,
                        std::vector<PhiTrace>* traces = nullptr);

// Produces a family of the same type with exactly one defect fewer: one phi at
// the earliest defective vertex, then clearing sweeps at k-1, ..., 2.
PathFamily reduce_by_one(const StarNetwork& f, PathFamily pi,
                         std::vector<PhiTrace>* traces = nullptr);

// The unique zero-defect family of type v, when type v is reachable at all.
std::optional<PathFamily> zero_defect_family(const StarNetwork& f, const Permutation& v);

}  // namespace klnet
