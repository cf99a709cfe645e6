#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "klnet/hecke.hpp"
#include "klnet/perm.hpp"

namespace klnet {

struct NodeRef {
  enum class Kind { kSource, kInternal, kSink };
  Kind kind = Kind::kSource;
  int index = 0;  // row for sources/sinks, vertex number 1..m for internal
  bool operator==(const NodeRef&) const = default;
};

struct Edge {
  NodeRef tail;
  NodeRef head;
  std::vector<int> wires;  // sorted rows occupied in the drawing
  int multiplicity() const { return static_cast<int>(wires.size()); }
};

// Raised when a requested condensation would merge parallel edges whose wire
// set interleaves with another edge at a shared vertex, so no planar embedding
// with ordered edge fans exists.
struct CondensationNotPlanar : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// I_{i,j}: positions in both windows i and j not blocked by a window strictly
// between them; exactly the rows running directly from x_i to x_j.
std::set<int> overlap_positions(const std::vector<Interval>& intervals, int i, int j);

// Star network over wires 1..n built by concatenating the simple stars of the
// given intervals left to right; junction j (between stars j and j+1) merges
// its parallel multi-edges into one marked edge when condensed[j-1] is set.
class StarNetwork {
 public:
  static StarNetwork build(int n, std::vector<Interval> intervals, std::vector<bool> condensed);

  int n() const { return n_; }
  int m() const { return static_cast<int>(intervals_.size()); }
  int vertex_count() const { return 2 * n_ + m(); }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::vector<bool>& condensed() const { return condensed_; }
  Interval window(int k) const { return intervals_.at(k - 1); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(id); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edge ids entering/exiting internal vertex k, bottom to top.
  const std::vector<int>& in_edges(int k) const { return in_edges_.at(k - 1); }
  const std::vector<int>& out_edges(int k) const { return out_edges_.at(k - 1); }
  // Vertical position of an edge within its head's (tail's) fan; -1 at sinks
  // (sources).
  int in_rank(int edge_id) const { return in_rank_.at(edge_id); }
  int out_rank(int edge_id) const { return out_rank_.at(edge_id); }
  // The unique edge leaving source row r.
  int source_edge(int r) const { return source_edge_.at(r - 1); }

  // Number of edges incident upon both x_i and x_j in the uncondensed
  // concatenation, i.e. |I_{i,j}|.
  int mu(int i, int j) const;
  std::set<int> overlap_set(int i, int j) const;

 private:
  StarNetwork() = default;
  int n_ = 0;
  std::vector<Interval> intervals_;
  std::vector<bool> condensed_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> in_edges_, out_edges_;
  std::vector<int> in_rank_, out_rank_;
  std::vector<int> source_edge_;
};

// n source-to-sink paths, path i starting at source i; stored as sequences of
// edge ids. Paths sharing a merged edge simply both list it.
struct PathFamily {
  std::vector<std::vector<int>> paths;
  bool operator==(const PathFamily&) const = default;
};

// Triple (pi_i, pi_j, x_k): defect of the family, 1-based, i < j.
struct Defect {
  int i = 0, j = 0, k = 0;
  bool operator==(const Defect&) const = default;
  bool operator<(const Defect& o) const {
    if (k != o.k) return k < o.k;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

Permutation family_type(const StarNetwork& f, const PathFamily& pi);
bool covers(const StarNetwork& f, const PathFamily& pi);

// edge ids by which each path enters each internal vertex; -1 when the path
// does not pass through it. Indexed [k-1][i-1].
std::vector<std::vector<int>> entering_edges(const StarNetwork& f, const PathFamily& pi);

// Defects read off the vertical order of entering edges: (i,j,k) with i < j
// and pi_j entering x_k strictly below pi_i. Sorted by (k, i, j).
// Throws std::invalid_argument if pi does not cover f.
std::vector<Defect> defects(const StarNetwork& f, const PathFamily& pi);
int defect_count(const StarNetwork& f, const PathFamily& pi);

// Independent route: components of pairwise path intersections with their
// crossing parity. Supports the cross-check of the two defect definitions.
struct PairComponent {
  int first_vertex = 0;  // x_k where the paths meet
  int last_vertex = 0;   // final vertex of the component
  bool crossing = false;
};
std::vector<PairComponent> pair_components(const StarNetwork& f, const PathFamily& pi, int i, int j);
std::vector<Defect> defects_by_crossing_parity(const StarNetwork& f, const PathFamily& pi);

// Every covering family exactly once, depth-first by vertex with routing
// choices in lexicographic order of the exiting-edge assignment. The visitor
// returns false to stop; the family reference is only valid during the call.
void enumerate_families(const StarNetwork& f, const std::function<bool(const PathFamily&)>& visit);
std::vector<PathFamily> all_families(const StarNetwork& f);

// Sum over covering families of q^{dfct} T_type.
HeckeElement represented_element(const StarNetwork& f);

// Families of type v with exactly d defects.
std::vector<PathFamily> pi_vd(const StarNetwork& f, const Permutation& v, int d);

enum class RenderFormat { kAscii, kDot, kTikz, kSvg };
RenderFormat parse_render_format(std::string_view text);

std::string render(const StarNetwork& f, RenderFormat format, const PathFamily* pi = nullptr);

// "n=5; [2,4] * [1,2] o [2,4]": o joins plainly, * condenses the junction.
StarNetwork parse_network(std::string_view text);
std::string network_spec_string(const StarNetwork& f);

}  // namespace klnet
