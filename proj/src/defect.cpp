#include "klnet/defect.hpp"

#include <algorithm>

namespace klnet {

namespace {

// Positions of the slice from the edge leaving x_ell through the edge entering
// x_k, inclusive on both sides.
std::pair<size_t, size_t> slice_bounds(const StarNetwork& f, const std::vector<int>& path, int ell,
                                       int k) {
  size_t from = path.size(), to = path.size();
  for (size_t t = 0; t < path.size(); ++t) {
    const Edge& e = f.edge(path[t]);
    if (e.tail.kind == NodeRef::Kind::kInternal && e.tail.index == ell) from = t;
    if (e.head.kind == NodeRef::Kind::kInternal && e.head.index == k) to = t;
  }
  if (from >= path.size() || to >= path.size() || from > to)
    throw std::logic_error("phi: swap endpoints not on the path");
  return {from, to};
}

std::vector<int> with_slice(const std::vector<int>& base, std::pair<size_t, size_t> cut,
                            const std::vector<int>& donor, std::pair<size_t, size_t> graft) {
  std::vector<int> out;
  out.insert(out.end(), base.begin(), base.begin() + cut.first);
  out.insert(out.end(), donor.begin() + graft.first, donor.begin() + graft.second + 1);
  out.insert(out.end(), base.begin() + cut.second + 1, base.end());
  return out;
}

}  // namespace

std::pair<PathFamily, PhiTrace> phi(const StarNetwork& f, const PathFamily& pi, int k) {
  if (k < 1 || k > f.m()) throw std::invalid_argument("phi: vertex index out of range");
  const std::vector<Defect> all = defects(f, pi);
  std::vector<Defect> at_k;
  for (const Defect& d : all)
    if (d.k == k) at_k.push_back(d);
  if (at_k.empty()) throw NoDefectAtVertex("phi: no defect at vertex x" + std::to_string(k));

  // Step 1: lexicographically least defective pair.
  const int r = at_k.front().i;
  const int t = at_k.front().j;

  // Step 2: the largest s entering x_k on the same edge as path r with
  // (pi_s, pi_t, k) still defective; s = r when no other path qualifies.
  const auto enter = entering_edges(f, pi);
  const int r_edge = enter[k - 1][r - 1];
  int s = r;
  for (int cand = f.n(); cand >= 1; --cand) {
    if (enter[k - 1][cand - 1] != r_edge) continue;
    if (std::find(at_k.begin(), at_k.end(), Defect{cand, t, k}) != at_k.end()) {
      s = cand;
      break;
    }
  }

  // Step 3: final vertex of the rightmost crossing of pi_s, pi_t before x_k.
  int ell = -1;
  for (const PairComponent& comp : pair_components(f, pi, s, t))
    if (comp.crossing && comp.last_vertex < k) ell = std::max(ell, comp.last_vertex);
  // A defect means an odd, hence positive, number of prior crossings.
  if (ell < 1) throw std::logic_error("phi: defective pair has no prior crossing");

  // Step 4: swap the x_ell-to-x_k subpaths.
  const auto& ps = pi.paths[s - 1];
  const auto& pt = pi.paths[t - 1];
  const auto cut_s = slice_bounds(f, ps, ell, k);
  const auto cut_t = slice_bounds(f, pt, ell, k);
  PathFamily out = pi;
  out.paths[s - 1] = with_slice(ps, cut_s, pt, cut_t);
  out.paths[t - 1] = with_slice(pt, cut_t, ps, cut_s);
  return {std::move(out), PhiTrace{r, s, t, ell, k}};
}

PathFamily clear_vertex(const StarNetwork& f, PathFamily pi, int k, std::vector<PhiTrace>* traces) {
  if (k < 1 || k > f.m()) throw std::invalid_argument("clear_vertex: vertex index out of range");
  while (true) {
    bool defective = false;
    for (const Defect& d : defects(f, pi))
      if (d.k == k) {
        defective = true;
        break;
      }
    if (!defective) return pi;
    auto [next, trace] = phi(f, pi, k);
    if (traces) traces->push_back(trace);
    pi = std::move(next);
  }
}

PathFamily reduce_by_one(const StarNetwork& f, PathFamily pi, std::vector<PhiTrace>* traces) {
  const std::vector<Defect> all = defects(f, pi);
  if (all.empty()) throw ZeroDefects("reduce_by_one: family has no defects");
  const int k = all.front().k;  // earliest defective vertex
  auto [next, trace] = phi(f, pi, k);
  if (traces) traces->push_back(trace);
  pi = std::move(next);
  for (int h = k - 1; h >= 2; --h) pi = clear_vertex(f, std::move(pi), h, traces);
  return pi;
}

std::optional<PathFamily> zero_defect_family(const StarNetwork& f, const Permutation& v) {
  if (v.degree() != f.n()) throw std::invalid_argument("zero_defect_family: degree mismatch");
  std::optional<PathFamily> found;
  enumerate_families(f, [&](const PathFamily& fam) {
    if (family_type(f, fam) == v) {
      found = fam;
      return false;
    }
    return true;
  });
  if (!found) return std::nullopt;
  while (defect_count(f, *found) > 0) found = reduce_by_one(f, std::move(*found));
  return found;
}

}  // namespace klnet
