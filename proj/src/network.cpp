#include "klnet/network.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace klnet {

namespace {

int column(const StarNetwork& f, NodeRef node) {
  switch (node.kind) {
    case NodeRef::Kind::kSource:
      return 0;
    case NodeRef::Kind::kInternal:
      return node.index;
    case NodeRef::Kind::kSink:
      return f.m() + 1;
  }
  return 0;
}

}  // namespace

std::set<int> overlap_positions(const std::vector<Interval>& intervals, int i, int j) {
  const int m = static_cast<int>(intervals.size());
  if (i < 1 || j <= i || j > m) throw std::invalid_argument("overlap_positions: need 1 <= i < j <= m");
  const Interval& wi = intervals[i - 1];
  const Interval& wj = intervals[j - 1];
  std::set<int> out;
  for (int r = std::max(wi.a, wj.a); r <= std::min(wi.b, wj.b); ++r) {
    bool blocked = false;
    for (int p = i + 1; p < j && !blocked; ++p) blocked = intervals[p - 1].contains(r);
    if (!blocked) out.insert(r);
  }
  return out;
}

StarNetwork StarNetwork::build(int n, std::vector<Interval> intervals, std::vector<bool> condensed) {
  if (n < 1) throw std::invalid_argument("StarNetwork: order must be positive");
  for (Interval iv : intervals) check_interval(n, iv);
  const size_t junctions = intervals.empty() ? 0 : intervals.size() - 1;
  if (condensed.size() != junctions)
    throw std::invalid_argument("StarNetwork: need one condensation flag per junction");

  StarNetwork f;
  f.n_ = n;
  f.intervals_ = std::move(intervals);
  f.condensed_ = std::move(condensed);
  const int m = f.m();

  // Wire segments row by row; segments between internal vertices crossing a
  // condensed junction are pooled and merged into one marked edge.
  std::map<std::pair<int, int>, std::vector<int>> pooled;  // (i,j) -> rows
  for (int r = 1; r <= n; ++r) {
    NodeRef prev{NodeRef::Kind::kSource, r};
    for (int k = 1; k <= m; ++k) {
      if (!f.intervals_[k - 1].contains(r)) continue;
      NodeRef cur{NodeRef::Kind::kInternal, k};
      if (prev.kind == NodeRef::Kind::kInternal && f.condensed_[k - 2])
        pooled[{prev.index, k}].push_back(r);
      else
        f.edges_.push_back(Edge{prev, cur, {r}});
      prev = cur;
    }
    f.edges_.push_back(Edge{prev, NodeRef{NodeRef::Kind::kSink, r}, {r}});
  }
  for (auto& [key, rows] : pooled)
    f.edges_.push_back(Edge{NodeRef{NodeRef::Kind::kInternal, key.first},
                            NodeRef{NodeRef::Kind::kInternal, key.second}, std::move(rows)});

  std::sort(f.edges_.begin(), f.edges_.end(), [&f](const Edge& x, const Edge& y) {
    int a = column(f, x.tail), b = column(f, y.tail);
    if (a != b) return a < b;
    a = column(f, x.head), b = column(f, y.head);
    if (a != b) return a < b;
    return x.wires.front() < y.wires.front();
  });

  f.in_edges_.assign(m, {});
  f.out_edges_.assign(m, {});
  f.in_rank_.assign(f.edges_.size(), -1);
  f.out_rank_.assign(f.edges_.size(), -1);
  f.source_edge_.assign(n, -1);
  for (int id = 0; id < f.edge_count(); ++id) {
    const Edge& e = f.edges_[id];
    if (e.tail.kind == NodeRef::Kind::kSource) f.source_edge_[e.tail.index - 1] = id;
    if (e.tail.kind == NodeRef::Kind::kInternal) f.out_edges_[e.tail.index - 1].push_back(id);
    if (e.head.kind == NodeRef::Kind::kInternal) f.in_edges_[e.head.index - 1].push_back(id);
  }

  auto order_fan = [&f](std::vector<int>& fan, int k) {
    std::sort(fan.begin(), fan.end(),
              [&f](int x, int y) { return f.edges_[x].wires.front() < f.edges_[y].wires.front(); });
    for (size_t t = 1; t < fan.size(); ++t) {
      if (f.edges_[fan[t - 1]].wires.back() > f.edges_[fan[t]].wires.front())
        throw CondensationNotPlanar("condensation interleaves edge fans at vertex x" + std::to_string(k));
    }
  };
  for (int k = 1; k <= m; ++k) {
    order_fan(f.in_edges_[k - 1], k);
    order_fan(f.out_edges_[k - 1], k);
    int in_mult = 0, out_mult = 0;
    for (size_t t = 0; t < f.in_edges_[k - 1].size(); ++t) {
      int id = f.in_edges_[k - 1][t];
      f.in_rank_[id] = static_cast<int>(t);
      in_mult += f.edges_[id].multiplicity();
    }
    for (size_t t = 0; t < f.out_edges_[k - 1].size(); ++t) {
      int id = f.out_edges_[k - 1][t];
      f.out_rank_[id] = static_cast<int>(t);
      out_mult += f.edges_[id].multiplicity();
    }
    assert(in_mult == f.window(k).width() && out_mult == f.window(k).width());
  }
  return f;
}

int StarNetwork::mu(int i, int j) const {
  return static_cast<int>(overlap_set(i, j).size());
}

std::set<int> StarNetwork::overlap_set(int i, int j) const {
  return overlap_positions(intervals_, i, j);
}

Permutation family_type(const StarNetwork& f, const PathFamily& pi) {
  std::vector<int> word(f.n());
  for (int i = 0; i < f.n(); ++i) {
    const auto& path = pi.paths.at(i);
    const Edge& last = f.edge(path.back());
    if (last.head.kind != NodeRef::Kind::kSink)
      throw std::invalid_argument("family_type: path does not end at a sink");
    word[i] = last.head.index;
  }
  return Permutation(std::move(word));
}

bool covers(const StarNetwork& f, const PathFamily& pi) {
  if (static_cast<int>(pi.paths.size()) != f.n()) return false;
  std::vector<int> used(f.edge_count(), 0);
  for (int i = 1; i <= f.n(); ++i) {
    const auto& path = pi.paths[i - 1];
    if (path.empty()) return false;
    if (path.front() != f.source_edge(i)) return false;
    for (size_t t = 0; t < path.size(); ++t) {
      if (path[t] < 0 || path[t] >= f.edge_count()) return false;
      ++used[path[t]];
      if (t + 1 < path.size() && !(f.edge(path[t]).head == f.edge(path[t + 1]).tail)) return false;
    }
    if (f.edge(path.back()).head.kind != NodeRef::Kind::kSink) return false;
  }
  for (int id = 0; id < f.edge_count(); ++id)
    if (used[id] != f.edge(id).multiplicity()) return false;
  return true;
}

std::vector<std::vector<int>> entering_edges(const StarNetwork& f, const PathFamily& pi) {
  std::vector<std::vector<int>> mat(f.m(), std::vector<int>(f.n(), -1));
  for (int i = 0; i < f.n(); ++i)
    for (int id : pi.paths[i]) {
      const Edge& e = f.edge(id);
      if (e.head.kind == NodeRef::Kind::kInternal) mat[e.head.index - 1][i] = id;
    }
  return mat;
}

namespace {

void collect_defects(const StarNetwork& f, const std::vector<std::vector<int>>& enter,
                     std::vector<Defect>& out) {
  const int n = f.n();
  for (int k = 1; k <= f.m(); ++k) {
    const auto& row = enter[k - 1];
    for (int i = 1; i <= n; ++i) {
      if (row[i - 1] < 0) continue;
      const int ri = f.in_rank(row[i - 1]);
      for (int j = i + 1; j <= n; ++j) {
        if (row[j - 1] < 0) continue;
        if (f.in_rank(row[j - 1]) < ri) out.push_back(Defect{i, j, k});
      }
    }
  }
}

}  // namespace

std::vector<Defect> defects(const StarNetwork& f, const PathFamily& pi) {
  if (!covers(f, pi)) throw std::invalid_argument("defects: family does not cover the network");
  std::vector<Defect> out;
  collect_defects(f, entering_edges(f, pi), out);
  std::sort(out.begin(), out.end());
  return out;
}

int defect_count(const StarNetwork& f, const PathFamily& pi) {
  std::vector<Defect> out;
  collect_defects(f, entering_edges(f, pi), out);
  return static_cast<int>(out.size());
}

std::vector<PairComponent> pair_components(const StarNetwork& f, const PathFamily& pi, int i, int j) {
  auto visits = [&f](const std::vector<int>& path) {
    std::map<int, std::pair<int, int>> v;  // vertex -> (in edge, out edge)
    for (int id : path) {
      const Edge& e = f.edge(id);
      if (e.head.kind == NodeRef::Kind::kInternal) v[e.head.index].first = id;
      if (e.tail.kind == NodeRef::Kind::kInternal) v[e.tail.index].second = id;
    }
    return v;
  };
  const auto vi = visits(pi.paths.at(i - 1));
  const auto vj = visits(pi.paths.at(j - 1));
  std::vector<int> common;
  for (const auto& [k, io] : vi)
    if (vj.count(k)) common.push_back(k);

  std::vector<PairComponent> out;
  size_t t = 0;
  while (t < common.size()) {
    const int start = common[t];
    size_t u = t;
    // The component continues through x_k while both paths leave on one edge.
    while (u + 1 < common.size() && vi.at(common[u]).second == vj.at(common[u]).second &&
           f.edge(vi.at(common[u]).second).head.index == common[u + 1])
      ++u;
    const int last = common[u];
    PairComponent comp{start, last, false};
    const int enter_i = f.in_rank(vi.at(start).first);
    const int enter_j = f.in_rank(vj.at(start).first);
    const int exit_i = f.out_rank(vi.at(last).second);
    const int exit_j = f.out_rank(vj.at(last).second);
    comp.crossing = (enter_i < enter_j) != (exit_i < exit_j);
    out.push_back(comp);
    t = u + 1;
  }
  return out;
}

std::vector<Defect> defects_by_crossing_parity(const StarNetwork& f, const PathFamily& pi) {
  if (!covers(f, pi)) throw std::invalid_argument("defects: family does not cover the network");
  std::vector<Defect> out;
  for (int i = 1; i <= f.n(); ++i)
    for (int j = i + 1; j <= f.n(); ++j) {
      int parity = 0;
      for (const PairComponent& comp : pair_components(f, pi, i, j)) {
        if (parity % 2 == 1) out.push_back(Defect{i, j, comp.first_vertex});
        if (comp.crossing) ++parity;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

void enumerate_families(const StarNetwork& f, const std::function<bool(const PathFamily&)>& visit) {
  const int n = f.n(), m = f.m();
  PathFamily fam;
  fam.paths.resize(n);
  std::vector<int> pos(n);
  for (int r = 1; r <= n; ++r) {
    pos[r - 1] = f.source_edge(r);
    fam.paths[r - 1] = {pos[r - 1]};
  }
  bool stopped = false;

  std::function<void(int)> at_vertex = [&](int k) {
    if (stopped) return;
    if (k > m) {
      if (!visit(fam)) stopped = true;
      return;
    }
    const auto& outs = f.out_edges(k);
    std::vector<int> entering;
    const NodeRef here{NodeRef::Kind::kInternal, k};
    for (int i = 0; i < n; ++i)
      if (f.edge(pos[i]).head == here) entering.push_back(i);
    std::vector<int> cap(outs.size());
    for (size_t t = 0; t < outs.size(); ++t) cap[t] = f.edge(outs[t]).multiplicity();

    std::function<void(size_t)> assign = [&](size_t a) {
      if (stopped) return;
      if (a == entering.size()) {
        at_vertex(k + 1);
        return;
      }
      const int i = entering[a];
      const int saved = pos[i];
      for (size_t t = 0; t < outs.size(); ++t) {
        if (cap[t] == 0) continue;
        --cap[t];
        pos[i] = outs[t];
        fam.paths[i].push_back(outs[t]);
        assign(a + 1);
        fam.paths[i].pop_back();
        pos[i] = saved;
        ++cap[t];
        if (stopped) return;
      }
    };
    assign(0);
  };
  at_vertex(1);
}

std::vector<PathFamily> all_families(const StarNetwork& f) {
  std::vector<PathFamily> out;
  enumerate_families(f, [&out](const PathFamily& fam) {
    out.push_back(fam);
    return true;
  });
  return out;
}

HeckeElement represented_element(const StarNetwork& f) {
  HeckeElement acc(f.n());
  enumerate_families(f, [&](const PathFamily& fam) {
    acc.add_term(family_type(f, fam), QPoly::monomial(1, defect_count(f, fam)));
    return true;
  });
  return acc;
}

std::vector<PathFamily> pi_vd(const StarNetwork& f, const Permutation& v, int d) {
  if (v.degree() != f.n()) throw std::invalid_argument("pi_vd: degree mismatch");
  std::vector<PathFamily> out;
  enumerate_families(f, [&](const PathFamily& fam) {
    if (defect_count(f, fam) == d && family_type(f, fam) == v) out.push_back(fam);
    return true;
  });
  return out;
}

RenderFormat parse_render_format(std::string_view text) {
  if (text == "ascii") return RenderFormat::kAscii;
  if (text == "dot") return RenderFormat::kDot;
  if (text == "tikz") return RenderFormat::kTikz;
  if (text == "svg") return RenderFormat::kSvg;
  throw std::invalid_argument("unknown render format '" + std::string(text) + "'");
}

namespace {

std::string format1(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string node_name(NodeRef node) {
  switch (node.kind) {
    case NodeRef::Kind::kSource:
      return "s" + std::to_string(node.index);
    case NodeRef::Kind::kInternal:
      return "x" + std::to_string(node.index);
    case NodeRef::Kind::kSink:
      return "t" + std::to_string(node.index);
  }
  return "?";
}

std::string node_label(NodeRef node) {
  if (node.kind == NodeRef::Kind::kInternal) return "x" + std::to_string(node.index);
  return (node.kind == NodeRef::Kind::kSource ? "source " : "sink ") + std::to_string(node.index);
}

double vertex_y(const StarNetwork& f, int k) {
  Interval w = f.window(k);
  return (w.a + w.b) / 2.0;
}

// Route of a path as node stops, for drawing.
std::vector<NodeRef> path_stops(const StarNetwork& f, const std::vector<int>& path) {
  std::vector<NodeRef> stops;
  stops.push_back(f.edge(path.front()).tail);
  for (int id : path) stops.push_back(f.edge(id).head);
  return stops;
}

std::string render_ascii(const StarNetwork& f, const PathFamily* pi) {
  std::ostringstream os;
  const int m = f.m();
  const int cw = 2 + static_cast<int>(std::to_string(std::max(m, 1)).size());
  for (int r = f.n(); r >= 1; --r) {
    os << r << " --";
    for (int k = 1; k <= m; ++k) {
      Interval w = f.window(k);
      std::string cell(cw, '-');
      if (w.contains(r)) {
        const int center = (w.a + w.b) / 2;
        if (r == center) {
          std::string label = "x" + std::to_string(k);
          const int off = (cw - static_cast<int>(label.size())) / 2;
          for (size_t c = 0; c < label.size(); ++c) cell[off + c] = label[c];
        } else {
          cell[cw / 2] = '|';
        }
      }
      os << cell << "--";
    }
    os << " " << r << "\n";
  }
  bool any_mult = false;
  for (const Edge& e : f.edges())
    if (e.multiplicity() > 1) {
      if (!any_mult) os << "multiplicities:\n";
      any_mult = true;
      os << "  " << node_label(e.tail) << " -> " << node_label(e.head) << " (" << e.multiplicity()
         << ") wires";
      for (int w : e.wires) os << " " << w;
      os << "\n";
    }
  if (pi) {
    for (int i = 1; i <= f.n(); ++i) {
      os << "path " << i << ":";
      for (NodeRef stop : path_stops(f, pi->paths[i - 1])) os << " " << node_label(stop);
      os << "\n";
    }
  }
  return os.str();
}

std::string render_dot(const StarNetwork& f, const PathFamily* pi) {
  std::ostringstream os;
  os << "digraph star_network {\n  rankdir=LR;\n  node [shape=point];\n";
  for (int r = 1; r <= f.n(); ++r)
    os << "  s" << r << " [xlabel=\"" << r << "\"];\n";
  for (int k = 1; k <= f.m(); ++k)
    os << "  x" << k << " [shape=circle, label=\"x" << k << "\"];\n";
  for (int r = 1; r <= f.n(); ++r)
    os << "  t" << r << " [xlabel=\"" << r << "\"];\n";
  for (int id = 0; id < f.edge_count(); ++id) {
    const Edge& e = f.edge(id);
    os << "  " << node_name(e.tail) << " -> " << node_name(e.head) << " [mult=" << e.multiplicity();
    if (e.multiplicity() > 1) os << ", label=\"(" << e.multiplicity() << ")\"";
    if (pi) {
      std::string on;
      for (int i = 1; i <= f.n(); ++i)
        for (int pid : pi->paths[i - 1])
          if (pid == id) on += (on.empty() ? "" : ",") + std::to_string(i);
      if (!on.empty()) os << ", paths=\"" << on << "\"";
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

const char* kTikzStyles[] = {"thick",         "thick,dashed", "thick,dotted",
                             "thick,blue",    "thick,green",  "thick,red",
                             "thick,orange",  "thick,violet", "thick,brown"};

std::string render_tikz(const StarNetwork& f, const PathFamily* pi) {
  std::ostringstream os;
  const int m = f.m();
  os << "\\begin{tikzpicture}[scale=0.8]\n";
  for (int r = 1; r <= f.n(); ++r) {
    os << "\\node at (-0.4," << r << ") {$\\scriptstyle " << r << "$};\n";
    os << "\\node at (" << format1(m + 1.4) << "," << r << ") {$\\scriptstyle " << r << "$};\n";
    os << "\\fill (0," << r << ") circle (1mm);\n";
    os << "\\fill (" << m + 1 << "," << r << ") circle (1mm);\n";
  }
  for (int k = 1; k <= m; ++k)
    os << "\\fill (" << k << "," << format1(vertex_y(f, k)) << ") circle (1mm);  % x" << k << "\n";
  auto coord = [&](NodeRef node) -> std::string {
    if (node.kind == NodeRef::Kind::kSource) return "(0," + std::to_string(node.index) + ")";
    if (node.kind == NodeRef::Kind::kSink)
      return "(" + std::to_string(m + 1) + "," + std::to_string(node.index) + ")";
    return "(" + std::to_string(node.index) + "," + format1(vertex_y(f, node.index)) + ")";
  };
  if (!pi) {
    for (const Edge& e : f.edges()) {
      os << "\\draw[-] " << coord(e.tail) << " -- " << coord(e.head) << ";\n";
      if (e.multiplicity() > 1) {
        double mx = (column(f, e.tail) + column(f, e.head)) / 2.0;
        double my = ((e.tail.kind == NodeRef::Kind::kInternal ? vertex_y(f, e.tail.index) : e.tail.index) +
                     (e.head.kind == NodeRef::Kind::kInternal ? vertex_y(f, e.head.index) : e.head.index)) /
                    2.0;
        os << "\\node at (" << format1(mx) << "," << format1(my + 0.3) << ") {$\\scriptstyle ("
           << e.multiplicity() << ")$};\n";
      }
    }
  } else {
    for (int i = 1; i <= f.n(); ++i) {
      os << "\\draw[" << kTikzStyles[(i - 1) % 9] << "] ";
      bool first = true;
      for (NodeRef stop : path_stops(f, pi->paths[i - 1])) {
        if (!first) os << " -- ";
        first = false;
        os << coord(stop);
      }
      os << ";  % path " << i << "\n";
    }
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

const char* kSvgColors[] = {"black", "blue", "green", "red", "orange", "purple", "brown", "teal", "magenta"};

std::string render_svg(const StarNetwork& f, const PathFamily* pi) {
  const int m = f.m(), n = f.n();
  const int ux = 70, uy = 45;
  const int width = (m + 2) * ux + 60, height = (n + 1) * uy + 20;
  auto X = [&](double col) { return 30 + col * ux; };
  auto Y = [&](double row) { return height - 10 - row * uy; };
  auto pos = [&](NodeRef node) -> std::pair<double, double> {
    if (node.kind == NodeRef::Kind::kSource) return {X(0), Y(node.index)};
    if (node.kind == NodeRef::Kind::kSink) return {X(m + 1), Y(node.index)};
    return {X(node.index), Y(vertex_y(f, node.index))};
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  for (const Edge& e : f.edges()) {
    auto [x1, y1] = pos(e.tail);
    auto [x2, y2] = pos(e.head);
    os << "  <line x1=\"" << format1(x1) << "\" y1=\"" << format1(y1) << "\" x2=\"" << format1(x2)
       << "\" y2=\"" << format1(y2) << "\" stroke=\"" << (pi ? "#cccccc" : "black")
       << "\" stroke-width=\"" << (e.multiplicity() > 1 ? 3 : 1) << "\"/>\n";
    if (e.multiplicity() > 1)
      os << "  <text x=\"" << format1((x1 + x2) / 2) << "\" y=\"" << format1((y1 + y2) / 2 - 6)
         << "\" font-size=\"11\">(" << e.multiplicity() << ")</text>\n";
  }
  if (pi) {
    for (int i = 1; i <= n; ++i) {
      os << "  <polyline fill=\"none\" stroke=\"" << kSvgColors[(i - 1) % 9]
         << "\" stroke-width=\"2\" points=\"";
      bool first = true;
      for (NodeRef stop : path_stops(f, pi->paths[i - 1])) {
        auto [x, y] = pos(stop);
        if (!first) os << " ";
        first = false;
        os << format1(x) << "," << format1(y);
      }
      os << "\"/>\n";
    }
  }
  for (int r = 1; r <= n; ++r) {
    os << "  <circle cx=\"" << format1(X(0)) << "\" cy=\"" << format1(Y(r)) << "\" r=\"3\"/>\n";
    os << "  <circle cx=\"" << format1(X(m + 1)) << "\" cy=\"" << format1(Y(r)) << "\" r=\"3\"/>\n";
    os << "  <text x=\"" << format1(X(0) - 18) << "\" y=\"" << format1(Y(r) + 4)
       << "\" font-size=\"12\">" << r << "</text>\n";
    os << "  <text x=\"" << format1(X(m + 1) + 8) << "\" y=\"" << format1(Y(r) + 4)
       << "\" font-size=\"12\">" << r << "</text>\n";
  }
  for (int k = 1; k <= m; ++k) {
    os << "  <circle cx=\"" << format1(X(k)) << "\" cy=\"" << format1(Y(vertex_y(f, k)))
       << "\" r=\"4\"/>\n";
    os << "  <text x=\"" << format1(X(k) - 8) << "\" y=\"" << format1(Y(vertex_y(f, k)) + 18)
       << "\" font-size=\"12\">x" << k << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const StarNetwork& f, RenderFormat format, const PathFamily* pi) {
  if (pi && !covers(f, *pi)) throw std::invalid_argument("render: family does not cover the network");
  switch (format) {
    case RenderFormat::kAscii:
      return render_ascii(f, pi);
    case RenderFormat::kDot:
      return render_dot(f, pi);
    case RenderFormat::kTikz:
      return render_tikz(f, pi);
    case RenderFormat::kSvg:
      return render_svg(f, pi);
  }
  throw std::invalid_argument("render: unknown format");
}

StarNetwork parse_network(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_network: " + why + " in '" + std::string(text) + "'");
  };
  size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  };
  skip_ws();
  if (text.substr(p, 2) != "n=") fail("expected 'n='");
  p += 2;
  size_t q = p;
  while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
  if (q == p) fail("expected order after 'n='");
  const int n = std::stoi(std::string(text.substr(p, q - p)));
  p = q;
  skip_ws();
  if (p >= text.size() || text[p] != ';') fail("expected ';'");
  ++p;

  std::vector<Interval> intervals;
  std::vector<bool> condensed;
  while (true) {
    skip_ws();
    if (p >= text.size()) break;
    if (!intervals.empty()) {
      if (text[p] == 'o')
        condensed.push_back(false);
      else if (text[p] == '*')
        condensed.push_back(true);
      else
        fail("expected junction 'o' or '*'");
      ++p;
      skip_ws();
    }
    if (p >= text.size() || text[p] != '[') fail("expected '['");
    size_t close = text.find(']', p);
    if (close == std::string_view::npos) fail("unterminated interval");
    std::string body(text.substr(p + 1, close - p - 1));
    size_t comma = body.find(',');
    if (comma == std::string::npos) fail("expected '[a,b]'");
    Interval iv{std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1))};
    intervals.push_back(iv);
    p = close + 1;
  }
  if (intervals.empty()) fail("expected at least one interval");
  return StarNetwork::build(n, std::move(intervals), std::move(condensed));
}

std::string network_spec_string(const StarNetwork& f) {
  std::ostringstream os;
  os << "n=" << f.n() << ";";
  for (int k = 1; k <= f.m(); ++k) {
    if (k > 1) os << (f.condensed()[k - 2] ? " *" : " o");
    os << " [" << f.window(k).a << "," << f.window(k).b << "]";
  }
  return os.str();
}

}  // namespace klnet
