#include <doctest.h>

#include <set>
#include <sstream>

#include "klnet/network.hpp"
#include "test_support.hpp"

using namespace klnet;
using namespace klnet::testsupport;

namespace {

Permutation perm(const char* text) { return parse_permutation(text); }

QPoly poly(std::initializer_list<int> coeffs) {
  std::vector<Int> c;
  for (int x : coeffs) c.emplace_back(x);
  return QPoly(std::move(c));
}

std::set<Defect> defect_set(const StarNetwork& f, const PathFamily& fam) {
  const auto d = defects(f, fam);
  return {d.begin(), d.end()};
}

}  // namespace

TEST_CASE("building star networks") {
  // Single simple star: one interior vertex between the boundary rows.
  StarNetwork single = StarNetwork::build(4, {{2, 4}}, {});
  CHECK(single.vertex_count() == 9);
  CHECK(single.in_edges(1).size() == 3);
  CHECK(single.out_edges(1).size() == 3);
  CHECK(single.edge(single.source_edge(1)).head.kind == NodeRef::Kind::kSink);

  StarNetwork plain = StarNetwork::build(4, {{1, 3}, {2, 4}, {1, 3}}, {false, false});
  CHECK(plain.vertex_count() == 11);
  for (const Edge& e : plain.edges()) CHECK(e.multiplicity() == 1);

  StarNetwork dense = StarNetwork::build(4, {{1, 3}, {2, 4}, {1, 3}}, {true, true});
  int merged = 0;
  for (const Edge& e : dense.edges())
    if (e.multiplicity() == 2) ++merged;
  CHECK(merged == 2);
  CHECK(dense.mu(1, 2) == 2);
  CHECK(dense.mu(2, 3) == 2);
  CHECK(dense.mu(1, 3) == 1);

  CHECK_THROWS_AS(StarNetwork::build(3, {{1, 4}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(StarNetwork::build(3, {{1, 2}, {2, 3}}, {}), std::invalid_argument);
}

TEST_CASE("mu counts parallel edges of the plain concatenation") {
  StarNetwork f = StarNetwork::build(4, {{2, 4}, {1, 2}, {2, 4}, {1, 2}}, {true, true, true});
  CHECK(f.mu(1, 3) == 2);
  CHECK(f.mu(1, 4) == 0);  // windows separated by everything between
  CHECK(f.mu(1, 2) == 1);
  // Against the definition: count multiplicity-1 edges of the uncondensed
  // build incident on both vertices.
  StarNetwork plain = StarNetwork::build(4, {{2, 4}, {1, 2}, {2, 4}, {1, 2}}, {false, false, false});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      int count = 0;
      for (const Edge& e : plain.edges())
        if (e.tail == NodeRef{NodeRef::Kind::kInternal, i} &&
            e.head == NodeRef{NodeRef::Kind::kInternal, j})
          ++count;
      CHECK(f.mu(i, j) == count);
    }
}

TEST_CASE("condensation planarity") {
  // Merging rows {1,4,5} into one edge interleaves with the {2,3} edge at the
  // shared head vertex.
  CHECK_THROWS_AS(StarNetwork::build(5, {{1, 5}, {2, 3}, {1, 5}}, {false, true}), CondensationNotPlanar);
  // The plain concatenation of the same intervals is fine.
  CHECK_NOTHROW(StarNetwork::build(5, {{1, 5}, {2, 3}, {1, 5}}, {false, false}));
}

TEST_CASE("family enumeration counts") {
  StarNetwork trivial = StarNetwork::build(3, {{2, 2}}, {});
  CHECK(all_families(trivial).size() == 1);

  StarNetwork two = StarNetwork::build(2, {{1, 2}, {1, 2}}, {false});
  CHECK(all_families(two).size() == 4);

  StarNetwork plain = StarNetwork::build(4, {{1, 3}, {2, 4}, {1, 3}}, {false, false});
  CHECK(all_families(plain).size() == 216);  // 3! per vertex
  StarNetwork dense = StarNetwork::build(4, {{1, 3}, {2, 4}, {1, 3}}, {true, true});
  CHECK(all_families(dense).size() == 54);

  // Closed-form routing count across a mixed sweep.
  for (int m = 1; m <= 3; ++m)
    for_each_interval_sequence(3, m, [&](const std::vector<Interval>& seq) {
      for_each_flag_vector(m, [&](const std::vector<bool>& flags) {
        auto f = try_build(3, seq, flags);
        if (!f) return;
        CHECK(all_families(*f).size() == expected_family_count(*f));
      });
    });

  // Enumeration never repeats a family.
  std::set<std::vector<std::vector<int>>> seen;
  enumerate_families(dense, [&](const PathFamily& fam) {
    CHECK(seen.insert(fam.paths).second);
    CHECK(covers(dense, fam));
    return true;
  });
}

TEST_CASE("defects on the two-crossing network") {
  StarNetwork f = StarNetwork::build(2, {{1, 2}, {1, 2}}, {false});
  // The family crossing at x_1 meets again at x_2 with odd history.
  auto pi = find_family(f, [&](const PathFamily& fam) {
    return family_type(f, fam) == perm("21") && defect_count(f, fam) == 1;
  });
  REQUIRE(pi.has_value());
  CHECK(defect_set(f, *pi) == std::set<Defect>{Defect{1, 2, 2}});

  auto sigma = find_family(f, [&](const PathFamily& fam) {
    return family_type(f, fam) == perm("21") && defect_count(f, fam) == 0;
  });
  REQUIRE(sigma.has_value());
  CHECK(defects(f, *sigma).empty());

  // The noncrossing family has type e and no defects.
  auto noncrossing = find_family(f, [&](const PathFamily& fam) {
    return family_type(f, fam) == Permutation::identity(2) && defect_count(f, fam) == 0;
  });
  REQUIRE(noncrossing.has_value());

  // Non-covering input is rejected.
  PathFamily broken = *pi;
  broken.paths[0].pop_back();
  CHECK_THROWS_AS(defects(f, broken), std::invalid_argument);
}

TEST_CASE("defects on the condensed 1342 network") {
  StarNetwork f = StarNetwork::build(4, {{2, 4}, {1, 2}, {2, 4}, {1, 2}}, {true, true, true});

  auto pi = find_family(f, [&](const PathFamily& fam) {
    return family_type(f, fam) == perm("1342") &&
           defect_set(f, fam) == std::set<Defect>{Defect{1, 4, 4}};
  });
  REQUIRE(pi.has_value());

  auto sigma = find_family(f, [&](const PathFamily& fam) {
    return family_type(f, fam) == perm("1342") &&
           defect_set(f, fam) == std::set<Defect>{Defect{2, 4, 3}, Defect{3, 4, 3}};
  });
  REQUIRE(sigma.has_value());
  CHECK(defect_count(f, *sigma) == 2);

  auto tau = find_family(f, [&](const PathFamily& fam) {
    return family_type(f, fam) == perm("1342") && defect_count(f, fam) == 0;
  });
  REQUIRE(tau.has_value());

  // No defect ever sits at the first vertex.
  enumerate_families(f, [&](const PathFamily& fam) {
    for (const Defect& d : defects(f, fam)) CHECK(d.k >= 2);
    return true;
  });
}

TEST_CASE("the two defect definitions agree") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      for_each_interval_sequence(n, m, [&](const std::vector<Interval>& seq) {
        for_each_flag_vector(m, [&](const std::vector<bool>& flags) {
          auto f = try_build(n, seq, flags);
          if (!f) return;
          enumerate_families(*f, [&](const PathFamily& fam) {
            CHECK(defects(*f, fam) == defects_by_crossing_parity(*f, fam));
            return true;
          });
        });
      });
}

TEST_CASE("represented elements") {
  StarNetwork two = StarNetwork::build(2, {{1, 2}, {1, 2}}, {false});
  HeckeElement rep = represented_element(two);
  CHECK(rep.coeff(perm("12")) == poly({1, 1}));
  CHECK(rep.coeff(perm("21")) == poly({1, 1}));

  // Single interval networks have no defects and give the reversal element.
  for (Interval iv : all_intervals(4))
    CHECK(represented_element(StarNetwork::build(4, {iv}, {})) == reversal_kl_element(4, iv));

  // Plain concatenations match the Hecke product (small exhaustive sweep).
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m)
      for_each_interval_sequence(n, m, [&](const std::vector<Interval>& seq) {
        StarNetwork f = StarNetwork::build(n, seq, std::vector<bool>(m - 1, false));
        CHECK(represented_element(f) == product_of_reversal_kls(n, seq));
      });

  // Condensation divides by the overlap q-factorials.
  StarNetwork dense = StarNetwork::build(4, {{1, 3}, {2, 4}, {1, 3}}, {true, true});
  HeckeElement divided = represented_element(dense);
  HeckeElement full = product_of_reversal_kls(4, {{1, 3}, {2, 4}, {1, 3}});
  CHECK(divided.scaled(poly({1, 2, 1})) == full);  // (1+q)^2
}

TEST_CASE("q=1 specialization counts path families by type") {
  for (int m = 1; m <= 3; ++m)
    for_each_interval_sequence(3, m, [&](const std::vector<Interval>& seq) {
      StarNetwork f = StarNetwork::build(3, seq, std::vector<bool>(m > 0 ? m - 1 : 0, false));
      std::map<Permutation, Int> counts;
      enumerate_families(f, [&](const PathFamily& fam) {
        auto [it, inserted] = counts.emplace(family_type(f, fam), 1);
        if (!inserted) ++it->second;
        return true;
      });
      CHECK(product_of_reversal_kls(3, seq).at_q_one() == counts);
    });
}

TEST_CASE("pi_vd") {
  StarNetwork two = StarNetwork::build(2, {{1, 2}, {1, 2}}, {false});
  CHECK(pi_vd(two, Permutation::identity(2), 0).size() == 1);
  CHECK(pi_vd(two, Permutation::identity(2), 1).size() == 1);
  CHECK(pi_vd(two, perm("21"), 0).size() == 1);
  CHECK(pi_vd(two, perm("21"), 2).empty());

  // Unreachable type.
  StarNetwork narrow = StarNetwork::build(3, {{1, 2}}, {});
  CHECK(pi_vd(narrow, perm("132"), 0).empty());

  // |Pi_{v,0}| <= 1 and |Pi_{e,0}| = 1 on a mixed sweep.
  for (int m = 1; m <= 3; ++m)
    for_each_interval_sequence(3, m, [&](const std::vector<Interval>& seq) {
      for_each_flag_vector(m, [&](const std::vector<bool>& flags) {
        auto f = try_build(3, seq, flags);
        if (!f) return;
        for (const Permutation& v : all_permutations(3)) CHECK(pi_vd(*f, v, 0).size() <= 1);
        CHECK(pi_vd(*f, Permutation::identity(3), 0).size() == 1);
      });
    });
}

TEST_CASE("deodhar width-2 special case") {
  std::vector<std::vector<int>> words = {{1},          {1, 1},       {1, 2},         {2, 1},
                                         {1, 2, 1},    {1, 2, 1, 2}, {2, 1, 3, 2},   {1, 3, 1, 3},
                                         {3, 2, 1, 2, 3}};
  for (const auto& word : words) {
    std::vector<Interval> seq;
    for (int i : word) seq.push_back(Interval{i, i + 1});
    StarNetwork f = StarNetwork::build(4, seq, std::vector<bool>(seq.size() - 1, false));
    HeckeElement network_side = represented_element(f);
    CHECK(network_side == subexpression_element(4, word));
    CHECK(network_side == product_of_reversal_kls(4, seq));
  }
}

TEST_CASE("render formats") {
  StarNetwork f = StarNetwork::build(4, {{2, 4}}, {});
  std::string ascii = render(f, RenderFormat::kAscii);
  // Wire 1 runs straight: no fan marks on its line.
  std::string line1;
  std::istringstream is(ascii);
  for (std::string line; std::getline(is, line);)
    if (line.rfind("1 ", 0) == 0) line1 = line;
  CHECK(line1.find('|') == std::string::npos);
  CHECK(ascii.find("x1") != std::string::npos);

  StarNetwork dense = StarNetwork::build(4, {{1, 3}, {2, 4}, {1, 3}}, {true, true});
  std::string dot = render(dense, RenderFormat::kDot);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("mult=2") != std::string::npos);
  CHECK(dot.find("s1") != std::string::npos);

  std::string tikz = render(dense, RenderFormat::kTikz);
  CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
  CHECK(tikz.find("(2)") != std::string::npos);
  CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);

  std::string svg = render(dense, RenderFormat::kSvg);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  // With a family: paths are drawn.
  const PathFamily fam = all_families(dense).front();
  std::string with_paths = render(dense, RenderFormat::kTikz, &fam);
  CHECK(with_paths.find("% path 1") != std::string::npos);
  CHECK(render(dense, RenderFormat::kAscii, &fam).find("path 1:") != std::string::npos);

  // Deterministic output.
  CHECK(render(dense, RenderFormat::kSvg) == svg);
  CHECK_THROWS_AS(parse_render_format("png"), std::invalid_argument);
}

TEST_CASE("network text and spec strings") {
  StarNetwork f = parse_network("n=4; [2,4] * [1,2] o [2,4] * [1,2]");
  CHECK(f.n() == 4);
  CHECK(f.m() == 4);
  CHECK(f.condensed() == std::vector<bool>{true, false, true});
  CHECK(network_spec_string(f) == "n=4; [2,4] * [1,2] o [2,4] * [1,2]");
  StarNetwork round = parse_network(network_spec_string(f));
  CHECK(round.intervals() == f.intervals());
  CHECK_THROWS_AS(parse_network("n=4 [1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_network("n=4;"), std::invalid_argument);
  CHECK_THROWS_AS(parse_network("n=4; [1,2] x [1,2]"), std::invalid_argument);
}
