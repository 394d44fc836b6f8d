#include <random>

#include "doctest.h"
#include "dirnet/digraph.hpp"
#include "dirnet/fixtures.hpp"

using namespace dirnet;

namespace {

GeoDigraph chain(Point a, Point s, Point b) {
  return GeoDigraph({{0, NodeRole::Source, a}, {1, NodeRole::Steiner, s}, {2, NodeRole::Sink, b}}, {{0, 1}, {1, 2}});
}

// Random network on random terminals: every source feeds a random Steiner point, Steiner points
// form a chain, the last one feeds every sink, plus a few random extra edges.
GeoDigraph random_network(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_int_distribution<int> count(1, 3);
  const int ns = count(rng), nt = count(rng), k = count(rng);
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int id = 0;
  for (int i = 0; i < ns; ++i) nodes.push_back({id++, NodeRole::Source, {u(rng), u(rng)}});
  for (int i = 0; i < nt; ++i) nodes.push_back({id++, NodeRole::Sink, {u(rng), u(rng)}});
  const int first = id;
  for (int i = 0; i < k; ++i) nodes.push_back({id++, NodeRole::Steiner, {u(rng), u(rng)}});
  std::uniform_int_distribution<int> pick(first, id - 1);
  for (int i = 0; i < ns; ++i) edges.push_back({i, pick(rng)});
  for (int i = first; i + 1 < id; ++i) edges.push_back({i, i + 1});
  for (int i = first; i + 1 < id; ++i) edges.push_back({i + 1, i});
  for (int i = 0; i < nt; ++i) edges.push_back({id - 1, ns + i});
  std::uniform_int_distribution<int> any(0, id - 1);
  for (int extra = 0; extra < 3; ++extra) {
    const Edge e{any(rng), any(rng)};
    if (e.tail != e.head && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return GeoDigraph(nodes, edges);
}

}  // namespace

TEST_CASE("construction rejects malformed graphs") {
  CHECK_THROWS_AS(GeoDigraph({{0, NodeRole::Source, {0, 0}}}, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(GeoDigraph({{0, NodeRole::Source, {0, 0}}, {1, NodeRole::Sink, {1, 0}}}, {{0, 1}, {0, 1}}),
                  PreconditionError);
  CHECK_THROWS_AS(GeoDigraph({{0, NodeRole::Source, {0, 0}}}, {{0, 5}}), PreconditionError);
  CHECK_THROWS_AS(GeoDigraph({{0, NodeRole::Source, {0, 0}}, {0, NodeRole::Sink, {1, 0}}}, {}), PreconditionError);
  CHECK_THROWS_AS(GeoDigraph({{0, NodeRole::Source, {NAN, 0}}}, {}), PreconditionError);
  // Distinct nodes may share a point.
  CHECK_NOTHROW(GeoDigraph({{0, NodeRole::Source, {0, 0}}, {1, NodeRole::Sink, {0, 0}}}, {{0, 1}}));
}

TEST_CASE("degrees and adjacency") {
  const GeoDigraph g = hexagon_star();
  CHECK(g.degree(0) == DegreePair{3, 3});
  CHECK(g.in_edges(0).size() == 3);
  CHECK(g.out_edges(0).size() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.next_id() == 7);
}

TEST_CASE("reachability") {
  CHECK(is_ab_network(hexagon_star()));
  CHECK(is_ab_network(hexagon_cycle()));
  CHECK(is_ab_network(GeoDigraph({{0, NodeRole::SourceAndSink, {0, 0}}}, {})));
  const GeoDigraph split({{0, NodeRole::Source, {0, 0}},
                          {1, NodeRole::Source, {1, 0}},
                          {2, NodeRole::Sink, {0, 1}},
                          {3, NodeRole::Sink, {1, 1}}},
                         {{0, 2}, {1, 3}});
  CHECK_FALSE(is_ab_network(split));
}

TEST_CASE("length") {
  CHECK(length(hexagon_star(), Norm::euclidean()) == doctest::Approx(6).epsilon(1e-15));
  CHECK(length(GeoDigraph({{0, NodeRole::Source, {0, 0}}}, {}), Norm::l1()) == 0);
  const GeoDigraph cross({{0, NodeRole::Source, {1, 0}},
                          {1, NodeRole::Source, {-1, 0}},
                          {2, NodeRole::Sink, {0, 1}},
                          {3, NodeRole::Sink, {0, -1}},
                          {4, NodeRole::Steiner, {0, 0}}},
                         {{0, 4}, {1, 4}, {4, 2}, {4, 3}});
  CHECK(length(cross, Norm::l1()) == 4);
}

TEST_CASE("simplify removes dangling Steiner points and splices pass-through points") {
  const GeoDigraph dangling({{0, NodeRole::Source, {0, 0}}, {1, NodeRole::Sink, {2, 0}}, {2, NodeRole::Steiner, {1, 1}}},
                            {{0, 1}, {0, 2}});
  const GeoDigraph s1 = simplify(dangling);
  CHECK(s1.nodes().size() == 2);
  CHECK(s1.edges() == std::vector<Edge>{{0, 1}});

  const GeoDigraph c = chain({0, 0}, {1, 1}, {2, 0});
  const GeoDigraph s2 = simplify(c);
  CHECK(s2.nodes().size() == 2);
  CHECK(s2.has_edge(0, 2));
  CHECK(length(s2, Norm::euclidean()) < length(c, Norm::euclidean()));
  const GeoDigraph straight = chain({0, 0}, {1, 0}, {2, 0});
  CHECK(length(simplify(straight), Norm::euclidean()) == doctest::Approx(length(straight, Norm::euclidean())));

  const GeoDigraph star = hexagon_star();
  CHECK(structurally_equal(simplify(star), star));

  const GeoDigraph broken({{0, NodeRole::Source, {0, 0}}, {1, NodeRole::Sink, {1, 0}}}, {});
  CHECK_THROWS_AS(simplify(broken), PreconditionError);
}

TEST_CASE("simplify properties on random networks") {
  std::mt19937_64 rng(21);
  const std::vector<Norm> norms{Norm::euclidean(), Norm::l1(), Norm::hex_big(), Norm::hex_small(),
                                Norm::l1_theta(0.4)};
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const GeoDigraph g = random_network(rng);
    if (!is_ab_network(g)) continue;
    ++checked;
    const GeoDigraph s = simplify(g);
    CHECK(is_ab_network(s));
    CHECK(structurally_equal(simplify(s), s));
    for (const Node& n : s.nodes()) {
      if (n.role != NodeRole::Steiner) continue;
      const DegreePair d = s.degree(n.id);
      CHECK(d.indeg >= 1);
      CHECK(d.outdeg >= 1);
      CHECK(d.indeg + d.outdeg >= 3);
    }
    for (const Norm& n : norms) CHECK(length(s, n) <= length(g, n) + 1e-12);
  }
  CHECK(checked > 100);
}

TEST_CASE("steiner cap") {
  CHECK(steiner_cap(2, 2) == 4);
  CHECK(steiner_cap(1, 1) == 2);
  CHECK(steiner_cap(3, 2) == 5);
  CHECK(steiner_cap(3, 3, 0.5) == 3);
  CHECK_THROWS_AS(steiner_cap(0, 1), PreconditionError);
}

TEST_CASE("convex hull check") {
  CHECK(in_convex_hull_check(hexagon_star()));
  std::vector<Node> nodes = hexagon_star().nodes();
  nodes[0].pos = {10, 10};
  CHECK_FALSE(in_convex_hull_check(GeoDigraph(nodes, hexagon_star().edges())));
  // Midpoint of the hull edge between the terminals at 0 and 60 degrees.
  nodes[0].pos = 0.5 * (polar(0) + polar(kPi / 3));
  CHECK(in_convex_hull_check(GeoDigraph(nodes, hexagon_star().edges())));
  // Collinear terminals: the hull is a segment.
  const GeoDigraph line = chain({0, 0}, {1, 0}, {2, 0});
  CHECK(in_convex_hull_check(line));
  CHECK_FALSE(in_convex_hull_check(chain({0, 0}, {1, 0.1}, {2, 0})));
}

TEST_CASE("broken edges preserve polygonal length and reachability") {
  std::mt19937_64 rng(4);
  for (const Norm& n : {Norm::l1(), Norm::l1_theta(0.9), Norm::hex_big(), Norm::hex_small()}) {
    for (int trial = 0; trial < 50; ++trial) {
      const GeoDigraph g = random_network(rng);
      const GeoDigraph b = with_broken_edges(g, n);
      CHECK(std::abs(length(b, n) - length(g, n)) <= 1e-10);
      CHECK(is_ab_network(b) == is_ab_network(g));
    }
  }
}

TEST_CASE("reversal swaps roles and directions") {
  const GeoDigraph r = reversed(hexagon_star());
  CHECK(r.degree(0) == DegreePair{3, 3});
  CHECK(r.node(1).role == NodeRole::Sink);
  CHECK(r.has_edge(0, 1));
  CHECK(is_ab_network(r));
}

TEST_CASE("merging close nodes") {
  const GeoDigraph g({{0, NodeRole::Source, {0, 0}},
                      {1, NodeRole::Steiner, {1e-9, 0}},
                      {2, NodeRole::Steiner, {1, 0}},
                      {3, NodeRole::Sink, {2, 0}},
                      {4, NodeRole::Sink, {1, 1}}},
                     {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  const GeoDigraph m = merge_close_nodes(g, 1e-7);
  CHECK(m.nodes().size() == 4);
  CHECK(m.has_edge(0, 2));
  CHECK(is_ab_network(m));
}

TEST_CASE("terminal layout merges shared points") {
  const Instance inst{{{0, 0}, {1, 0}, {0, 0}}, {{1, 0}, {2, 0}}, Norm::euclidean()};
  const TerminalLayout t = layout_terminals(inst);
  REQUIRE(t.positions.size() == 3);
  CHECK(t.roles[0] == NodeRole::Source);
  CHECK(t.roles[1] == NodeRole::SourceAndSink);
  CHECK(t.roles[2] == NodeRole::Sink);
}

TEST_CASE("role names") {
  for (NodeRole r : {NodeRole::Source, NodeRole::Sink, NodeRole::SourceAndSink, NodeRole::Steiner})
    CHECK(parse_role(role_name(r)) == r);
  CHECK_THROWS_AS(parse_role("terminal"), ParseError);
}
