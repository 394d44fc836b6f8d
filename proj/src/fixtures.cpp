#include "dirnet/fixtures.hpp"

namespace dirnet {

namespace {

Point at_degrees(double deg, double r = 1.0) { return polar(deg * kPi / 180.0, r); }

}  // namespace

Instance rectangle_instance(double theta_degrees) {
  if (!(theta_degrees > 0 && theta_degrees < 180)) throw PreconditionError("rectangle_instance: angle outside (0, 180)");
  const double h = theta_degrees / 2;
  return {{at_degrees(h), at_degrees(180 + h)}, {at_degrees(180 - h), at_degrees(-h)}, Norm::euclidean()};
}

Instance hexagon_instance(double scale) {
  if (!(scale > 0)) throw PreconditionError("hexagon_instance: scale must be positive");
  Instance inst;
  for (int i = 0; i < 3; ++i) {
    inst.sources.push_back(at_degrees(120.0 * i, scale));
    inst.sinks.push_back(at_degrees(120.0 * i + 180, scale));
  }
  return inst;
}

GeoDigraph star_network(const std::vector<std::pair<double, bool>>& directions) {
  std::vector<Node> nodes{{0, NodeRole::Steiner, {0, 0}}};
  std::vector<Edge> edges;
  int id = 1;
  for (const auto& [deg, incoming] : directions) {
    nodes.push_back({id, incoming ? NodeRole::Source : NodeRole::Sink, at_degrees(deg)});
    edges.push_back(incoming ? Edge{id, 0} : Edge{0, id});
    ++id;
  }
  return GeoDigraph(std::move(nodes), std::move(edges));
}

GeoDigraph hexagon_star(double scale) {
  const Instance inst = hexagon_instance(scale);
  std::vector<Node> nodes{{0, NodeRole::Steiner, {0, 0}}};
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    nodes.push_back({1 + i, NodeRole::Source, inst.sources[i]});
    nodes.push_back({4 + i, NodeRole::Sink, inst.sinks[i]});
    edges.push_back({1 + i, 0});
    edges.push_back({0, 4 + i});
  }
  return GeoDigraph(std::move(nodes), std::move(edges));
}

GeoDigraph hexagon_cycle(double scale) {
  // Around the hexagon: a1 (0) -> b3 (60) -> a2 (120) -> b1 (180) -> a3 (240) -> b2 (300) -> a1.
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    nodes.push_back({i, i % 2 == 0 ? NodeRole::Source : NodeRole::Sink, at_degrees(60.0 * i, scale)});
    edges.push_back({i, (i + 1) % 6});
  }
  return GeoDigraph(std::move(nodes), std::move(edges));
}

Instance degree5_instance() {
  return {{at_degrees(90), at_degrees(210), at_degrees(330)}, {at_degrees(180), at_degrees(0)}, Norm::euclidean()};
}

GeoDigraph degree5_star() { return star_network({{90, true}, {210, true}, {330, true}, {180, false}, {0, false}}); }

std::vector<StarFixture> star_fixtures() {
  std::vector<StarFixture> out;
  out.push_back({"star12", star_network({{90, true}, {210, false}, {330, false}}), 0, SteinerCase::Deg12});
  out.push_back({"star21", star_network({{90, false}, {210, true}, {330, true}}), 0, SteinerCase::Deg21});
  out.push_back({"star22_alternating", star_network({{115, true}, {295, true}, {60, false}, {240, false}}), 0,
                 SteinerCase::Deg22Alternating});
  out.push_back({"star22_nonalternating", star_network({{117.5, true}, {242.5, true}, {297.5, false}, {62.5, false}}), 0,
                 SteinerCase::Deg22NonAlternating});
  out.push_back({"star23", star_network({{90, false}, {210, false}, {330, false}, {174, true}, {-6, true}}), 0,
                 SteinerCase::Deg23});
  out.push_back({"star32", star_network({{90, true}, {210, true}, {330, true}, {174, false}, {-6, false}}), 0,
                 SteinerCase::Deg32});
  out.push_back({"star33_hexagon", hexagon_star(), 0, SteinerCase::Deg33});
  return out;
}

Instance l1_cross_instance() { return {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}, Norm::l1()}; }

Instance l1_diamond_instance() {
  const std::vector<Point> pts{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  return {pts, pts, Norm::l1()};
}

Instance hexh_hexagon_instance() {
  Instance inst = hexagon_instance();
  inst.norm = Norm::hex_small();
  return inst;
}

std::vector<NamedInstance> instance_fixtures() {
  return {{"rectangle_30", rectangle_instance(30)},  {"hexagon", hexagon_instance()},
          {"degree5", degree5_instance()},           {"l1_cross", l1_cross_instance()},
          {"l1_diamond", l1_diamond_instance()},     {"hexh_hexagon", hexh_hexagon_instance()}};
}

}  // namespace dirnet
