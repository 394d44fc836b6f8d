#pragma once

#include <string>
#include <vector>

#include "dirnet/local_structure.hpp"

namespace dirnet {

// Built-in configurations. Unless stated otherwise terminals lie on the unit circle around the origin.

// Sources at angles theta/2 and 180 + theta/2 degrees, sinks at 180 - theta/2 and -theta/2: a
// rectangle with unit half-diagonals whose diagonals meet at angle theta.
Instance rectangle_instance(double theta_degrees);

// Alternating regular hexagon: sources at 0, 120, 240 degrees, sinks opposite them.
Instance hexagon_instance(double scale = 1.0);
GeoDigraph hexagon_star(double scale = 1.0);
GeoDigraph hexagon_cycle(double scale = 1.0);

// Three sources pairwise 120 degrees apart, two antipodal sinks separating one source from the others.
Instance degree5_instance();
GeoDigraph degree5_star();

// Star with one Steiner point at the origin; each direction is (polar angle in degrees, incoming?).
GeoDigraph star_network(const std::vector<std::pair<double, bool>>& directions);

struct StarFixture {
  std::string name;
  GeoDigraph network;
  int steiner_id = 0;
  SteinerCase expected = SteinerCase::Rejected;
};

std::vector<StarFixture> star_fixtures();

struct NamedInstance {
  std::string name;
  Instance instance;
};

// Rectangle, hexagon, degree-5 and the three polygonal-norm instances.
std::vector<NamedInstance> instance_fixtures();

// A = {e1, -e1}, B = {e2, -e2} in the L1 norm.
Instance l1_cross_instance();
// A = B = {e1, -e1, e2, -e2} in the L1 norm.
Instance l1_diamond_instance();
// The alternating hexagon measured in the small hexagonal norm.
Instance hexh_hexagon_instance();

}  // namespace dirnet
