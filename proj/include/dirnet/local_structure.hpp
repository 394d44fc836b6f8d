#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dirnet/digraph.hpp"

namespace dirnet {

struct Tolerances {
  double angle = 1e-6;  // radians
  double length = 1e-9;
};

// Minimizer of the summed Euclidean distance to a, b, c.
Point fermat_point(Point a, Point b, Point c);

enum class SteinerCase { Deg12, Deg21, Deg22Alternating, Deg22NonAlternating, Deg23, Deg32, Deg33, Rejected };

struct Classification {
  SteinerCase kind = SteinerCase::Rejected;
  std::string reason;  // set only for Rejected
  std::string tag() const;
};

struct IncidentDirection {
  Edge edge;
  int neighbor = 0;
  bool incoming = false;
  Point direction;     // unit vector from the node toward the neighbor
  double polar = 0.0;  // polar angle of `direction` in [0, 2*pi)
};

struct AngleReport {
  int node = 0;
  std::vector<IncidentDirection> directions;  // sorted by polar angle
  std::vector<std::vector<double>> pairwise;  // radians in [0, pi]
};

AngleReport angle_report(const GeoDigraph& g, int id, double tol_len = 1e-9);

Classification classify_steiner(const GeoDigraph& g, int id, Tolerances tol = {});

struct AngleViolation {
  Edge first;
  Edge second;
  std::string rule;
  double angle = 0.0;    // radians
  double deficit = 0.0;  // radians below 120 degrees
};

std::vector<AngleViolation> check_angle_lower_bounds(const GeoDigraph& g, int id, Tolerances tol = {});

// Replaces a sharp pair of edges at v by a Fermat star. The pair may be two in-edges, two
// out-edges, or an in/out pair at a non-sink with one out-edge or a non-source with one in-edge.
GeoDigraph shorten_ft(const GeoDigraph& g, int v, Edge e1, Edge e2, Tolerances tol = {});

// (3,3) point whose in/out directions make an angle below 60 degrees: rebuild as a triangle of
// three Steiner points on the lines joining each source to its nearly opposite sink.
GeoDigraph shorten_33(const GeoDigraph& g, int s, Tolerances tol = {});

// (3,2) or (2,3) point whose two single-side edges are not collinear: reroute through the point
// where the chord between their endpoints crosses an opposite edge.
GeoDigraph shorten_32(const GeoDigraph& g, int s, Tolerances tol = {});

struct FullSteinerTree {
  std::vector<Point> points;
  std::vector<bool> steiner;
  std::vector<std::pair<int, int>> edges;
  double length() const;
};

struct Segment {
  Point a;
  Point b;
  double length() const { return dist(a, b); }
};

struct Decomposition {
  std::vector<FullSteinerTree> trees;
  std::vector<Segment> segments;
  double total_length() const;
};

Decomposition decompose_full_components(const GeoDigraph& g, Tolerances tol = {});

struct SmallSteinerTree {
  std::vector<Point> points;
  std::vector<std::pair<int, int>> edges;
  std::optional<Point> steiner;
  double length() const;
};

SmallSteinerTree melzak_three_terminals(Point a, Point b, Point c);

}  // namespace dirnet
