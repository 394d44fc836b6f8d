#pragma once

#include <string>
#include <vector>

#include "dirnet/digraph.hpp"

namespace dirnet {

// Orthonormal coordinate frame in which the dominated norm is evaluated. ex and ey may form a
// reflection.
struct Frame {
  Point origin{0, 0};
  Point ex{1, 0};
  Point ey{0, 1};

  Point vector_to_local(Point d) const { return {dot(d, ex), dot(d, ey)}; }
  bool is_orthonormal(double tol = 1e-12) const;
  bool is_identity() const { return ex == Point{1, 0} && ey == Point{0, 1}; }
};

// The source with index `source` in the instance must reach the sink with index `sink`; the
// path's pieces along the listed ball-vertex directions are charged to this pair.
struct PairAssignment {
  int source = 0;
  int sink = 0;
  std::vector<int> classes;
};

struct Certificate {
  Norm norm = Norm::euclidean();  // dominated polygonal norm, evaluated in `frame`
  Frame frame;
  std::vector<PairAssignment> assignments;
  double bound = 0.0;
};

// Least total length, in norm n, of the pieces along the given ball vertices in any polygonal
// path from a to b. Vectors are in the norm's own coordinates.
double pair_class_bound(Point a, Point b, const Norm& n, const std::vector<int>& class_vertices);

struct CertificateCheck {
  bool valid = false;
  double bound = 0.0;  // recomputed; meaningful only when valid
  std::string reason;  // why the certificate was rejected
};

// Checks the certificate against the instance's target norm and recomputes its bound.
CertificateCheck verify_certificate(const Instance& inst, const Certificate& cert);

struct QuadrilateralCertificate {
  Instance rescaled;          // terminals pushed out along their rays to the circumscribing rectangle
  Certificate certificate;    // valid for `rescaled`
  double star_length = 0.0;   // |a1 a2| + |b1 b2| of the original quadrilateral
  std::string note;
};

// a1, a2 are sources and b1, b2 sinks of a convex quadrilateral a1 b1 a2 b2.
QuadrilateralCertificate certify_quadrilateral(Point a1, Point a2, Point b1, Point b2);

Certificate certify_hexagon(double scale = 1.0);

struct CertifiedInstance {
  std::string name;
  Instance instance;
  Certificate certificate;
  double optimum = 0.0;
};

// Cross, diamond and hexagon instances in the L1 and small hexagonal norms.
std::vector<CertifiedInstance> certify_l1_instances();

}  // namespace dirnet
