#include "dirnet/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dirnet/fixtures.hpp"

namespace dirnet {

bool Frame::is_orthonormal(double tol) const {
  return std::abs(dot(ex, ex) - 1) <= tol && std::abs(dot(ey, ey) - 1) <= tol && std::abs(dot(ex, ey)) <= tol;
}

double pair_class_bound(Point a, Point b, const Norm& n, const std::vector<int>& class_vertices) {
  require_finite(a, "pair_class_bound");
  require_finite(b, "pair_class_bound");
  const auto& verts = n.ball_vertices();
  if (verts.empty()) throw PreconditionError("pair_class_bound: norm has no ball vertices");
  if (class_vertices.empty()) throw PreconditionError("pair_class_bound: empty direction class");
  std::vector<bool> in_class(verts.size(), false);
  for (int c : class_vertices) {
    if (c < 0 || c >= static_cast<int>(verts.size()))
      throw PreconditionError("pair_class_bound: direction " + std::to_string(c) + " is not a ball vertex");
    in_class[c] = true;
  }
  // A path's displacement b - a is a nonnegative combination of ball vertices whose coefficients
  // are the piece lengths. A functional equal to 1 on the class and <= 0 elsewhere therefore
  // bounds the class total from below; the best such functional has two tight constraints.
  const Point d = b - a;
  bool found = false;
  double best = 0.0;
  for (int i : class_vertices) {
    for (int j = 0; j < static_cast<int>(verts.size()); ++j) {
      if (j == i) continue;
      const Point p = verts[i], q = verts[j];
      const double det = cross(p, q);
      if (std::abs(det) < 1e-12) continue;
      const double rq = in_class[j] ? 1.0 : 0.0;
      // Solve f.p = 1, f.q = rq.
      const Point f{(1.0 * q.y - rq * p.y) / det, (rq * p.x - 1.0 * q.x) / det};
      bool ok = true;
      for (std::size_t k = 0; k < verts.size() && ok; ++k) {
        const double v = dot(f, verts[k]);
        ok = in_class[k] ? std::abs(v - 1.0) <= 1e-12 : v <= 1e-12;
      }
      if (!ok) continue;
      found = true;
      best = std::max(best, dot(f, d));
    }
  }
  if (!found) throw PreconditionError("pair_class_bound: no functional separates the direction class");
  return std::max(0.0, best);
}

CertificateCheck verify_certificate(const Instance& inst, const Certificate& cert) {
  for (const PairAssignment& pa : cert.assignments) {
    if (pa.source < 0 || pa.source >= static_cast<int>(inst.sources.size()) || pa.sink < 0 ||
        pa.sink >= static_cast<int>(inst.sinks.size()))
      throw PreconditionError("verify_certificate: assignment refers to a missing terminal");
    if (pa.classes.empty()) throw PreconditionError("verify_certificate: assignment with no direction class");
    for (int c : pa.classes)
      if (c < 0 || c >= static_cast<int>(cert.norm.ball_vertices().size()))
        throw PreconditionError("verify_certificate: direction class " + std::to_string(c) + " is not a ball vertex");
  }
  CertificateCheck out;
  if (!cert.norm.is_polygonal()) {
    out.reason = "dominated norm is not polygonal";
    return out;
  }
  if (!cert.frame.is_orthonormal()) {
    out.reason = "frame is not orthonormal";
    return out;
  }
  const bool same = cert.norm == inst.norm && cert.frame.is_identity();
  if (!same && !is_proven_dominance(cert.norm, inst.norm)) {
    out.reason = "no proven dominance " + cert.norm.to_string() + " <= " + inst.norm.to_string();
    return out;
  }
  std::set<int> used;
  for (const PairAssignment& pa : cert.assignments)
    for (int c : pa.classes)
      if (!used.insert(c).second) {
        out.reason = "direction class " + std::to_string(c) + " assigned twice";
        return out;
      }
  double total = 0.0, scale = 1.0;
  for (const PairAssignment& pa : cert.assignments) {
    const Point a = cert.frame.vector_to_local(inst.sources[pa.source] - cert.frame.origin);
    const Point b = cert.frame.vector_to_local(inst.sinks[pa.sink] - cert.frame.origin);
    total += pair_class_bound(a, b, cert.norm, pa.classes);
    scale = std::max(scale, euclid(b - a));
  }
  if (cert.bound > total + 1e-12 * scale) {
    out.reason = "stated bound exceeds the recomputed bound";
    return out;
  }
  out.valid = true;
  out.bound = total;
  return out;
}

QuadrilateralCertificate certify_quadrilateral(Point a1, Point a2, Point b1, Point b2) {
  for (Point p : {a1, a2, b1, b2}) require_finite(p, "certify_quadrilateral");
  // Diagonals a1a2 and b1b2 must cross at interior points of both.
  const Point u = a2 - a1, v = b2 - b1, w = b1 - a1;
  const double den = cross(u, v);
  if (std::abs(den) <= 1e-12 * euclid(u) * euclid(v))
    throw PreconditionError("certify_quadrilateral: diagonals are parallel or degenerate");
  const double s = cross(w, v) / den, t = cross(w, u) / den;
  if (!(s > 0 && s < 1 && t > 0 && t < 1))
    throw PreconditionError("certify_quadrilateral: a1 b1 a2 b2 is not a convex quadrilateral");
  const Point o = a1 + s * u;
  const double radius = std::max({dist(o, a1), dist(o, a2), dist(o, b1), dist(o, b2)});

  QuadrilateralCertificate out;
  auto push = [&](Point p) { return o + radius * unit(p - o); };
  out.rescaled = {{push(a1), push(a2)}, {push(b1), push(b2)}, Norm::euclidean()};

  // Axes bisect the angles between the diagonals, with a1 in the open upper-right quadrant.
  Frame f;
  f.origin = o;
  f.ex = unit(unit(a1 - o) + unit(b2 - o));
  f.ey = {-f.ex.y, f.ex.x};
  if (dot(a1 - o, f.ey) < 0) f.ey = -1.0 * f.ey;
  const Point la = f.vector_to_local(unit(a1 - o));
  const double phi = std::atan2(la.y, la.x);

  Certificate& c = out.certificate;
  c.norm = Norm::l1_theta(phi);
  c.frame = f;
  // Vertex order of the rotated L1 ball: +x, +y, -x, -y.
  c.assignments = {{0, 0, {2}}, {1, 1, {0}}, {1, 0, {1}}, {0, 1, {3}}};
  c.bound = verify_certificate(out.rescaled, c).bound;
  out.star_length = dist(a1, a2) + dist(b1, b2);
  out.note = "bound certifies the rescaled terminals; the star through the diagonal crossing, of length " +
             format_shortest(out.star_length) +
             ", stays shortest when terminals move inward along their rays (transferred, not recomputed)";
  return out;
}

Certificate certify_hexagon(double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) throw PreconditionError("certify_hexagon: scale must be positive");
  Certificate c;
  c.norm = Norm::hex_big();
  c.assignments = {{0, 0, {2, 3}}, {1, 1, {4, 5}}, {2, 2, {0, 1}}};
  c.bound = verify_certificate(hexagon_instance(scale), c).bound;
  return c;
}

std::vector<CertifiedInstance> certify_l1_instances() {
  std::vector<CertifiedInstance> out;

  const Instance cross_inst = l1_cross_instance();
  Certificate cross_cert =
      certify_quadrilateral(cross_inst.sources[0], cross_inst.sources[1], cross_inst.sinks[0], cross_inst.sinks[1])
          .certificate;
  cross_cert.bound = verify_certificate(cross_inst, cross_cert).bound;
  out.push_back({"l1_cross", cross_inst, cross_cert, 4.0});

  // Each terminal is both a source and a sink; each opposite pair uses one axis direction.
  const Instance diamond = l1_diamond_instance();
  Certificate dc;
  dc.norm = Norm::l1();
  dc.assignments = {{0, 1, {2}}, {1, 0, {0}}, {2, 3, {3}}, {3, 2, {1}}};
  dc.bound = verify_certificate(diamond, dc).bound;
  out.push_back({"l1_diamond", diamond, dc, 8.0});

  const Instance hex = hexh_hexagon_instance();
  Certificate hc = certify_hexagon(1.0);
  hc.bound = verify_certificate(hex, hc).bound;
  out.push_back({"hexh_hexagon", hex, hc, 6.0});
  return out;
}

}  // namespace dirnet
