#include <random>

#include "doctest.h"
#include "dirnet/certificates.hpp"
#include "dirnet/fixtures.hpp"
#include "dirnet/solver.hpp"

using namespace dirnet;

namespace {

Instance rotated(const Instance& inst, double angle) {
  Instance out = inst;
  for (Point& p : out.sources) p = rotate(p, angle);
  for (Point& p : out.sinks) p = rotate(p, angle);
  return out;
}

// Random admissible networks: enumerated topologies with Steiner points scattered near the terminals.
std::vector<GeoDigraph> random_networks(const Instance& inst, int count, std::mt19937_64& rng) {
  const TerminalLayout layout = layout_terminals(inst);
  std::vector<Topology> ts;
  for (int k = 0; k <= 1; ++k)
    for_each_topology(layout.roles, k, false, [&](const Topology& t) { ts.push_back(t); });
  std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<GeoDigraph> out;
  for (int i = 0; i < count; ++i) {
    const Topology& t = ts[pick(rng)];
    std::vector<Point> steiner;
    for (int j = 0; j < t.steiner_count; ++j) steiner.push_back({u(rng), u(rng)});
    out.push_back(realize(t, layout.positions, steiner));
  }
  return out;
}

}  // namespace

TEST_CASE("pair class bound examples") {
  for (double d : {15.0, 30.0, 60.0}) {
    const double th = deg(d);
    const Norm n = Norm::l1_theta(th);
    const Point a1{std::cos(th), std::sin(th)}, b1{-std::cos(th), std::sin(th)};
    CHECK(pair_class_bound(a1, b1, n, {2}) == doctest::Approx(2 * std::cos(th) * std::cos(th)).epsilon(1e-14));
    CHECK(pair_class_bound(a1, b1, n, {0}) == 0);
    CHECK(pair_class_bound(a1, a1, n, {2}) == 0);
  }
  const Point a1{1, 0}, b1{-1, 0};
  CHECK(pair_class_bound(a1, b1, Norm::hex_big(), {2, 3}) == doctest::Approx(2).epsilon(1e-14));
  CHECK_THROWS_AS(pair_class_bound(a1, b1, Norm::hex_big(), {6}), PreconditionError);
  CHECK_THROWS_AS(pair_class_bound(a1, b1, Norm::hex_big(), {}), PreconditionError);
  CHECK_THROWS_AS(pair_class_bound(a1, b1, Norm::euclidean(), {0}), PreconditionError);
  // Opposite vertices cannot be separated from the rest by one functional.
  CHECK_THROWS_AS(pair_class_bound(a1, b1, Norm::l1(), {0, 2}), PreconditionError);
}

TEST_CASE("pair class bound is a lower bound for random polygonal paths") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  const Norm n = Norm::hex_big();
  for (int trial = 0; trial < 200; ++trial) {
    // A random path, broken into ball-vertex pieces; total the pieces along vertices 0 and 1.
    Point at{u(rng), u(rng)};
    const Point start = at;
    double class_total = 0;
    for (int step = 0; step < 4; ++step) {
      const Point next{u(rng), u(rng)};
      if (next == at) continue;
      const BrokenSegment b = broken_segment(at, next, n);
      if (b.first <= 1) class_total += b.alpha;
      if (b.second <= 1) class_total += b.beta;
      at = next;
    }
    CHECK(pair_class_bound(start, at, n, {0, 1}) <= class_total + 1e-12);
  }
}

TEST_CASE("rectangle and hexagon certificates") {
  const Instance r = rectangle_instance(30);
  const QuadrilateralCertificate q = certify_quadrilateral(r.sources[0], r.sources[1], r.sinks[0], r.sinks[1]);
  const CertificateCheck c = verify_certificate(r, q.certificate);
  CHECK(c.valid);
  CHECK(c.bound == doctest::Approx(4).epsilon(1e-14));
  CHECK(q.star_length == doctest::Approx(4).epsilon(1e-14));

  const Instance sq = rectangle_instance(90);
  CHECK(certify_quadrilateral(sq.sources[0], sq.sources[1], sq.sinks[0], sq.sinks[1]).certificate.bound ==
        doctest::Approx(4).epsilon(1e-14));

  const Certificate h = certify_hexagon();
  const CertificateCheck hc = verify_certificate(hexagon_instance(), h);
  CHECK(hc.valid);
  CHECK(hc.bound == doctest::Approx(6).epsilon(1e-14));
  CHECK(certify_hexagon(2).bound == doctest::Approx(12).epsilon(1e-14));
  CHECK_THROWS_AS(certify_hexagon(0), PreconditionError);
}

TEST_CASE("invalid certificates") {
  Certificate h = certify_hexagon();
  h.assignments[1].classes = {2, 5};
  CHECK_FALSE(verify_certificate(hexagon_instance(), h).valid);

  Certificate over = certify_hexagon();
  over.bound = 6.5;
  CHECK_FALSE(verify_certificate(hexagon_instance(), over).valid);

  Certificate skew = certify_hexagon();
  skew.frame.ex = {1, 0.1};
  CHECK_FALSE(verify_certificate(hexagon_instance(), skew).valid);

  // The large hexagonal norm is not below itself in a rotated frame.
  Instance hexbig = hexagon_instance();
  hexbig.norm = Norm::hex_big();
  Certificate turned = certify_hexagon();
  turned.frame.ex = polar(0.2);
  turned.frame.ey = polar(0.2 + kPi / 2);
  CHECK_FALSE(verify_certificate(hexbig, turned).valid);
  CHECK(verify_certificate(hexbig, certify_hexagon()).valid);

  Certificate l1 = certify_hexagon();
  l1.norm = Norm::l1();
  l1.assignments = {{0, 0, {2}}};
  CHECK_FALSE(verify_certificate(hexagon_instance(), l1).valid);

  Certificate bad_index = certify_hexagon();
  bad_index.assignments[0].source = 9;
  CHECK_THROWS_AS(verify_certificate(hexagon_instance(), bad_index), PreconditionError);
}

TEST_CASE("quadrilateral certificate on a generic quadrilateral") {
  const Point a1{1.3, 0.4}, a2{-0.7, -0.2}, b1{-0.2, 0.9}, b2{0.4, -1.1};
  const QuadrilateralCertificate q = certify_quadrilateral(a1, a2, b1, b2);
  CHECK(verify_certificate(q.rescaled, q.certificate).valid);
  // On the rescaled terminals the certified bound equals the star length.
  double star = 0;
  for (const auto& list : {q.rescaled.sources, q.rescaled.sinks}) star += dist(list[0], list[1]);
  CHECK(q.certificate.bound == doctest::Approx(star).epsilon(1e-12));
  CHECK(q.star_length == doctest::Approx(dist(a1, a2) + dist(b1, b2)).epsilon(1e-14));
  CHECK_FALSE(q.note.empty());
  const SolveResult s = solve({{a1, a2}, {b1, b2}, Norm::euclidean()}, {.k_max = 2});
  CHECK(s.length == doctest::Approx(q.star_length).epsilon(1e-9));

  CHECK_THROWS_AS(certify_quadrilateral(a1, b1, a2, b2), PreconditionError);
  CHECK_THROWS_AS(certify_quadrilateral({0, 0}, {1, 0}, {2, 0}, {3, 0}), PreconditionError);
}

TEST_CASE("certified polygonal-norm instances") {
  const auto all = certify_l1_instances();
  REQUIRE(all.size() == 3);
  for (const CertifiedInstance& c : all) {
    CAPTURE(c.name);
    const CertificateCheck v = verify_certificate(c.instance, c.certificate);
    CHECK(v.valid);
    CHECK(v.bound == doctest::Approx(c.optimum).epsilon(1e-12));
  }
  CHECK(all[0].instance.norm == Norm::l1());
  CHECK(all[1].instance.norm == Norm::l1());
  CHECK(all[2].instance.norm == Norm::hex_small());
}

TEST_CASE("certificate soundness on random networks") {
  std::mt19937_64 rng(23);
  std::vector<std::pair<Instance, Certificate>> cases;
  const Instance r = rectangle_instance(30);
  cases.push_back({r, certify_quadrilateral(r.sources[0], r.sources[1], r.sinks[0], r.sinks[1]).certificate});
  cases.push_back({hexagon_instance(), certify_hexagon()});
  for (const CertifiedInstance& c : certify_l1_instances()) cases.push_back({c.instance, c.certificate});
  for (const auto& [inst, cert] : cases) {
    const double bound = verify_certificate(inst, cert).bound;
    for (const GeoDigraph& g : random_networks(inst, 1000, rng)) {
      REQUIRE(is_ab_network(g));
      CHECK(length(g, inst.norm) >= bound - 1e-9);
    }
  }
}

TEST_CASE("certificate bound is invariant under rigid motions") {
  for (double phi : {0.3, 1.1, 2.5}) {
    const Instance r = rotated(rectangle_instance(40), phi);
    const QuadrilateralCertificate q = certify_quadrilateral(r.sources[0], r.sources[1], r.sinks[0], r.sinks[1]);
    CHECK(q.certificate.bound == doctest::Approx(4).epsilon(1e-13));
    CHECK(q.certificate.norm.theta() == doctest::Approx(deg(20)).epsilon(1e-12));

    Certificate h = certify_hexagon();
    h.frame.ex = polar(phi);
    h.frame.ey = polar(phi + kPi / 2);
    const CertificateCheck c = verify_certificate(rotated(hexagon_instance(), phi), h);
    CHECK(c.valid);
    CHECK(c.bound == doctest::Approx(6).epsilon(1e-13));
  }
}
