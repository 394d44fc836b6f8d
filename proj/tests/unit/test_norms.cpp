#include <random>

#include "doctest.h"
#include "dirnet/norms.hpp"
#include "oracles.hpp"

using namespace dirnet;

namespace {
const double s3 = std::sqrt(3.0);

std::vector<Norm> all_norms() {
  return {Norm::euclidean(), Norm::l1(), Norm::l1_theta(deg(30)), Norm::l1_theta(deg(72.5)), Norm::hex_big(),
          Norm::hex_small()};
}
}  // namespace

TEST_CASE("norm values at hand-computed points") {
  CHECK(norm_eval({1, 0}, Norm::euclidean()) == doctest::Approx(1).epsilon(1e-15));
  CHECK(norm_eval({1, 1 / s3}, Norm::hex_big()) == doctest::Approx(1).epsilon(1e-15));
  CHECK(norm_eval({1, 1}, Norm::l1_theta(deg(60))) == doctest::Approx(0.5 + s3 / 2).epsilon(1e-15));
  CHECK(norm_eval({0, 1}, Norm::hex_small()) == doctest::Approx(2 / s3).epsilon(1e-15));
  CHECK(norm_eval({3, -4}, Norm::l1()) == 7);
  CHECK(norm_eval({0, 0}, Norm::hex_big()) == 0);
}

TEST_CASE("non-finite input is rejected") {
  for (const Norm& n : all_norms()) {
    CHECK_THROWS_AS(n({NAN, 0}), PreconditionError);
    CHECK_THROWS_AS(n({0, INFINITY}), PreconditionError);
  }
}

TEST_CASE("l1theta angle must lie in the open quarter turn") {
  CHECK_THROWS_AS(Norm::l1_theta(0), PreconditionError);
  CHECK_THROWS_AS(Norm::l1_theta(kPi / 2), PreconditionError);
  CHECK_NOTHROW(Norm::l1_theta(deg(1)));
}

TEST_CASE("ball vertices have unit norm, are centrally symmetric and counterclockwise") {
  for (const Norm& n : all_norms()) {
    const auto& v = n.ball_vertices();
    if (!n.is_polygonal()) {
      CHECK(v.empty());
      continue;
    }
    REQUIRE(v.size() % 2 == 0);
    const std::size_t h = v.size() / 2;
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(n(v[i]) == doctest::Approx(1).epsilon(1e-12));
      CHECK(v[(i + h) % v.size()].x == doctest::Approx(-v[i].x));
      CHECK(v[(i + h) % v.size()].y == doctest::Approx(-v[i].y));
      CHECK(cross(v[i], v[(i + 1) % v.size()]) > 0);
    }
  }
  const Norm hex = Norm::hex_big(), l1t = Norm::l1_theta(deg(30));
  const auto& hv = hex.ball_vertices();
  CHECK(hv[1].y == doctest::Approx(2 / s3));
  const auto& lt = l1t.ball_vertices();
  CHECK(lt[0].x == doctest::Approx(1 / std::cos(deg(30))));
  CHECK(lt[1].y == doctest::Approx(1 / std::sin(deg(30))));
}

TEST_CASE("closed forms agree with the max-of-functionals descriptions") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 2000; ++i) {
    const Point p{u(rng), u(rng)};
    CHECK(Norm::hex_big()(p) == doctest::Approx(oracle::hex_big(p)).epsilon(1e-13));
    CHECK(Norm::hex_small()(p) == doctest::Approx(oracle::hex_small(p)).epsilon(1e-13));
    CHECK(Norm::l1_theta(deg(40))(p) == doctest::Approx(oracle::l1_theta(p, deg(40))).epsilon(1e-13));
  }
}

TEST_CASE("abs-term form matches the norm") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5, 5);
  for (const Norm& n : all_norms()) {
    if (!n.is_polygonal()) continue;
    for (int i = 0; i < 500; ++i) {
      const Point p{u(rng), u(rng)};
      double s = 0;
      for (const AbsTerm& t : n.abs_terms()) s += t.weight * std::abs(dot(t.direction, p));
      CHECK(s == doctest::Approx(n(p)).epsilon(1e-13));
    }
  }
}

TEST_CASE("triangle inequality and homogeneity on random triples") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (const Norm& n : all_norms())
    for (int i = 0; i < 1000; ++i) {
      const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
      const double t = u(rng);
      CHECK(n(a + b) <= n(a) + n(b) + 1e-12 * (n(a) + n(b)));
      CHECK(n(t * a) == doctest::Approx(std::abs(t) * n(a)).epsilon(1e-12));
    }
}

TEST_CASE("dominance gap examples") {
  const double th = deg(30);
  CHECK(dominance_gap({3, 4}, Norm::l1_theta(th), Norm::euclidean()) ==
        doctest::Approx(5 - (3 * std::cos(th) + 4 * std::sin(th))).epsilon(1e-14));
  CHECK(dominance_gap({3, 4}, Norm::l1_theta(th), Norm::euclidean()) == doctest::Approx(0.4019238).epsilon(1e-7));
  for (double d : {5.0, 30.0, 45.0, 60.0, 85.0}) {
    const Norm n = Norm::l1_theta(deg(d));
    for (int sx : {-1, 1})
      for (int sy : {-1, 1}) CHECK(std::abs(dominance_gap({sx * std::cos(deg(d)), sy * std::sin(deg(d))}, n, Norm::euclidean())) <= 1e-12);
  }
  CHECK(dominance_gap({0, 0}, Norm::hex_big(), Norm::euclidean()) == 0);
  CHECK(dominance_gap({0, 0}, Norm::euclidean(), Norm::hex_small()) == 0);
  CHECK(dominance_gap({0, 0}, Norm::euclidean(), Norm::l1()) == 0);
}

TEST_CASE("dominance pairs") {
  CHECK(is_proven_dominance(Norm::hex_big(), Norm::euclidean()));
  CHECK(is_proven_dominance(Norm::euclidean(), Norm::hex_small()));
  CHECK(is_proven_dominance(Norm::euclidean(), Norm::l1()));
  CHECK(is_proven_dominance(Norm::l1_theta(0.3), Norm::euclidean()));
  CHECK(is_proven_dominance(Norm::hex_big(), Norm::hex_small()));
  CHECK(is_proven_dominance(Norm::l1_theta(0.3), Norm::l1()));
  CHECK_FALSE(is_proven_dominance(Norm::euclidean(), Norm::hex_big()));
  CHECK_FALSE(is_proven_dominance(Norm::l1(), Norm::euclidean()));
  CHECK_FALSE(is_proven_dominance(Norm::euclidean(), Norm::euclidean()));
  CHECK_THROWS_AS(dominance_gap({1, 0}, Norm::l1(), Norm::hex_big()), PreconditionError);
}

TEST_CASE("broken segment examples") {
  BrokenSegment b = broken_segment({0, 0}, {3, 4}, Norm::l1());
  CHECK(b.corner.x == doctest::Approx(3));
  CHECK(b.corner.y == doctest::Approx(0));
  CHECK(b.alpha + b.beta == doctest::Approx(7));

  b = broken_segment({0, 0}, {2, 0}, Norm::l1());
  CHECK(b.corner == Point{2, 0});
  CHECK(b.beta == 0);

  b = broken_segment({0, 0}, {1, 1}, Norm::hex_small());
  CHECK(b.corner.x == doctest::Approx(1 - 1 / s3).epsilon(1e-12));
  CHECK(b.corner.y == doctest::Approx(0).epsilon(1e-12));
  CHECK(b.alpha == doctest::Approx(0.4226497).epsilon(1e-7));
  CHECK(b.beta == doctest::Approx(1.1547005).epsilon(1e-7));
  CHECK(b.alpha + b.beta == doctest::Approx(Norm::hex_small()({1, 1})).epsilon(1e-14));

  CHECK_THROWS_AS(broken_segment({1, 1}, {1, 1}, Norm::l1()), PreconditionError);
  CHECK_THROWS_AS(broken_segment({0, 0}, {1, 1}, Norm::euclidean()), PreconditionError);
}

TEST_CASE("broken segment additivity and sector membership on random segments") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-10, 10);
  for (const Norm& n : all_norms()) {
    if (!n.is_polygonal()) continue;
    for (int i = 0; i < 2000; ++i) {
      const Point v{u(rng), u(rng)}, w{u(rng), u(rng)};
      const BrokenSegment b = broken_segment(v, w, n);
      const double whole = n(w - v);
      CHECK(std::abs(n(b.corner - v) + n(w - b.corner) - whole) <= 1e-12 * whole);
      CHECK(b.alpha >= 0);
      CHECK(b.beta >= 0);
      const auto& verts = n.ball_vertices();
      CHECK(b.second == (b.first + 1) % verts.size());
      const Point back = v + b.alpha * verts[b.first] + b.beta * verts[b.second];
      CHECK(dist(back, w) <= 1e-12 * (1 + euclid(w)));
    }
  }
}

TEST_CASE("x projection bound") {
  ProjectionBound p = x_projection_bound({1, 5}, {0, 5});
  CHECK(p.lower == 1);
  CHECK(p.value == doctest::Approx(1));
  p = x_projection_bound({0, 1}, {0, 0});
  CHECK(p.lower == 0);
  CHECK(p.value == doctest::Approx(s3 / 2));
  p = x_projection_bound({1, 1 / s3}, {0, 0});
  CHECK(p.lower == 1);
  CHECK(p.value == doctest::Approx(1));
}

TEST_CASE("norm strings round-trip") {
  for (const char* s : {"euclidean", "l1", "hexH", "hexh", "l1theta:30", "l1theta:12.5"}) {
    const Norm n = Norm::parse(s);
    CHECK(n.to_string() == s);
    CHECK(Norm::parse(n.to_string()) == n);
  }
  const Norm odd = Norm::l1_theta(0.123456789);
  CHECK(Norm::parse(odd.to_string()) == odd);
  CHECK_THROWS_AS(Norm::parse("l2"), ParseError);
  CHECK_THROWS_AS(Norm::parse("l1theta:"), ParseError);
  CHECK_THROWS_AS(Norm::parse("l1theta:90"), ParseError);
  CHECK_THROWS_AS(Norm::parse("l1theta:3x"), ParseError);
}
