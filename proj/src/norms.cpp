#include "dirnet/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

namespace dirnet {

namespace {

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

Norm::Norm(NormKind kind, double theta) : kind_(kind), theta_(theta) {
  switch (kind) {
    case NormKind::Euclidean:
      break;
    case NormKind::L1:
      vertices_ = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      terms_ = {{{1, 0}, 1.0}, {{0, 1}, 1.0}};
      break;
    case NormKind::L1Theta: {
      const double c = std::cos(theta), s = std::sin(theta);
      vertices_ = {{1 / c, 0}, {0, 1 / s}, {-1 / c, 0}, {0, -1 / s}};
      terms_ = {{{1, 0}, c}, {{0, 1}, s}};
      break;
    }
    case NormKind::HexH:
      vertices_ = {{1, 1 / kSqrt3}, {0, 2 / kSqrt3}, {-1, 1 / kSqrt3},
                   {-1, -1 / kSqrt3}, {0, -2 / kSqrt3}, {1, -1 / kSqrt3}};
      // max{|x|, |x|/2 + (√3/2)|y|} = (|x| + |x/2 + (√3/2)y| + |-x/2 + (√3/2)y|) / 2
      terms_ = {{{1, 0}, 0.5}, {{0.5, kSqrt3 / 2}, 0.5}, {{-0.5, kSqrt3 / 2}, 0.5}};
      break;
    case NormKind::HexHSmall:
      vertices_ = {{1, 0}, {0.5, kSqrt3 / 2}, {-0.5, kSqrt3 / 2},
                   {-1, 0}, {-0.5, -kSqrt3 / 2}, {0.5, -kSqrt3 / 2}};
      // max{(2/√3)|y|, |x| + |y|/√3} = (|(√3/2)x + y/2| + |y| + |-(√3/2)x + y/2|) / √3
      terms_ = {{{kSqrt3 / 2, 0.5}, 1 / kSqrt3}, {{0, 1}, 1 / kSqrt3}, {{-kSqrt3 / 2, 0.5}, 1 / kSqrt3}};
      break;
  }
}

Norm Norm::euclidean() { return Norm(NormKind::Euclidean, 0.0); }
Norm Norm::l1() { return Norm(NormKind::L1, 0.0); }
Norm Norm::hex_big() { return Norm(NormKind::HexH, 0.0); }
Norm Norm::hex_small() { return Norm(NormKind::HexHSmall, 0.0); }

Norm Norm::l1_theta(double theta) {
  if (!(theta > 0.0 && theta < kPi / 2)) throw PreconditionError("l1theta angle must lie strictly between 0 and 90 degrees");
  return Norm(NormKind::L1Theta, theta);
}

Norm Norm::parse(std::string_view text) {
  if (text == "euclidean") return euclidean();
  if (text == "l1") return l1();
  if (text == "hexH") return hex_big();
  if (text == "hexh") return hex_small();
  constexpr std::string_view prefix = "l1theta:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string num(text.substr(prefix.size()));
    char* end = nullptr;
    const double degrees = std::strtod(num.c_str(), &end);
    if (num.empty() || end != num.c_str() + num.size() || !(degrees > 0.0 && degrees < 90.0))
      throw ParseError("bad l1theta angle: '" + num + "'");
    return l1_theta(deg(degrees));
  }
  throw ParseError("unknown norm '" + std::string(text) + "'");
}

std::string Norm::to_string() const {
  switch (kind_) {
    case NormKind::Euclidean: return "euclidean";
    case NormKind::L1: return "l1";
    case NormKind::HexH: return "hexH";
    case NormKind::HexHSmall: return "hexh";
    case NormKind::L1Theta: {
      // Prefer a short decimal when it maps back to the same radians.
      const double degrees = theta_ * 180.0 / kPi;
      for (int decimals = 0; decimals <= 15; ++decimals) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, degrees, std::chars_format::fixed, decimals);
        std::string s(buf, res.ptr);
        if (deg(std::strtod(s.c_str(), nullptr)) == theta_) return "l1theta:" + s;
      }
      return "l1theta:" + format_shortest(degrees);
    }
  }
  return "euclidean";
}

double Norm::operator()(Point p) const {
  require_finite(p, "norm_eval");
  const double ax = std::abs(p.x), ay = std::abs(p.y);
  switch (kind_) {
    case NormKind::Euclidean: return std::hypot(p.x, p.y);
    case NormKind::L1: return ax + ay;
    case NormKind::L1Theta: return ax * std::cos(theta_) + ay * std::sin(theta_);
    case NormKind::HexH: return std::max(ax, 0.5 * ax + kSqrt3 / 2 * ay);
    case NormKind::HexHSmall: return std::max(2 / kSqrt3 * ay, ax + ay / kSqrt3);
  }
  return 0.0;
}

double norm_eval(Point p, const Norm& n) { return n(p); }

bool is_proven_dominance(const Norm& lower, const Norm& upper) {
  const auto below_euclid = [](const Norm& n) {
    return n.kind() == NormKind::L1Theta || n.kind() == NormKind::HexH || n.kind() == NormKind::Euclidean;
  };
  const auto above_euclid = [](const Norm& n) {
    return n.kind() == NormKind::L1 || n.kind() == NormKind::HexHSmall || n.kind() == NormKind::Euclidean;
  };
  if (lower.kind() == NormKind::Euclidean && upper.kind() == NormKind::Euclidean) return false;
  return below_euclid(lower) && above_euclid(upper);
}

double dominance_gap(Point p, const Norm& lower, const Norm& upper) {
  if (!is_proven_dominance(lower, upper))
    throw PreconditionError("no proven dominance " + lower.to_string() + " <= " + upper.to_string());
  return upper(p) - lower(p);
}

BrokenSegment broken_segment(Point v, Point w, const Norm& n) {
  require_finite(v, "broken_segment");
  require_finite(w, "broken_segment");
  if (!n.is_polygonal()) throw PreconditionError("broken_segment needs a polygonal norm");
  if (v == w) throw PreconditionError("broken_segment needs distinct endpoints");
  const Point d = w - v;
  const auto& V = n.ball_vertices();
  const std::size_t m = V.size();
  const double dn = euclid(d);

  for (std::size_t i = 0; i < m; ++i) {
    const Point p = V[i];
    const double c = cross(p, d);
    if (std::abs(c) <= 1e-13 * euclid(p) * dn && dot(p, d) > 0) {
      // Direction lies on vertex p: the second coefficient is zero.
      return {w, dot(d, p) / dot(p, p), 0.0, i, (i + 1) % m};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Point p = V[i], q = V[(i + 1) % m];
    if (cross(p, d) >= 0 && cross(d, q) > 0) {
      const double det = cross(p, q);
      const double alpha = std::max(0.0, cross(d, q) / det);
      const double beta = std::max(0.0, cross(p, d) / det);
      return {v + alpha * p, alpha, beta, i, (i + 1) % m};
    }
  }
  throw PreconditionError("broken_segment: direction not covered by any sector");
}

ProjectionBound x_projection_bound(Point a, Point b) {
  require_finite(a, "x_projection_bound");
  require_finite(b, "x_projection_bound");
  return {std::abs(a.x - b.x), Norm::hex_big()(a - b)};
}

std::string format_shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace dirnet
