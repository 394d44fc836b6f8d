#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace dirnet {

// Error categories surface as distinct CLI exit codes.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double kPi = 3.14159265358979323846;

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double euclid(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return euclid(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline void require_finite(Point p, const char* what) {
  if (!is_finite(p)) throw PreconditionError(std::string(what) + ": non-finite coordinate");
}

inline Point unit(Point p) { return p / euclid(p); }
inline Point polar(double angle, double radius = 1.0) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}
inline Point rotate(Point p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Unsigned angle between two nonzero vectors, in [0, pi].
inline double angle_between(Point u, Point v) { return std::atan2(std::abs(cross(u, v)), dot(u, v)); }

inline double deg(double degrees) { return degrees * kPi / 180.0; }

}  // namespace dirnet
