#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dirnet/geometry.hpp"

namespace dirnet {

enum class NormKind { Euclidean, L1, L1Theta, HexH, HexHSmall };

// One summand w * |<direction, p>| of a polygonal norm written as a sum of
// absolute values of linear functionals. The position optimizer works on this form.
struct AbsTerm {
  Point direction;
  double weight;
};

class Norm {
 public:
  static Norm euclidean();
  static Norm l1();
  static Norm l1_theta(double theta_radians);
  static Norm hex_big();    // "hexH": ball with vertices (±1, ±1/√3), (0, ±2/√3)
  static Norm hex_small();  // "hexh": ball with vertices (±1, 0), (±1/2, ±√3/2)

  // Accepts "euclidean", "l1", "l1theta:<degrees>", "hexH", "hexh".
  static Norm parse(std::string_view text);
  std::string to_string() const;

  NormKind kind() const { return kind_; }
  double theta() const { return theta_; }
  bool is_polygonal() const { return kind_ != NormKind::Euclidean; }

  // Counterclockwise, starting from the smallest nonnegative polar angle; empty for Euclidean.
  const std::vector<Point>& ball_vertices() const { return vertices_; }
  const std::vector<AbsTerm>& abs_terms() const { return terms_; }

  double operator()(Point p) const;

  friend bool operator==(const Norm& a, const Norm& b) { return a.kind_ == b.kind_ && a.theta_ == b.theta_; }

 private:
  Norm(NormKind kind, double theta);

  NormKind kind_ = NormKind::Euclidean;
  double theta_ = 0.0;
  std::vector<Point> vertices_;
  std::vector<AbsTerm> terms_;
};

double norm_eval(Point p, const Norm& n);

// True for the four proven pointwise inequalities lower <= upper and their
// compositions through the Euclidean norm.
bool is_proven_dominance(const Norm& lower, const Norm& upper);
double dominance_gap(Point p, const Norm& lower, const Norm& upper);

struct BrokenSegment {
  Point corner;        // c = v + alpha * p_first
  double alpha = 0.0;  // coefficient of ball vertex p_first
  double beta = 0.0;   // coefficient of ball vertex p_second
  std::size_t first = 0;
  std::size_t second = 0;
};

BrokenSegment broken_segment(Point v, Point w, const Norm& n);

struct ProjectionBound {
  double lower;
  double value;
};

ProjectionBound x_projection_bound(Point a, Point b);

// Shortest decimal that round-trips to the same double.
std::string format_shortest(double value);

}  // namespace dirnet
