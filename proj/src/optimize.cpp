#include <Eigen/Dense>
#include <algorithm>
#include <random>

#include "dirnet/solver.hpp"

namespace dirnet {

namespace {

// One summand w * |L (p_head - p_tail)| where L is the identity (Euclidean) or a row vector.
struct Term {
  int tail;
  int head;
  Point row;
  double weight;
  bool planar;
};

class Objective {
 public:
  Objective(const Topology& t, const std::vector<Point>& terminals, const Norm& n)
      : T_(static_cast<int>(terminals.size())), K_(t.steiner_count), fixed_(terminals) {
    for (const Edge& e : t.edges) {
      if (n.kind() == NormKind::Euclidean) {
        terms_.push_back({e.tail, e.head, {0, 0}, 1.0, true});
      } else {
        for (const AbsTerm& a : n.abs_terms()) terms_.push_back({e.tail, e.head, a.direction, a.weight, false});
      }
    }
  }

  int dim() const { return 2 * K_; }

  Point at(const Eigen::VectorXd& x, int slot) const {
    return slot < T_ ? fixed_[slot] : Point{x[2 * (slot - T_)], x[2 * (slot - T_) + 1]};
  }

  double value(const Eigen::VectorXd& x, double eps) const {
    double f = 0.0;
    const double e2 = eps * eps;
    for (const Term& t : terms_) {
      const Point d = at(x, t.head) - at(x, t.tail);
      if (t.planar) f += t.weight * std::sqrt(d.x * d.x + d.y * d.y + e2);
      else {
        const double r = dot(t.row, d);
        f += t.weight * std::sqrt(r * r + e2);
      }
    }
    return f;
  }

  // Gradient, Hessian and the majorizing curvature matrix of the smoothed objective.
  void derivatives(const Eigen::VectorXd& x, double eps, Eigen::VectorXd& g, Eigen::MatrixXd& H,
                   Eigen::MatrixXd& M) const {
    const int n = dim();
    g.setZero(n);
    H.setZero(n, n);
    M.setZero(n, n);
    const double e2 = eps * eps;
    for (const Term& t : terms_) {
      const Point d = at(x, t.head) - at(x, t.tail);
      Eigen::Vector2d gd;
      Eigen::Matrix2d hd, md;
      if (t.planar) {
        const double phi = std::sqrt(d.x * d.x + d.y * d.y + e2);
        const Eigen::Vector2d dv(d.x, d.y);
        gd = t.weight * dv / phi;
        hd = t.weight * (Eigen::Matrix2d::Identity() / phi - dv * dv.transpose() / (phi * phi * phi));
        md = t.weight * Eigen::Matrix2d::Identity() / phi;
      } else {
        const Eigen::Vector2d nv(t.row.x, t.row.y);
        const double r = dot(t.row, d);
        const double phi = std::sqrt(r * r + e2);
        gd = t.weight * (r / phi) * nv;
        hd = t.weight * (e2 / (phi * phi * phi)) * nv * nv.transpose();
        md = t.weight / phi * nv * nv.transpose();
      }
      const int a = t.tail >= T_ ? 2 * (t.tail - T_) : -1;
      const int b = t.head >= T_ ? 2 * (t.head - T_) : -1;
      if (b >= 0) {
        g.segment<2>(b) += gd;
        H.block<2, 2>(b, b) += hd;
        M.block<2, 2>(b, b) += md;
      }
      if (a >= 0) {
        g.segment<2>(a) -= gd;
        H.block<2, 2>(a, a) += hd;
        M.block<2, 2>(a, a) += md;
      }
      if (a >= 0 && b >= 0) {
        H.block<2, 2>(a, b) -= hd;
        H.block<2, 2>(b, a) -= hd;
        M.block<2, 2>(a, b) -= md;
        M.block<2, 2>(b, a) -= md;
      }
    }
  }

 private:
  int T_, K_;
  std::vector<Point> fixed_;
  std::vector<Term> terms_;
};

double terminal_scale(const std::vector<Point>& pts) {
  double s = 0.0;
  for (Point p : pts)
    for (Point q : pts) s = std::max(s, dist(p, q));
  return s > 0 ? s : 1.0;
}

// Damped Newton on one smoothing level, falling back to the majorize-minimize step
// (which never increases the objective) when Newton makes no progress.
bool minimize_level(const Objective& obj, Eigen::VectorXd& x, double eps, double scale, int& iterations) {
  const int n = obj.dim();
  Eigen::VectorXd g;
  Eigen::MatrixXd H, M;
  for (int it = 0; it < 100; ++it) {
    ++iterations;
    const double f0 = obj.value(x, eps);
    obj.derivatives(x, eps, g, H, M);
    Eigen::VectorXd step = Eigen::LDLT<Eigen::MatrixXd>(H + 1e-13 * (H.trace() / n + 1.0) * Eigen::MatrixXd::Identity(n, n)).solve(-g);
    bool moved = false;
    if (step.allFinite() && g.dot(step) < 0) {
      double t = 1.0;
      for (int ls = 0; ls < 40; ++ls, t *= 0.5) {
        const Eigen::VectorXd cand = x + t * step;
        if (obj.value(cand, eps) <= f0 + 1e-4 * t * g.dot(step)) {
          step *= t;
          moved = true;
          break;
        }
      }
    }
    if (!moved) {
      step = Eigen::LDLT<Eigen::MatrixXd>(M).solve(-g);
      if (!step.allFinite() || obj.value(x + step, eps) > f0) return true;
    }
    x += step;
    const double decrement = -g.dot(step);
    if (step.norm() <= 1e-15 * scale || decrement <= 1e-22 * scale) return true;
  }
  return false;
}

}  // namespace

OptimizeResult optimize_positions(const Topology& t, const std::vector<Point>& terminal_positions, const Norm& n,
                                  double tol, const std::vector<Point>* initial) {
  if (static_cast<int>(terminal_positions.size()) != static_cast<int>(t.terminals.size()))
    throw PreconditionError("optimize_positions: terminal count does not match the topology");
  for (const Edge& e : t.edges)
    if (e.tail < 0 || e.head < 0 || e.tail >= t.slot_count() || e.head >= t.slot_count())
      throw PreconditionError("optimize_positions: edge slot out of range");
  const Objective obj(t, terminal_positions, n);
  const double scale = terminal_scale(terminal_positions);
  const int K = t.steiner_count;

  Eigen::VectorXd x(2 * K);
  if (initial) {
    if (static_cast<int>(initial->size()) != K) throw PreconditionError("optimize_positions: bad initial positions");
    for (int i = 0; i < K; ++i) {
      x[2 * i] = (*initial)[i].x;
      x[2 * i + 1] = (*initial)[i].y;
    }
  } else {
    Point c{0, 0};
    for (Point p : terminal_positions) c = c + p;
    c = c / static_cast<double>(terminal_positions.size());
    for (int i = 0; i < K; ++i) {
      x[2 * i] = c.x + 1e-3 * scale * std::cos(1.0 + 2.4 * i);
      x[2 * i + 1] = c.y + 1e-3 * scale * std::sin(1.0 + 2.4 * i);
    }
  }

  OptimizeResult res;
  if (K > 0) {
    for (int level = 2; level <= 10; ++level) {
      const double eps = scale * std::pow(10.0, -level);
      res.converged = minimize_level(obj, x, eps, scale, res.iterations);
    }
    // Unsmoothed polish: try snapping each Steiner point onto a nearby node.
    double best = obj.value(x, 0.0);
    const double snap = std::max(1e-5 * scale, 100 * tol);
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < K; ++i) {
        const Point here{x[2 * i], x[2 * i + 1]};
        for (int slot = 0; slot < t.slot_count(); ++slot) {
          if (slot == static_cast<int>(t.terminals.size()) + i) continue;
          const Point there = obj.at(x, slot);
          if (here == there || dist(here, there) > snap) continue;
          Eigen::VectorXd cand = x;
          cand[2 * i] = there.x;
          cand[2 * i + 1] = there.y;
          const double f = obj.value(cand, 0.0);
          if (f <= best + 1e-15 * scale) {
            x = cand;
            best = std::min(best, f);
            changed = true;
            break;
          }
        }
      }
    }
  }
  for (int i = 0; i < K; ++i) res.steiner.push_back({x[2 * i], x[2 * i + 1]});
  res.length = obj.value(x, 0.0);
  return res;
}

OptimizeResult optimize_positions(const Topology& t, const std::vector<Point>& sources,
                                  const std::vector<Point>& sinks, const Norm& n, double tol) {
  const TerminalLayout layout = layout_terminals({sources, sinks, n});
  if (layout.roles != t.terminals) throw PreconditionError("optimize_positions: terminal roles do not match");
  return optimize_positions(t, layout.positions, n, tol);
}

GeoDigraph realize(const Topology& t, const std::vector<Point>& terminal_positions,
                   const std::vector<Point>& steiner_positions) {
  std::vector<Node> nodes;
  const int T = static_cast<int>(t.terminals.size());
  for (int i = 0; i < T; ++i) nodes.push_back({i, t.terminals[i], terminal_positions.at(i)});
  for (int j = 0; j < t.steiner_count; ++j) nodes.push_back({T + j, NodeRole::Steiner, steiner_positions.at(j)});
  return GeoDigraph(std::move(nodes), t.edges);
}

}  // namespace dirnet
