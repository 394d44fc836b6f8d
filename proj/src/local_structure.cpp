#include "dirnet/local_structure.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace dirnet {

namespace {

constexpr double kTwoThirdsPi = 2.0 * kPi / 3.0;

double fermat_objective(Point x, Point a, Point b, Point c) { return dist(x, a) + dist(x, b) + dist(x, c); }

}  // namespace

Point fermat_point(Point a, Point b, Point c) {
  require_finite(a, "fermat_point");
  require_finite(b, "fermat_point");
  require_finite(c, "fermat_point");
  if (a == b || a == c) return a;
  if (b == c) return b;

  const std::array<Point, 3> p{a, b, c};
  for (int i = 0; i < 3; ++i) {
    const Point u = p[(i + 1) % 3] - p[i], w = p[(i + 2) % 3] - p[i];
    if (dot(u, w) <= -0.5 * euclid(u) * euclid(w)) return p[i];
  }

  // Interior case: Weiszfeld iteration, then Newton steps on the smooth objective.
  const double scale = std::max({dist(a, b), dist(b, c), dist(a, c)});
  Point x = (a + b + c) / 3.0;
  for (int it = 0; it < 100000; ++it) {
    Point num{0, 0};
    double den = 0.0;
    bool at_vertex = false;
    for (Point q : p) {
      const double d = dist(x, q);
      if (d < 1e-300) {
        at_vertex = true;
        break;
      }
      num = num + q / d;
      den += 1.0 / d;
    }
    if (at_vertex) x = x + 1e-9 * scale * Point{1.0, 0.5};  // never optimal here; step off
    else {
      const Point next = num / den;
      const double step = dist(next, x);
      x = next;
      if (step <= 1e-13 * scale) break;
    }
  }
  for (int it = 0; it < 5; ++it) {
    Point g{0, 0};
    double hxx = 0, hxy = 0, hyy = 0;
    for (Point q : p) {
      const Point r = x - q;
      const double d = euclid(r);
      const Point u = r / d;
      g = g + u;
      hxx += (1 - u.x * u.x) / d;
      hxy += (-u.x * u.y) / d;
      hyy += (1 - u.y * u.y) / d;
    }
    const double det = hxx * hyy - hxy * hxy;
    if (!(det > 0)) break;
    const Point step{-(hyy * g.x - hxy * g.y) / det, -(-hxy * g.x + hxx * g.y) / det};
    const Point cand = x + step;
    if (fermat_objective(cand, a, b, c) <= fermat_objective(x, a, b, c)) x = cand;
    else break;
  }
  return x;
}

std::string Classification::tag() const {
  switch (kind) {
    case SteinerCase::Deg12: return "Deg12";
    case SteinerCase::Deg21: return "Deg21";
    case SteinerCase::Deg22Alternating: return "Deg22Alternating";
    case SteinerCase::Deg22NonAlternating: return "Deg22NonAlternating";
    case SteinerCase::Deg23: return "Deg23";
    case SteinerCase::Deg32: return "Deg32";
    case SteinerCase::Deg33: return "Deg33";
    case SteinerCase::Rejected: return "Rejected";
  }
  return "Rejected";
}

AngleReport angle_report(const GeoDigraph& g, int id, double tol_len) {
  const Point s = g.node(id).pos;
  AngleReport r;
  r.node = id;
  for (const Edge& e : g.edges()) {
    if (e.tail != id && e.head != id) continue;
    const bool incoming = e.head == id;
    const int other = incoming ? e.tail : e.head;
    const Point d = g.node(other).pos - s;
    if (euclid(d) <= tol_len)
      throw PreconditionError("edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                              " at node " + std::to_string(id) + " is too short to have a direction");
    double polar = std::atan2(d.y, d.x);
    if (polar < 0) polar += 2 * kPi;
    r.directions.push_back({e, other, incoming, unit(d), polar});
  }
  std::stable_sort(r.directions.begin(), r.directions.end(),
                   [](const IncidentDirection& x, const IncidentDirection& y) { return x.polar < y.polar; });
  const std::size_t n = r.directions.size();
  r.pairwise.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) r.pairwise[i][j] = angle_between(r.directions[i].direction, r.directions[j].direction);
  return r;
}

namespace {

bool near(double value, double target, double tol) { return std::abs(value - target) <= tol; }

// Indices into the report's directions having the given orientation.
std::vector<std::size_t> side(const AngleReport& r, bool incoming) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < r.directions.size(); ++i)
    if (r.directions[i].incoming == incoming) out.push_back(i);
  return out;
}

bool pairwise_near(const AngleReport& r, const std::vector<std::size_t>& idx, double target, double tol) {
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (!near(r.pairwise[idx[i]][idx[j]], target, tol)) return false;
  return true;
}

Classification rejected(std::string reason) { return {SteinerCase::Rejected, std::move(reason)}; }

}  // namespace

Classification classify_steiner(const GeoDigraph& g, int id, Tolerances tol) {
  if (g.node(id).role != NodeRole::Steiner)
    throw PreconditionError("classify_steiner: node " + std::to_string(id) + " is not a Steiner point");
  const AngleReport r = angle_report(g, id, tol.length);
  const auto ins = side(r, true), outs = side(r, false);
  const DegreePair d{static_cast<int>(ins.size()), static_cast<int>(outs.size())};
  if (!in_degree_table(d))
    return rejected("degree (" + std::to_string(d.indeg) + "," + std::to_string(d.outdeg) +
                    ") outside the characterized table");
  const double ta = tol.angle;

  if (d.indeg + d.outdeg == 3) {
    std::vector<std::size_t> all{0, 1, 2};
    if (!pairwise_near(r, all, kTwoThirdsPi, ta)) return rejected("edges not pairwise at 120 degrees");
    return {d.indeg == 1 ? SteinerCase::Deg12 : SteinerCase::Deg21, {}};
  }
  if (d.indeg == 2 && d.outdeg == 2) {
    if (!near(r.pairwise[0][2], kPi, ta) || !near(r.pairwise[1][3], kPi, ta))
      return rejected("opposite edges not collinear");
    bool alternating = true;
    for (std::size_t i = 0; i < 4; ++i)
      if (r.directions[i].incoming == r.directions[(i + 1) % 4].incoming) alternating = false;
    if (alternating) return {SteinerCase::Deg22Alternating, {}};
    if (r.pairwise[ins[0]][ins[1]] < kTwoThirdsPi - ta || r.pairwise[outs[0]][outs[1]] < kTwoThirdsPi - ta)
      return rejected("in-in or out-out angle below 120 degrees");
    return {SteinerCase::Deg22NonAlternating, {}};
  }
  if (d.indeg + d.outdeg == 5) {
    const bool three_out = d.outdeg == 3;
    const auto& triple = three_out ? outs : ins;
    const auto& pair = three_out ? ins : outs;
    if (!pairwise_near(r, triple, kTwoThirdsPi, ta))
      return rejected(three_out ? "outgoing edges not pairwise at 120 degrees"
                                : "incoming edges not pairwise at 120 degrees");
    if (!near(r.pairwise[pair[0]][pair[1]], kPi, ta))
      return rejected(three_out ? "incoming edges not collinear" : "outgoing edges not collinear");
    return {three_out ? SteinerCase::Deg23 : SteinerCase::Deg32, {}};
  }
  // (3,3)
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t j = (i + 1) % 6;
    if (r.directions[i].incoming == r.directions[j].incoming) return rejected("edges not alternating in and out");
    if (!near(r.pairwise[i][j], kPi / 3, ta)) return rejected("consecutive edges not at 60 degrees");
  }
  return {SteinerCase::Deg33, {}};
}

std::vector<AngleViolation> check_angle_lower_bounds(const GeoDigraph& g, int id, Tolerances tol) {
  const NodeRole role = g.node(id).role;
  const AngleReport r = angle_report(g, id, tol.length);
  const auto ins = side(r, true), outs = side(r, false);
  std::vector<AngleViolation> out;
  std::set<std::pair<std::size_t, std::size_t>> reported;
  auto check = [&](std::size_t i, std::size_t j, const char* rule) {
    const auto key = std::minmax(i, j);
    if (reported.count(key)) return;
    const double a = r.pairwise[i][j];
    if (a < kTwoThirdsPi - tol.angle) {
      out.push_back({r.directions[i].edge, r.directions[j].edge, rule, a, kTwoThirdsPi - a});
      reported.insert(key);
    }
  };
  for (std::size_t i = 0; i < ins.size(); ++i)
    for (std::size_t j = i + 1; j < ins.size(); ++j) check(ins[i], ins[j], "incoming pair below 120 degrees");
  for (std::size_t i = 0; i < outs.size(); ++i)
    for (std::size_t j = i + 1; j < outs.size(); ++j) check(outs[i], outs[j], "outgoing pair below 120 degrees");
  if (!is_sink(role) && outs.size() == 1)
    for (std::size_t i : ins) check(i, outs[0], "in/out pair at the only out-edge of a non-sink");
  if (!is_source(role) && ins.size() == 1)
    for (std::size_t o : outs) check(ins[0], o, "in/out pair at the only in-edge of a non-source");
  return out;
}

namespace {

// Edge-list editing helper that keeps the result loop- and duplicate-free.
struct Rewire {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  int next;

  explicit Rewire(const GeoDigraph& g) : nodes(g.nodes()), edges(g.edges()), next(g.next_id()) {}

  void remove(Edge e) {
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw PreconditionError("edge not present");
    edges.erase(it);
  }
  void remove_node(int id) {
    nodes.erase(std::remove_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.id == id; }), nodes.end());
    edges.erase(std::remove_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.tail == id || e.head == id; }),
                edges.end());
  }
  void add(int tail, int head) {
    if (tail == head) return;
    if (std::find(edges.begin(), edges.end(), Edge{tail, head}) != edges.end()) return;
    edges.push_back({tail, head});
  }
  int add_steiner(Point p) {
    nodes.push_back({next, NodeRole::Steiner, p});
    return next++;
  }
  GeoDigraph build() const { return GeoDigraph(nodes, edges); }
};

// Node for a Fermat point: an existing endpoint when the point coincides with it, else a new Steiner point.
int fermat_node(Rewire& rw, Point f, const std::vector<std::pair<int, Point>>& endpoints) {
  for (const auto& [id, p] : endpoints)
    if (f == p) return id;
  return rw.add_steiner(f);
}

bool incident(Edge e, int v) { return e.tail == v || e.head == v; }

}  // namespace

GeoDigraph shorten_ft(const GeoDigraph& g, int v, Edge e1, Edge e2, Tolerances tol) {
  if (!g.has_edge(e1.tail, e1.head) || !g.has_edge(e2.tail, e2.head) || e1 == e2 || !incident(e1, v) ||
      !incident(e2, v))
    throw PreconditionError("shorten_ft: e1 and e2 must be distinct edges incident to the node");
  const Point pv = g.node(v).pos;
  const int x = e1.tail == v ? e1.head : e1.tail;
  const int y = e2.tail == v ? e2.head : e2.tail;
  const Point px = g.node(x).pos, py = g.node(y).pos;
  if (dist(px, pv) <= tol.length || dist(py, pv) <= tol.length)
    throw PreconditionError("shorten_ft: degenerate edge");
  const double angle = angle_between(px - pv, py - pv);
  if (!(angle < kTwoThirdsPi - tol.angle))
    throw PreconditionError("shorten_ft: angle is not below 120 degrees");

  const bool in1 = e1.head == v, in2 = e2.head == v;
  const Point f = fermat_point(px, py, pv);
  Rewire rw(g);
  rw.remove(e1);
  rw.remove(e2);
  const int s = fermat_node(rw, f, {{x, px}, {y, py}, {v, pv}});
  if (in1 && in2) {
    rw.add(x, s);
    rw.add(y, s);
    rw.add(s, v);
  } else if (!in1 && !in2) {
    rw.add(v, s);
    rw.add(s, x);
    rw.add(s, y);
  } else {
    const int c = in1 ? x : y;  // tail of the in-edge
    const int b = in1 ? y : x;  // head of the out-edge
    const NodeRole role = g.node(v).role;
    const DegreePair d = g.degree(v);
    if (!is_sink(role) && d.outdeg == 1) {
      rw.add(c, s);
      rw.add(v, s);
      rw.add(s, b);
    } else if (!is_source(role) && d.indeg == 1) {
      rw.add(c, s);
      rw.add(s, v);
      rw.add(s, b);
    } else {
      throw PreconditionError(
          "shorten_ft: an in/out pair needs a non-sink with one out-edge or a non-source with one in-edge");
    }
  }
  return rw.build();
}

namespace {

std::optional<Point> line_intersection(Point p, Point dp, Point q, Point dq) {
  const double den = cross(dp, dq);
  if (std::abs(den) <= 1e-12 * euclid(dp) * euclid(dq)) return std::nullopt;
  const double t = cross(q - p, dq) / den;
  return p + t * dp;
}

}  // namespace

GeoDigraph shorten_33(const GeoDigraph& g, int s, Tolerances tol) {
  if (g.node(s).role != NodeRole::Steiner) throw PreconditionError("shorten_33: not a Steiner point");
  const AngleReport r = angle_report(g, s, tol.length);
  const auto ins = side(r, true), outs = side(r, false);
  if (ins.size() != 3 || outs.size() != 3) throw PreconditionError("shorten_33: degree is not (3,3)");
  if (!pairwise_near(r, ins, kTwoThirdsPi, tol.angle) || !pairwise_near(r, outs, kTwoThirdsPi, tol.angle))
    throw PreconditionError("shorten_33: incoming or outgoing edges not pairwise at 120 degrees");
  double theta = kPi;
  for (auto i : ins)
    for (auto o : outs) theta = std::min(theta, r.pairwise[i][o]);
  if (!(theta < kPi / 3 - tol.angle)) throw PreconditionError("shorten_33: in/out angle is not below 60 degrees");

  const Point c = g.node(s).pos;
  double radius = 1e300;
  for (const auto& d : r.directions) radius = std::min(radius, dist(c, g.node(d.neighbor).pos));

  // Pair each source with the sink closest to the direction opposite to it.
  std::array<std::size_t, 3> partner{};
  std::set<std::size_t> used;
  for (int i = 0; i < 3; ++i) {
    const Point opposite = -r.directions[ins[i]].direction;
    std::size_t best = outs[0];
    for (auto o : outs)
      if (dot(r.directions[o].direction, opposite) > dot(r.directions[best].direction, opposite)) best = o;
    partner[i] = best;
    used.insert(best);
  }
  if (used.size() != 3) throw PreconditionError("shorten_33: ambiguous source/sink pairing");

  std::array<Point, 3> from{}, to{};
  for (int i = 0; i < 3; ++i) {
    from[i] = c + radius * r.directions[ins[i]].direction;
    to[i] = c + radius * r.directions[partner[i]].direction;
  }
  // corner[k] is the intersection of the two lines other than line k.
  std::array<Point, 3> corner{};
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    auto p = line_intersection(from[i], to[i] - from[i], from[j], to[j] - from[j]);
    if (!p) throw PreconditionError("shorten_33: near-parallel lines");
    corner[k] = *p;
  }

  Rewire rw(g);
  rw.remove_node(s);
  std::array<int, 3> ids{};
  for (int k = 0; k < 3; ++k) ids[k] = rw.add_steiner(corner[k]);
  for (int i = 0; i < 3; ++i) {
    // Line i carries the corners of the two other lines, ordered from the source side.
    std::vector<std::pair<double, int>> on_line;
    const Point dir = to[i] - from[i];
    for (int k = 0; k < 3; ++k) {
      if (k == i) continue;
      const double t = dot(corner[k] - from[i], dir) / dot(dir, dir);
      if (!(t > 0.0 && t < 1.0)) throw PreconditionError("shorten_33: intersection outside the rescaled star");
      on_line.push_back({t, k});
    }
    std::sort(on_line.begin(), on_line.end());
    const int a = r.directions[ins[i]].neighbor, b = r.directions[partner[i]].neighbor;
    rw.add(a, ids[on_line[0].second]);
    rw.add(ids[on_line[0].second], ids[on_line[1].second]);
    rw.add(ids[on_line[1].second], b);
  }
  GeoDigraph out = rw.build();
  if (is_ab_network(g) && !is_ab_network(out)) throw PreconditionError("shorten_33: construction lost a path");
  return out;
}

GeoDigraph shorten_32(const GeoDigraph& g, int s, Tolerances tol) {
  if (g.node(s).role != NodeRole::Steiner) throw PreconditionError("shorten_32: not a Steiner point");
  const DegreePair d = g.degree(s);
  if (d.indeg == 2 && d.outdeg == 3) return reversed(shorten_32(reversed(g), s, tol));
  if (d.indeg != 3 || d.outdeg != 2) throw PreconditionError("shorten_32: degree is not (3,2) or (2,3)");

  const AngleReport r = angle_report(g, s, tol.length);
  const auto ins = side(r, true), outs = side(r, false);
  if (!pairwise_near(r, ins, kTwoThirdsPi, tol.angle))
    throw PreconditionError("shorten_32: incoming edges not pairwise at 120 degrees");
  const double phi = r.pairwise[outs[0]][outs[1]];
  if (phi < kTwoThirdsPi - tol.angle) throw PreconditionError("shorten_32: outgoing pair below 120 degrees");
  if (phi >= kPi - tol.angle) throw PreconditionError("shorten_32: outgoing edges are collinear");

  const Point c = g.node(s).pos;
  double radius = 1e300;
  for (const auto& dir : r.directions) radius = std::min(radius, dist(c, g.node(dir.neighbor).pos));
  const Point b1 = c + radius * r.directions[outs[0]].direction;
  const Point b2 = c + radius * r.directions[outs[1]].direction;

  for (auto i : ins) {
    const Point u = r.directions[i].direction;
    const Point chord = b2 - b1;
    const double den = cross(u, chord);
    if (std::abs(den) < 1e-15) continue;
    const double t = cross(b1 - c, chord) / den;   // along the in-edge from s
    const double lam = cross(b1 - c, u) / den;     // along the chord from b1
    if (t > 0 && t < radius && lam > 0 && lam < 1) {
      const int a = r.directions[i].neighbor;
      Rewire rw(g);
      rw.remove({a, s});
      rw.remove({s, r.directions[outs[0]].neighbor});
      rw.remove({s, r.directions[outs[1]].neighbor});
      const int sp = rw.add_steiner(c + t * u);
      rw.add(a, sp);
      rw.add(s, sp);
      rw.add(sp, r.directions[outs[0]].neighbor);
      rw.add(sp, r.directions[outs[1]].neighbor);
      return rw.build();
    }
  }
  throw PreconditionError("shorten_32: the chord between the sinks crosses no incoming edge");
}

double FullSteinerTree::length() const {
  double total = 0.0;
  for (auto [i, j] : edges) total += dist(points[i], points[j]);
  return total;
}

double Decomposition::total_length() const {
  double total = 0.0;
  for (const auto& t : trees) total += t.length();
  for (const auto& s : segments) total += s.length();
  return total;
}

Decomposition decompose_full_components(const GeoDigraph& g, Tolerances tol) {
  std::map<int, SteinerCase> cases;
  for (const Node& n : g.nodes()) {
    if (n.role != NodeRole::Steiner) continue;
    const Classification c = classify_steiner(g, n.id, tol);
    if (c.kind == SteinerCase::Rejected)
      throw PreconditionError("decompose_full_components: node " + std::to_string(n.id) + " rejected: " + c.reason);
    cases[n.id] = c.kind;
  }

  // Undirected working multigraph over node ids.
  std::vector<std::pair<int, int>> work;
  for (const Edge& e : g.edges()) work.push_back({e.tail, e.head});
  auto pos = [&](int id) { return g.node(id).pos; };
  auto take_incident = [&](int id) {
    std::vector<int> nbrs;
    std::vector<std::pair<int, int>> rest;
    for (auto [a, b] : work) {
      if (a == id) nbrs.push_back(b);
      else if (b == id) nbrs.push_back(a);
      else rest.push_back({a, b});
    }
    work = std::move(rest);
    return nbrs;
  };
  // Joins each neighbor to its most nearly opposite partner; returns unpaired neighbors.
  auto join_opposites = [&](int id, std::vector<int> nbrs, int pairs) {
    const Point c = pos(id);
    for (int k = 0; k < pairs; ++k) {
      double best = 2.0;
      std::size_t bi = 0, bj = 1;
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
          const double cosang = dot(unit(pos(nbrs[i]) - c), unit(pos(nbrs[j]) - c));
          if (cosang < best) {
            best = cosang;
            bi = i;
            bj = j;
          }
        }
      work.push_back({nbrs[bi], nbrs[bj]});
      nbrs.erase(nbrs.begin() + static_cast<long>(bj));
      nbrs.erase(nbrs.begin() + static_cast<long>(bi));
    }
    return nbrs;
  };

  std::set<int> removed;
  // Degree-5 points first: their collinear pair becomes one edge and the point keeps three edges.
  for (auto [id, kind] : cases) {
    if (kind != SteinerCase::Deg23 && kind != SteinerCase::Deg32) continue;
    const bool pair_incoming = kind == SteinerCase::Deg23;
    std::vector<int> pair_nbrs;
    std::vector<std::pair<int, int>> rest;
    for (auto [a, b] : work) {
      const bool hit = pair_incoming ? (b == id && g.has_edge(a, id)) : (a == id && g.has_edge(id, b));
      if (hit) pair_nbrs.push_back(pair_incoming ? a : b);
      else rest.push_back({a, b});
    }
    work = std::move(rest);
    work.push_back({pair_nbrs.at(0), pair_nbrs.at(1)});
  }
  for (auto [id, kind] : cases) {
    if (kind == SteinerCase::Deg22Alternating || kind == SteinerCase::Deg22NonAlternating) {
      join_opposites(id, take_incident(id), 2);
      removed.insert(id);
    } else if (kind == SteinerCase::Deg33) {
      join_opposites(id, take_incident(id), 3);
      removed.insert(id);
    }
  }

  // Split at non-Steiner nodes: edges sharing a remaining Steiner point belong to one tree.
  std::vector<int> parent(work.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, int> first_edge_at;
  for (std::size_t i = 0; i < work.size(); ++i)
    for (int end : {work[i].first, work[i].second}) {
      if (g.node(end).role != NodeRole::Steiner) continue;
      auto [it, fresh] = first_edge_at.emplace(end, static_cast<int>(i));
      if (!fresh) parent[find(static_cast<int>(i))] = find(it->second);
    }

  Decomposition out;
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < work.size(); ++i) groups[find(static_cast<int>(i))].push_back(i);
  for (const auto& [root, members] : groups) {
    bool has_steiner = false;
    for (auto i : members)
      for (int end : {work[i].first, work[i].second})
        if (g.node(end).role == NodeRole::Steiner) has_steiner = true;
    if (!has_steiner) {
      for (auto i : members) out.segments.push_back({pos(work[i].first), pos(work[i].second)});
      continue;
    }
    FullSteinerTree t;
    std::map<int, int> local;
    auto index_of = [&](int id) {
      auto [it, fresh] = local.emplace(id, static_cast<int>(t.points.size()));
      if (fresh) {
        t.points.push_back(pos(id));
        t.steiner.push_back(g.node(id).role == NodeRole::Steiner);
      }
      return it->second;
    };
    for (auto i : members) t.edges.push_back({index_of(work[i].first), index_of(work[i].second)});
    out.trees.push_back(std::move(t));
  }
  return out;
}

double SmallSteinerTree::length() const {
  double total = 0.0;
  for (auto [i, j] : edges) total += dist(points[i], points[j]);
  return total;
}

SmallSteinerTree melzak_three_terminals(Point a, Point b, Point c) {
  if (a == b || b == c || a == c) throw PreconditionError("melzak_three_terminals: points must be distinct");
  const Point f = fermat_point(a, b, c);
  SmallSteinerTree t;
  t.points = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    if (f == t.points[i]) {
      t.edges = {{i, (i + 1) % 3}, {i, (i + 2) % 3}};
      return t;
    }
  }
  t.points.push_back(f);
  t.edges = {{3, 0}, {3, 1}, {3, 2}};
  t.steiner = f;
  return t;
}

}  // namespace dirnet
