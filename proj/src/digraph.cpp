#include "dirnet/digraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dirnet {

std::string role_name(NodeRole r) {
  switch (r) {
    case NodeRole::Source: return "source";
    case NodeRole::Sink: return "sink";
    case NodeRole::SourceAndSink: return "both";
    case NodeRole::Steiner: return "steiner";
  }
  return "steiner";
}

NodeRole parse_role(const std::string& s) {
  if (s == "source") return NodeRole::Source;
  if (s == "sink") return NodeRole::Sink;
  if (s == "both") return NodeRole::SourceAndSink;
  if (s == "steiner") return NodeRole::Steiner;
  throw ParseError("unknown node role '" + s + "'");
}

bool in_degree_table(DegreePair d) {
  const int i = d.indeg, o = d.outdeg;
  if (i < 1 || o < 1 || i > 3 || o > 3 || i + o < 3) return false;
  return !(i == 1 && o == 3) && !(i == 3 && o == 1);
}

GeoDigraph::GeoDigraph(std::vector<Node> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    require_finite(nodes_[i].pos, "node position");
    if (!index_.emplace(nodes_[i].id, i).second)
      throw PreconditionError("duplicate node id " + std::to_string(nodes_[i].id));
  }
  std::set<Edge> seen;
  for (const Edge& e : edges_) {
    if (!has_node(e.tail) || !has_node(e.head))
      throw PreconditionError("edge references unknown node id");
    if (e.tail == e.head) throw PreconditionError("loop at node " + std::to_string(e.tail));
    if (!seen.insert(e).second)
      throw PreconditionError("duplicate edge " + std::to_string(e.tail) + "->" + std::to_string(e.head));
  }
}

const Node& GeoDigraph::node(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw PreconditionError("unknown node id " + std::to_string(id));
  return nodes_[it->second];
}

DegreePair GeoDigraph::degree(int id) const {
  DegreePair d;
  for (const Edge& e : edges_) {
    if (e.head == id) ++d.indeg;
    if (e.tail == id) ++d.outdeg;
  }
  return d;
}

std::vector<Edge> GeoDigraph::in_edges(int id) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (e.head == id) out.push_back(e);
  return out;
}

std::vector<Edge> GeoDigraph::out_edges(int id) const {
  std::vector<Edge> out;
  for (const Edge& e : edges_)
    if (e.tail == id) out.push_back(e);
  return out;
}

bool GeoDigraph::has_edge(int tail, int head) const {
  return std::find(edges_.begin(), edges_.end(), Edge{tail, head}) != edges_.end();
}

int GeoDigraph::next_id() const {
  int m = -1;
  for (const Node& n : nodes_) m = std::max(m, n.id);
  return m + 1;
}

GeoDigraph GeoDigraph::canonical() const {
  auto nodes = nodes_;
  auto edges = edges_;
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end());
  return GeoDigraph(std::move(nodes), std::move(edges));
}

bool structurally_equal(const GeoDigraph& a, const GeoDigraph& b) {
  const GeoDigraph ca = a.canonical(), cb = b.canonical();
  if (ca.nodes().size() != cb.nodes().size() || ca.edges() != cb.edges()) return false;
  for (std::size_t i = 0; i < ca.nodes().size(); ++i) {
    const Node &x = ca.nodes()[i], &y = cb.nodes()[i];
    if (x.id != y.id || x.role != y.role || !(x.pos == y.pos)) return false;
  }
  return true;
}

bool is_ab_network(const GeoDigraph& g) {
  std::unordered_map<int, std::vector<int>> adj;
  for (const Edge& e : g.edges()) adj[e.tail].push_back(e.head);
  std::vector<int> sinks;
  for (const Node& n : g.nodes())
    if (is_sink(n.role)) sinks.push_back(n.id);
  for (const Node& a : g.nodes()) {
    if (!is_source(a.role)) continue;
    std::set<int> seen{a.id};
    std::vector<int> stack{a.id};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
    for (int b : sinks)
      if (!seen.count(b)) return false;
  }
  return true;
}

double length(const GeoDigraph& g, const Norm& n) {
  double total = 0.0;
  for (const Edge& e : g.edges()) total += n(g.node(e.head).pos - g.node(e.tail).pos);
  return total;
}

namespace {

GeoDigraph without_node(const GeoDigraph& g, int id) {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (const Node& n : g.nodes())
    if (n.id != id) nodes.push_back(n);
  for (const Edge& e : g.edges())
    if (e.tail != id && e.head != id) edges.push_back(e);
  return GeoDigraph(std::move(nodes), std::move(edges));
}

std::vector<int> steiner_ids_sorted(const GeoDigraph& g) {
  std::vector<int> ids;
  for (const Node& n : g.nodes())
    if (n.role == NodeRole::Steiner) ids.push_back(n.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

GeoDigraph simplify(const GeoDigraph& input) {
  if (!is_ab_network(input)) throw PreconditionError("simplify: input is not an (A,B)-network");
  GeoDigraph g = input;
  for (;;) {
    const auto ids = steiner_ids_sorted(g);
    bool changed = false;
    for (int id : ids) {
      const DegreePair d = g.degree(id);
      if (d.indeg == 0 || d.outdeg == 0) {
        g = without_node(g, id);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (int id : ids) {
      const DegreePair d = g.degree(id);
      if (d.indeg == 1 && d.outdeg == 1) {
        const int x = g.in_edges(id)[0].tail, y = g.out_edges(id)[0].head;
        GeoDigraph h = without_node(g, id);
        if (x != y && !h.has_edge(x, y)) {
          auto edges = h.edges();
          edges.push_back({x, y});
          h = GeoDigraph(h.nodes(), std::move(edges));
        }
        g = std::move(h);
        changed = true;
        break;
      }
    }
    if (!changed) return g;
  }
}

int steiner_cap(int num_sources, int num_sinks, double multiplier) {
  if (num_sources < 1 || num_sinks < 1) throw PreconditionError("steiner_cap: counts must be at least 1");
  return static_cast<int>(std::ceil(multiplier * (num_sources + num_sinks)));
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

namespace {

double segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace

bool in_convex_hull_check(const GeoDigraph& g, double slack) {
  std::vector<Point> terminals;
  for (const Node& n : g.nodes())
    if (is_terminal(n.role)) terminals.push_back(n.pos);
  if (terminals.empty()) throw PreconditionError("in_convex_hull_check: no terminals");
  const auto hull = convex_hull(terminals);
  for (const Node& n : g.nodes()) {
    if (n.role != NodeRole::Steiner) continue;
    const Point p = n.pos;
    if (hull.size() == 1) {
      if (dist(p, hull[0]) > slack) return false;
    } else if (hull.size() == 2) {
      if (segment_distance(p, hull[0], hull[1]) > slack) return false;
    } else {
      for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point a = hull[i], b = hull[(i + 1) % hull.size()];
        if (cross(b - a, p - a) / dist(a, b) < -slack) return false;
      }
    }
  }
  return true;
}

GeoDigraph with_broken_edges(const GeoDigraph& g, const Norm& n) {
  std::vector<Node> nodes = g.nodes();
  std::vector<Edge> edges;
  int next = g.next_id();
  for (const Edge& e : g.edges()) {
    const Point v = g.node(e.tail).pos, w = g.node(e.head).pos;
    if (v == w) {
      edges.push_back(e);
      continue;
    }
    const BrokenSegment b = broken_segment(v, w, n);
    if (b.alpha == 0.0 || b.beta == 0.0 || b.corner == v || b.corner == w) {
      edges.push_back(e);
      continue;
    }
    nodes.push_back({next, NodeRole::Steiner, b.corner});
    edges.push_back({e.tail, next});
    edges.push_back({next, e.head});
    ++next;
  }
  return GeoDigraph(std::move(nodes), std::move(edges));
}

GeoDigraph reversed(const GeoDigraph& g) {
  std::vector<Node> nodes = g.nodes();
  for (Node& n : nodes) {
    if (n.role == NodeRole::Source) n.role = NodeRole::Sink;
    else if (n.role == NodeRole::Sink) n.role = NodeRole::Source;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.head, e.tail});
  return GeoDigraph(std::move(nodes), std::move(edges));
}

GeoDigraph merge_close_nodes(const GeoDigraph& g, double radius) {
  std::map<int, int> target;
  std::vector<const Node*> order;
  for (const Node& n : g.nodes()) order.push_back(&n);
  std::sort(order.begin(), order.end(), [](const Node* a, const Node* b) { return a->id < b->id; });

  std::vector<const Node*> kept;
  for (const Node* n : order)
    if (is_terminal(n->role)) kept.push_back(n);
  for (const Node* n : order) {
    if (is_terminal(n->role)) continue;
    // Terminals take precedence over earlier surviving Steiner points.
    const Node* best = nullptr;
    for (bool terminal_pass : {true, false}) {
      double best_d = radius;
      for (const Node* k : kept) {
        if (is_terminal(k->role) != terminal_pass) continue;
        const double d = dist(k->pos, n->pos);
        if (d < best_d) {
          best = k;
          best_d = d;
        }
      }
      if (best) break;
    }
    if (best) {
      target[n->id] = best->id;
    } else {
      kept.push_back(n);
    }
  }
  if (target.empty()) return g;

  std::vector<Node> nodes;
  for (const Node& n : g.nodes())
    if (!target.count(n.id)) nodes.push_back(n);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto map_id = [&](int id) { auto it = target.find(id); return it == target.end() ? id : it->second; };
  for (const Edge& e : g.edges()) {
    const Edge m{map_id(e.tail), map_id(e.head)};
    if (m.tail == m.head || !seen.insert(m).second) continue;
    edges.push_back(m);
  }
  return GeoDigraph(std::move(nodes), std::move(edges));
}

TerminalLayout layout_terminals(const Instance& inst) {
  TerminalLayout t;
  auto find = [&](Point p) -> int {
    for (std::size_t i = 0; i < t.positions.size(); ++i)
      if (t.positions[i] == p) return static_cast<int>(i);
    return -1;
  };
  for (Point p : inst.sources) {
    require_finite(p, "source");
    if (find(p) < 0) {
      t.positions.push_back(p);
      t.roles.push_back(NodeRole::Source);
    }
  }
  for (Point p : inst.sinks) {
    require_finite(p, "sink");
    const int i = find(p);
    if (i < 0) {
      t.positions.push_back(p);
      t.roles.push_back(NodeRole::Sink);
    } else if (t.roles[i] == NodeRole::Source) {
      t.roles[i] = NodeRole::SourceAndSink;
    }
  }
  return t;
}

}  // namespace dirnet
