#include "dirnet/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "dirnet/local_structure.hpp"

namespace dirnet {

namespace {

Json parse_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + ": non-finite number");
  return v;
}

int integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

Point point(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ParseError(std::string(what) + ": expected [x, y]");
  return {number(j[0], what), number(j[1], what)};
}

std::vector<Point> points(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of points");
  std::vector<Point> out;
  for (const Json& p : j) out.push_back(point(p, what));
  return out;
}

Json point_json(Point p) { return Json::array({p.x, p.y}); }

Norm norm_field(const Json& j, const char* what) {
  const Json& n = field(j, "norm", what);
  if (!n.is_string()) throw ParseError(std::string(what) + ": norm must be a string");
  return Norm::parse(n.get<std::string>());
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const Json j = parse_text(text, "instance");
  Instance inst;
  inst.sources = points(field(j, "sources", "instance"), "instance sources");
  inst.sinks = points(field(j, "sinks", "instance"), "instance sinks");
  inst.norm = j.contains("norm") ? norm_field(j, "instance") : Norm::euclidean();
  return inst;
}

GeoDigraph parse_network(const std::string& text) {
  const Json j = parse_text(text, "network");
  const Json& jn = field(j, "nodes", "network");
  const Json& je = field(j, "edges", "network");
  if (!jn.is_array() || !je.is_array()) throw ParseError("network: nodes and edges must be arrays");
  std::vector<Node> nodes;
  for (const Json& n : jn) {
    const Json& role = field(n, "role", "network node");
    if (!role.is_string()) throw ParseError("network node: role must be a string");
    nodes.push_back({integer(field(n, "id", "network node"), "network node id"), parse_role(role.get<std::string>()),
                     point(field(n, "pos", "network node"), "network node pos")});
  }
  std::vector<Edge> edges;
  for (const Json& e : je) {
    if (!e.is_array() || e.size() != 2) throw ParseError("network edge: expected [tail, head]");
    edges.push_back({integer(e[0], "network edge"), integer(e[1], "network edge")});
  }
  return GeoDigraph(std::move(nodes), std::move(edges));
}

Certificate parse_certificate(const std::string& text) {
  const Json j = parse_text(text, "certificate");
  Certificate c;
  c.norm = norm_field(j, "certificate");
  if (j.contains("frame")) {
    const Json& f = j.at("frame");
    c.frame.origin = point(field(f, "origin", "certificate frame"), "certificate frame origin");
    c.frame.ex = point(field(f, "ex", "certificate frame"), "certificate frame ex");
    c.frame.ey = point(field(f, "ey", "certificate frame"), "certificate frame ey");
  }
  const Json& ja = field(j, "assignments", "certificate");
  if (!ja.is_array()) throw ParseError("certificate: assignments must be an array");
  for (const Json& a : ja) {
    PairAssignment pa;
    pa.source = integer(field(a, "source", "assignment"), "assignment source");
    pa.sink = integer(field(a, "sink", "assignment"), "assignment sink");
    const Json& cls = field(a, "classes", "assignment");
    if (!cls.is_array()) throw ParseError("assignment: classes must be an array");
    for (const Json& k : cls) pa.classes.push_back(integer(k, "assignment class"));
    c.assignments.push_back(std::move(pa));
  }
  c.bound = number(field(j, "bound", "certificate"), "certificate bound");
  return c;
}

Json instance_to_json(const Instance& inst) {
  Json j;
  j["sources"] = Json::array();
  for (Point p : inst.sources) j["sources"].push_back(point_json(p));
  j["sinks"] = Json::array();
  for (Point p : inst.sinks) j["sinks"].push_back(point_json(p));
  j["norm"] = inst.norm.to_string();
  return j;
}

Json network_to_json(const GeoDigraph& g) {
  const GeoDigraph c = g.canonical();
  Json j;
  j["nodes"] = Json::array();
  for (const Node& n : c.nodes()) j["nodes"].push_back({{"id", n.id}, {"role", role_name(n.role)}, {"pos", point_json(n.pos)}});
  j["edges"] = Json::array();
  for (const Edge& e : c.edges()) j["edges"].push_back(Json::array({e.tail, e.head}));
  return j;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["norm"] = c.norm.to_string();
  j["frame"] = {{"origin", point_json(c.frame.origin)}, {"ex", point_json(c.frame.ex)}, {"ey", point_json(c.frame.ey)}};
  j["assignments"] = Json::array();
  for (const PairAssignment& a : c.assignments)
    j["assignments"].push_back({{"source", a.source}, {"sink", a.sink}, {"classes", a.classes}});
  j["bound"] = c.bound;
  return j;
}

double report_number(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json solve_result_to_json(const SolveResult& r, const Norm& n) {
  Json j;
  j["norm"] = n.to_string();
  j["length"] = report_number(r.length);
  j["k_max"] = r.k_max;
  j["topologies_examined"] = r.topologies_examined;
  j["topologies_optimized"] = r.topologies_optimized;
  j["search_nodes"] = r.search_nodes;
  j["network"] = network_to_json(r.best);
  if (!r.trace.empty()) {
    j["trace"] = Json::array();
    for (const TraceEntry& t : r.trace)
      j["trace"].push_back({{"steiner_count", t.steiner_count}, {"encoding", t.encoding}, {"length", report_number(t.length)}});
  }
  return j;
}

namespace {

Json edge_json(Edge e) { return Json::array({e.tail, e.head}); }

Json steiner_entry(const GeoDigraph& g, int id) {
  const DegreePair d = g.degree(id);
  const Classification c = classify_steiner(g, id);
  Json j;
  j["id"] = id;
  j["degree"] = Json::array({d.indeg, d.outdeg});
  j["classification"] = c.tag();
  if (c.kind == SteinerCase::Rejected) j["reason"] = c.reason;
  return j;
}

bool terminals_match(const Instance& inst, const GeoDigraph& g) {
  const TerminalLayout layout = layout_terminals(inst);
  std::vector<std::pair<Point, NodeRole>> want, have;
  for (std::size_t i = 0; i < layout.positions.size(); ++i) want.push_back({layout.positions[i], layout.roles[i]});
  for (const Node& n : g.nodes())
    if (is_terminal(n.role)) have.push_back({n.pos, n.role});
  auto less = [](const auto& a, const auto& b) {
    if (a.first.x != b.first.x) return a.first.x < b.first.x;
    if (a.first.y != b.first.y) return a.first.y < b.first.y;
    return a.second < b.second;
  };
  std::sort(want.begin(), want.end(), less);
  std::sort(have.begin(), have.end(), less);
  return want == have;
}

}  // namespace

Json verify_report(const Instance& inst, const GeoDigraph& g) {
  const bool euclidean = inst.norm.kind() == NormKind::Euclidean;
  Json j;
  j["terminals_match"] = terminals_match(inst, g);
  j["is_ab_network"] = is_ab_network(g);
  j["in_convex_hull"] = in_convex_hull_check(g);
  j["length"] = report_number(length(g, inst.norm));
  bool local_ok = true;
  j["steiner"] = Json::array();
  const GeoDigraph c = g.canonical();
  for (const Node& n : c.nodes()) {
    if (n.role != NodeRole::Steiner) continue;
    Json s = steiner_entry(g, n.id);
    if (euclidean) {
      s["angle_violations"] = Json::array();
      for (const AngleViolation& v : check_angle_lower_bounds(g, n.id)) {
        s["angle_violations"].push_back({{"edges", Json::array({edge_json(v.first), edge_json(v.second)})},
                                         {"rule", v.rule},
                                         {"angle_degrees", report_number(v.angle * 180.0 / kPi)}});
        local_ok = false;
      }
      if (s["classification"] == "Rejected") local_ok = false;
    }
    j["steiner"].push_back(std::move(s));
  }
  j["valid"] = j["terminals_match"].get<bool>() && j["is_ab_network"].get<bool>() &&
               (!euclidean || (j["in_convex_hull"].get<bool>() && local_ok));
  return j;
}

Json classify_report(const GeoDigraph& g) {
  Json j;
  j["steiner"] = Json::array();
  const GeoDigraph c = g.canonical();
  for (const Node& n : c.nodes())
    if (n.role == NodeRole::Steiner) j["steiner"].push_back(steiner_entry(g, n.id));
  return j;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const char* fill_for(NodeRole r) {
  switch (r) {
    case NodeRole::Source: return "#d62728";
    case NodeRole::Sink: return "#1f77b4";
    case NodeRole::SourceAndSink: return "#9467bd";
    case NodeRole::Steiner: return "#ffffff";
  }
  return "#ffffff";
}

}  // namespace

std::string render_svg(const GeoDigraph& g) {
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const Node& n : g.nodes()) {
    if (first) {
      minx = maxx = n.pos.x;
      miny = maxy = n.pos.y;
      first = false;
    }
    minx = std::min(minx, n.pos.x);
    maxx = std::max(maxx, n.pos.x);
    miny = std::min(miny, n.pos.y);
    maxy = std::max(maxy, n.pos.y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-9});
  const double margin = 0.1 * span, r = 0.025 * span;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - margin) << ' ' << fmt(-maxy - margin) << ' '
    << fmt(maxx - minx + 2 * margin) << ' ' << fmt(maxy - miny + 2 * margin) << "\" width=\"480\" height=\"480\">\n";
  s << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
       "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"black\"/></marker></defs>\n";
  const GeoDigraph c = g.canonical();
  for (const Edge& e : c.edges()) {
    const Point a = c.node(e.tail).pos, b = c.node(e.head).pos;
    const double len = dist(a, b);
    // Stop the arrow at the rim of the head glyph.
    const Point tip = len > 2 * r ? b - (r / len) * (b - a) : b;
    s << "<line x1=\"" << fmt(a.x) << "\" y1=\"" << fmt(-a.y) << "\" x2=\"" << fmt(tip.x) << "\" y2=\"" << fmt(-tip.y)
      << "\" stroke=\"black\" stroke-width=\"" << fmt(0.3 * r) << "\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (const Node& n : c.nodes()) {
    s << "<circle cx=\"" << fmt(n.pos.x) << "\" cy=\"" << fmt(-n.pos.y) << "\" r=\"" << fmt(r) << "\" fill=\""
      << fill_for(n.role) << "\" stroke=\"black\" stroke-width=\"" << fmt(0.3 * r) << "\"><title>" << n.id << ' '
      << role_name(n.role) << "</title></circle>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace dirnet
