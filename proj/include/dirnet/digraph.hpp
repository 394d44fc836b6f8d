#pragma once

#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dirnet/norms.hpp"

namespace dirnet {

enum class NodeRole { Source, Sink, SourceAndSink, Steiner };

inline bool is_source(NodeRole r) { return r == NodeRole::Source || r == NodeRole::SourceAndSink; }
inline bool is_sink(NodeRole r) { return r == NodeRole::Sink || r == NodeRole::SourceAndSink; }
inline bool is_terminal(NodeRole r) { return r != NodeRole::Steiner; }

std::string role_name(NodeRole r);  // "source", "sink", "both", "steiner"
NodeRole parse_role(const std::string& s);

struct Node {
  int id = 0;
  NodeRole role = NodeRole::Steiner;
  Point pos;
};

struct Edge {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DegreePair {
  int indeg = 0;
  int outdeg = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

// Degree pairs a Steiner point of a shortest Euclidean network may have.
bool in_degree_table(DegreePair d);

class GeoDigraph {
 public:
  GeoDigraph() = default;
  // Throws PreconditionError on loops, duplicate edges, unknown or repeated ids, non-finite positions.
  GeoDigraph(std::vector<Node> nodes, std::vector<Edge> edges);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_node(int id) const { return index_.count(id) != 0; }
  const Node& node(int id) const;
  DegreePair degree(int id) const;
  std::vector<Edge> in_edges(int id) const;
  std::vector<Edge> out_edges(int id) const;
  bool has_edge(int tail, int head) const;
  int next_id() const;

  // Nodes sorted by id and edges sorted lexicographically.
  GeoDigraph canonical() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<int, std::size_t> index_;
};

bool structurally_equal(const GeoDigraph& a, const GeoDigraph& b);

bool is_ab_network(const GeoDigraph& g);
double length(const GeoDigraph& g, const Norm& n);

// Drops dangling Steiner points, then splices (1,1) Steiner points, until neither applies.
GeoDigraph simplify(const GeoDigraph& g);

int steiner_cap(int num_sources, int num_sinks, double multiplier = 1.0);

bool in_convex_hull_check(const GeoDigraph& g, double slack = 1e-9);

// Replaces every edge by its two-piece broken edge in a polygonal norm; new corners become
// Steiner points of degree (1,1).
GeoDigraph with_broken_edges(const GeoDigraph& g, const Norm& n);

// Reverses every edge and swaps the source and sink roles.
GeoDigraph reversed(const GeoDigraph& g);

// Merges nodes whose positions are closer than `radius`. Terminals absorb Steiner points; two
// Steiner points merge into the smaller id. Loops and duplicate edges created by the merge are dropped.
GeoDigraph merge_close_nodes(const GeoDigraph& g, double radius);

std::vector<Point> convex_hull(std::vector<Point> pts);

// A terminal configuration: the norm is the target norm for lengths.
struct Instance {
  std::vector<Point> sources;
  std::vector<Point> sinks;
  Norm norm = Norm::euclidean();
};

// Terminal slots derived from an instance: a point listed both as a source and as a sink becomes a
// single SourceAndSink slot; repeated points within one list collapse into one slot.
struct TerminalLayout {
  std::vector<Point> positions;
  std::vector<NodeRole> roles;
};

TerminalLayout layout_terminals(const Instance& inst);

}  // namespace dirnet
