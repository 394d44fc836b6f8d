#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dirnet/digraph.hpp"

namespace dirnet {

// Slots [0, terminals.size()) are terminals, the following steiner_count slots are Steiner points.
struct Topology {
  std::vector<NodeRole> terminals;
  int steiner_count = 0;
  std::vector<Edge> edges;

  int slot_count() const { return static_cast<int>(terminals.size()) + steiner_count; }
  DegreePair degree(int slot) const;
  // Sorted edge list minimized over Steiner-slot relabelings, printed as "t>h,t>h,...".
  std::string encoding() const;
};

// Largest terminal + Steiner slot count the exhaustive search accepts.
constexpr int kMaxSlots = 12;

struct EnumerationStats {
  std::uint64_t search_nodes = 0;
  std::uint64_t emitted = 0;
};

// Called with the edges fixed so far; returning true discards every completion.
using PartialPrune = std::function<bool(const std::vector<Edge>&)>;

// Visits every edge-minimal simple topology with exactly `steiner_count` Steiner slots whose
// reachability makes it an (A,B)-network, once per Steiner relabeling class. Non-minimal
// topologies are skipped: deleting a redundant edge never lengthens a network.
EnumerationStats for_each_topology(const std::vector<NodeRole>& terminals, int steiner_count, bool euclidean_table,
                                   const std::function<void(const Topology&)>& visit, const PartialPrune& prune = {},
                                   std::uint64_t node_budget = UINT64_MAX);

std::vector<Topology> enumerate_topologies(int num_sources, int num_sinks, int k_max, NormKind kind);

struct OptimizeResult {
  std::vector<Point> steiner;
  double length = 0.0;
  bool converged = true;
  int iterations = 0;
};

// Minimizes total length over Steiner positions for a fixed topology. `initial` may seed the
// Steiner positions; otherwise they start near the terminal centroid.
OptimizeResult optimize_positions(const Topology& t, const std::vector<Point>& terminal_positions, const Norm& n,
                                  double tol = 1e-9, const std::vector<Point>* initial = nullptr);
OptimizeResult optimize_positions(const Topology& t, const std::vector<Point>& sources,
                                  const std::vector<Point>& sinks, const Norm& n, double tol = 1e-9);

GeoDigraph realize(const Topology& t, const std::vector<Point>& terminal_positions,
                   const std::vector<Point>& steiner_positions);

struct SolveOptions {
  int k_max = -1;  // negative: steiner_cap of the instance
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int threads = 1;
  bool trace = false;
  std::uint64_t node_budget = 2'000'000'000ULL;
};

struct TraceEntry {
  int steiner_count = 0;
  std::string encoding;
  double length = 0.0;
};

struct SolveResult {
  GeoDigraph best;
  double length = 0.0;
  int k_max = 0;
  std::uint64_t topologies_examined = 0;
  std::uint64_t topologies_optimized = 0;
  std::uint64_t search_nodes = 0;
  std::vector<TraceEntry> trace;
};

SolveResult solve(const Instance& inst, const SolveOptions& opts = {});

// Lower bound on the length of any network containing the given edges, from terminal distances.
// Exposed for tests of the branch-and-bound pruning.
class LengthBound {
 public:
  LengthBound(const std::vector<Point>& terminals, const Norm& n);
  double operator()(const std::vector<Edge>& edges) const;

 private:
  int terminals_ = 0;
  std::vector<double> pair_;     // terminals_ x terminals_
  std::vector<double> subset_;   // indexed by terminal bitmask
};

// Rescales every terminal of a one-Steiner-point star onto the unit circle around the Steiner
// point and checks that no network on that configuration is shorter than the star.
bool verify_optimal_star(const GeoDigraph& star, double tol = 1e-6, int k_max = 2);

}  // namespace dirnet
