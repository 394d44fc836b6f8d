#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "dirnet/local_structure.hpp"
#include "dirnet/solver.hpp"

namespace dirnet {

LengthBound::LengthBound(const std::vector<Point>& terminals, const Norm& n)
    : terminals_(static_cast<int>(terminals.size())) {
  const int T = terminals_;
  if (T > kMaxSlots) throw ResourceLimitError("LengthBound: too many terminals");
  pair_.assign(T * T, 0.0);
  for (int i = 0; i < T; ++i)
    for (int j = 0; j < T; ++j) pair_[i * T + j] = n(terminals[j] - terminals[i]);
  // Any connected subnetwork through a set of terminals is at least as long as the longest pair
  // distance and, in the Euclidean plane, at least as long as the Steiner tree of any three of them.
  std::vector<double> local(std::size_t{1} << T, 0.0);
  for (int i = 0; i < T; ++i)
    for (int j = i + 1; j < T; ++j) {
      const std::size_t m = (std::size_t{1} << i) | (std::size_t{1} << j);
      local[m] = std::max(pair_[i * T + j], pair_[j * T + i]);
      if (n.kind() != NormKind::Euclidean) continue;
      for (int k = j + 1; k < T; ++k)
        local[m | (std::size_t{1} << k)] =
            melzak_three_terminals(terminals[i], terminals[j], terminals[k]).length();
    }
  subset_.assign(local.size(), 0.0);
  for (std::size_t m = 1; m < local.size(); ++m) {
    double best = local[m];
    for (std::size_t r = m; r; r &= r - 1) best = std::max(best, subset_[m & ~(r & -r)]);
    subset_[m] = best;
  }
}

double LengthBound::operator()(const std::vector<Edge>& edges) const {
  const int T = terminals_;
  int parent[kMaxSlots];
  std::uint32_t mask[kMaxSlots];
  bool has_steiner[kMaxSlots];
  for (int i = 0; i < kMaxSlots; ++i) {
    parent[i] = i;
    mask[i] = i < T ? std::uint32_t{1} << i : 0;
    has_steiner[i] = i >= T;
  }
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  double total = 0.0;
  for (const Edge& e : edges) {
    if (e.tail < T && e.head < T) {
      total += pair_[e.tail * T + e.head];
      continue;
    }
    const int a = find(e.tail), b = find(e.head);
    if (a == b) continue;
    parent[a] = b;
    mask[b] |= mask[a];
    has_steiner[b] = true;
  }
  for (int i = 0; i < kMaxSlots; ++i)
    if (find(i) == i && has_steiner[i]) total += subset_[mask[i]];
  return total;
}

namespace {

struct Candidate {
  bool set = false;
  double length = 0.0;
  std::size_t edge_count = 0;
  std::string encoding;
  GeoDigraph network;
};

bool better(const Candidate& c, const Candidate& best, double tol) {
  if (!best.set) return true;
  if (c.length < best.length - tol) return true;
  if (c.length > best.length + tol) return false;
  if (c.edge_count != best.edge_count) return c.edge_count < best.edge_count;
  return c.encoding < best.encoding;
}

GeoDigraph post_process(const GeoDigraph& g) { return simplify(merge_close_nodes(g, 1e-7)); }

}  // namespace

SolveResult solve(const Instance& inst, const SolveOptions& opts) {
  if (inst.sources.empty() || inst.sinks.empty()) throw PreconditionError("solve: sources and sinks must be nonempty");
  for (Point p : inst.sources) require_finite(p, "solve");
  for (Point p : inst.sinks) require_finite(p, "solve");
  if (!(opts.tol > 0) || !std::isfinite(opts.tol)) throw PreconditionError("solve: tol must be positive");
  if (opts.threads < 1) throw PreconditionError("solve: threads must be at least 1");

  const TerminalLayout layout = layout_terminals(inst);
  const int T = static_cast<int>(layout.positions.size());
  const int k_max = opts.k_max >= 0 ? opts.k_max
                                    : steiner_cap(static_cast<int>(inst.sources.size()),
                                                  static_cast<int>(inst.sinks.size()));
  if (T + k_max > kMaxSlots)
    throw ResourceLimitError("solve: " + std::to_string(T) + " terminals with k_max " + std::to_string(k_max) +
                             " exceed the " + std::to_string(kMaxSlots) + "-slot search limit");

  const Norm& norm = inst.norm;
  const bool euclid = norm.kind() == NormKind::Euclidean;
  double scale = 0.0;
  for (Point p : layout.positions)
    for (Point q : layout.positions) scale = std::max(scale, norm(q - p));
  const double slack = opts.tol + 1e-12 * std::max(scale, 1.0);

  SolveResult result;
  result.k_max = k_max;
  Candidate best;

  // Every terminal on one point: the empty network is shortest.
  if (T == 1) {
    result.best = GeoDigraph({{0, layout.roles[0], layout.positions[0]}}, {});
    return result;
  }

  const LengthBound bound(layout.positions, norm);
  double upper = INFINITY;
  std::uint64_t budget_left = opts.node_budget;
  std::uint64_t topology_index = 0;

  for (int k = 0; k <= k_max; ++k) {
    constexpr std::size_t kBatch = 64;
    std::vector<Topology> batch;
    std::vector<OptimizeResult> optimized;

    auto flush = [&] {
      optimized.assign(batch.size(), {});
      auto work = [&](std::size_t first) {
        for (std::size_t i = first; i < batch.size(); i += static_cast<std::size_t>(opts.threads)) {
          std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ULL * (topology_index + i + 1)));
          std::uniform_real_distribution<double> jitter(-1.0, 1.0);
          Point c{0, 0};
          for (Point p : layout.positions) c = c + p;
          c = c / static_cast<double>(T);
          std::vector<Point> init;
          for (int j = 0; j < batch[i].steiner_count; ++j)
            init.push_back(c + Point{jitter(rng), jitter(rng)} * (1e-2 * std::max(scale, 1e-300)));
          optimized[i] = optimize_positions(batch[i], layout.positions, norm, opts.tol, &init);
        }
      };
      if (opts.threads == 1 || batch.size() < 2) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < opts.threads; ++w) pool.emplace_back(work, static_cast<std::size_t>(w));
      }
      // Sequential reduction in enumeration order keeps the answer independent of the thread count.
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const Topology& t = batch[i];
        const double len = optimized[i].length;
        ++result.topologies_optimized;
        if (opts.trace) result.trace.push_back({t.steiner_count, t.encoding(), len});
        if (best.set && len > best.length + opts.tol) continue;
        Candidate c;
        c.set = true;
        c.network = post_process(realize(t, layout.positions, optimized[i].steiner));
        c.length = length(c.network, norm);
        c.edge_count = c.network.edges().size();
        c.encoding = t.encoding();
        if (better(c, best, opts.tol)) best = std::move(c);
      }
      if (best.set) upper = std::min(upper, best.length);
      topology_index += batch.size();
      batch.clear();
    };

    const PartialPrune prune = [&](const std::vector<Edge>& edges) { return bound(edges) > upper + slack; };
    EnumerationStats stats;
    try {
      stats = for_each_topology(
          layout.roles, k, euclid,
          [&](const Topology& t) {
            ++result.topologies_examined;
            if (bound(t.edges) > upper + slack) return;
            batch.push_back(t);
            if (batch.size() == kBatch) flush();
          },
          prune, budget_left);
    } catch (const ResourceLimitError&) {
      throw ResourceLimitError("solve: topology search exceeded the node budget at k = " + std::to_string(k));
    }
    flush();
    result.search_nodes += stats.search_nodes;
    budget_left -= std::min(budget_left, stats.search_nodes);
  }

  if (!best.set) throw PreconditionError("solve: no admissible topology");
  result.best = best.network;
  result.length = best.length;
  return result;
}

bool verify_optimal_star(const GeoDigraph& star, double tol, int k_max) {
  std::vector<int> steiner;
  for (const Node& n : star.nodes())
    if (n.role == NodeRole::Steiner) steiner.push_back(n.id);
  if (steiner.size() != 1) throw PreconditionError("verify_optimal_star: expected exactly one Steiner point");
  const int s = steiner[0];
  const Point o = star.node(s).pos;
  Instance inst;
  for (const Edge& e : star.edges()) {
    if (e.tail != s && e.head != s) throw PreconditionError("verify_optimal_star: edge not incident to the center");
    const int other = e.tail == s ? e.head : e.tail;
    const Point d = star.node(other).pos - o;
    if (euclid(d) == 0.0) throw PreconditionError("verify_optimal_star: terminal on the center");
    (e.head == s ? inst.sources : inst.sinks).push_back(o + unit(d));
  }
  for (const Node& n : star.nodes())
    if (n.id != s && star.degree(n.id).indeg + star.degree(n.id).outdeg != 1)
      throw PreconditionError("verify_optimal_star: every terminal must have exactly one edge");
  if (inst.sources.empty() || inst.sinks.empty())
    throw PreconditionError("verify_optimal_star: the center needs in- and out-edges");
  SolveOptions opts;
  opts.k_max = k_max;
  const SolveResult r = solve(inst, opts);
  return std::abs(r.length - static_cast<double>(star.edges().size())) <= tol;
}

}  // namespace dirnet
