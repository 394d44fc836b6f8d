#include <algorithm>
#include <array>
#include <cstdint>
#include <set>

#include "dirnet/solver.hpp"

namespace dirnet {

DegreePair Topology::degree(int slot) const {
  DegreePair d;
  for (const Edge& e : edges) {
    if (e.head == slot) ++d.indeg;
    if (e.tail == slot) ++d.outdeg;
  }
  return d;
}

namespace {

std::vector<Edge> canonical_edges(int terminals, int steiner_count, const std::vector<Edge>& edges) {
  std::vector<int> perm(steiner_count);
  for (int i = 0; i < steiner_count; ++i) perm[i] = i;
  std::vector<Edge> best;
  do {
    std::vector<Edge> mapped;
    mapped.reserve(edges.size());
    auto m = [&](int v) { return v < terminals ? v : terminals + perm[v - terminals]; };
    for (const Edge& e : edges) mapped.push_back({m(e.tail), m(e.head)});
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = std::move(mapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::string Topology::encoding() const {
  std::string out;
  for (const Edge& e : canonical_edges(static_cast<int>(terminals.size()), steiner_count, edges)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.tail) + '>' + std::to_string(e.head);
  }
  return out;
}

namespace {

using Mask = std::uint32_t;
static_assert(kMaxSlots <= 32);

// Depth-first include/exclude search over candidate edges in tail-major order.
class TopologySearch {
 public:
  TopologySearch(const std::vector<NodeRole>& terminals, int k, bool euclidean_table,
                 const std::function<void(const Topology&)>& visit, const PartialPrune& prune, std::uint64_t budget)
      : roles_(terminals), T_(static_cast<int>(terminals.size())), K_(k), N_(T_ + k),
        euclid_(euclidean_table), visit_(visit), prune_(prune), budget_(budget) {
    for (int i = 0; i < T_; ++i) {
      if (is_source(roles_[i])) sources_ |= Mask{1} << i;
      if (is_sink(roles_[i])) sinks_ |= Mask{1} << i;
    }
    for (int u = 0; u < N_; ++u)
      for (int v = 0; v < N_; ++v)
        if (u != v) order_.push_back({u, v});
    for (int u = 0; u < N_; ++u) {
      for (int v = 0; v < N_; ++v)
        if (u != v) {
          cand_[u] |= Mask{1} << v;
          cand_rev_[v] |= Mask{1} << u;
        }
      cand_in_[u] = cand_out_[u] = N_ - 1;
      const bool steiner = u >= T_;
      cap_[u] = steiner && euclid_ ? 3 : N_ - 1;
    }
  }

  EnumerationStats run() {
    Mask reach[kMaxSlots];
    for (int v = 0; v < N_; ++v) reach[v] = Mask{1} << v;
    if (cand_feasible()) dfs(0, reach);
    return stats_;
  }

 private:
  void closure(const Mask* adj, Mask* reach) const {
    for (int v = 0; v < N_; ++v) reach[v] = adj[v] | (Mask{1} << v);
    for (int k = 0; k < N_; ++k)
      for (int i = 0; i < N_; ++i)
        if (reach[i] >> k & 1) reach[i] |= reach[k];
  }

  bool valid(const Mask* reach) const {
    for (Mask s = sources_; s; s &= s - 1)
      if ((reach[__builtin_ctz(s)] & sinks_) != sinks_) return false;
    return true;
  }

  Mask forward(const Mask* adj, Mask from) const {
    Mask seen = from, frontier = from;
    while (frontier) {
      const int w = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      const Mask nx = adj[w] & ~seen;
      seen |= nx;
      frontier |= nx;
    }
    return seen;
  }

  // Can every source still reach every sink, and can every fixed edge and Steiner slot still lie
  // on a source-to-sink route, using fixed and undecided edges?
  bool cand_feasible() const {
    for (int s = T_; s < N_; ++s) {
      if (cand_in_[s] < 1 || cand_out_[s] < 1 || cand_in_[s] + cand_out_[s] < 3) return false;
      if (euclid_ && ((inc_in_[s] == 3 && cand_out_[s] < 2) || (inc_out_[s] == 3 && cand_in_[s] < 2))) return false;
    }
    Mask from_source = 0;
    for (Mask s = sources_; s; s &= s - 1) {
      const Mask r = forward(cand_, Mask{1} << __builtin_ctz(s));
      if ((r & sinks_) != sinks_) return false;
      from_source |= r;
    }
    const Mask to_sink = forward(cand_rev_, sinks_);
    const Mask steiner = ((Mask{1} << N_) - 1) & ~((Mask{1} << T_) - 1);
    if ((from_source & to_sink & steiner) != steiner) return false;
    for (const Edge& e : included_)
      if (!(from_source >> e.tail & 1) || !(to_sink >> e.head & 1)) return false;
    return true;
  }

  // After adding (u,v), is some other fixed edge implied by a path avoiding it?
  bool creates_redundancy(int u, int v, const Mask* reach) const {
    for (const Edge& e : included_) {
      if (e.tail == u && e.head == v) continue;
      if (!(reach[e.tail] >> u & 1) || !(reach[v] >> e.head & 1)) continue;
      Mask adj[kMaxSlots];
      std::copy(inc_, inc_ + N_, adj);
      adj[e.tail] &= ~(Mask{1} << e.head);
      if (forward(adj, Mask{1} << e.tail) >> e.head & 1) return true;
    }
    return false;
  }

  void leaf() {
    for (int s = T_; s < N_; ++s) {
      const DegreePair d{inc_in_[s], inc_out_[s]};
      if (d.indeg < 1 || d.outdeg < 1 || d.indeg + d.outdeg < 3) return;
      if (euclid_ && !in_degree_table(d)) return;
    }
    // Every edge must be needed.
    Mask adj[kMaxSlots], reach[kMaxSlots];
    std::copy(inc_, inc_ + N_, adj);
    for (const Edge& e : included_) {
      adj[e.tail] &= ~(Mask{1} << e.head);
      closure(adj, reach);
      adj[e.tail] |= Mask{1} << e.head;
      if (valid(reach)) return;
    }
    Topology t{roles_, K_, included_};
    if (K_ >= 2) {
      if (!seen_.insert(canonical_edges(T_, K_, included_)).second) return;
    }
    ++stats_.emitted;
    visit_(t);
  }

  void dfs(std::size_t idx, const Mask* reach) {
    if (++stats_.search_nodes > budget_) throw ResourceLimitError("topology search exceeded its node budget");
    if (valid(reach)) {
      leaf();
      return;
    }
    if (idx == order_.size()) return;
    const auto [u, v] = order_[idx];
    const Mask bit = Mask{1} << v;

    // Include branch.
    const bool symmetric_ok = !(u < T_ && v >= T_) || v - T_ <= touched_;
    if (symmetric_ok && !(reach[u] & bit) && inc_out_[u] < cap_[u] && inc_in_[v] < cap_[v]) {
      Mask next[kMaxSlots];
      for (int x = 0; x < N_; ++x) next[x] = (reach[x] >> u & 1) ? reach[x] | reach[v] : reach[x];
      inc_[u] |= bit;
      ++inc_out_[u];
      ++inc_in_[v];
      included_.push_back({u, v});
      const int saved_touched = touched_;
      if (u < T_ && v >= T_ && v - T_ == touched_) ++touched_;
      if (!creates_redundancy(u, v, next) && cand_feasible() && !(prune_ && prune_(included_))) dfs(idx + 1, next);
      touched_ = saved_touched;
      included_.pop_back();
      --inc_in_[v];
      --inc_out_[u];
      inc_[u] &= ~bit;
    }

    // Exclude branch.
    cand_[u] &= ~bit;
    cand_rev_[v] &= ~(Mask{1} << u);
    --cand_out_[u];
    --cand_in_[v];
    if (cand_feasible()) dfs(idx + 1, reach);
    ++cand_in_[v];
    ++cand_out_[u];
    cand_rev_[v] |= Mask{1} << u;
    cand_[u] |= bit;
  }

  std::vector<NodeRole> roles_;
  int T_, K_, N_;
  bool euclid_;
  const std::function<void(const Topology&)>& visit_;
  const PartialPrune& prune_;
  std::uint64_t budget_;

  Mask sources_ = 0, sinks_ = 0;
  std::vector<Edge> order_;
  Mask inc_[kMaxSlots] = {}, cand_[kMaxSlots] = {}, cand_rev_[kMaxSlots] = {};
  int inc_in_[kMaxSlots] = {}, inc_out_[kMaxSlots] = {};
  int cand_in_[kMaxSlots] = {}, cand_out_[kMaxSlots] = {};
  int cap_[kMaxSlots] = {};
  // Steiner slots reached from terminal tails so far; they must appear in slot order.
  int touched_ = 0;
  std::vector<Edge> included_;
  std::set<std::vector<Edge>> seen_;
  EnumerationStats stats_;
};

}  // namespace

EnumerationStats for_each_topology(const std::vector<NodeRole>& terminals, int steiner_count, bool euclidean_table,
                                   const std::function<void(const Topology&)>& visit, const PartialPrune& prune,
                                   std::uint64_t node_budget) {
  if (terminals.empty() || steiner_count < 0) throw PreconditionError("for_each_topology: bad slot counts");
  if (static_cast<int>(terminals.size()) + steiner_count > kMaxSlots)
    throw ResourceLimitError("topology search limited to " + std::to_string(kMaxSlots) + " slots");
  bool any_source = false, any_sink = false;
  for (NodeRole r : terminals) {
    any_source |= is_source(r);
    any_sink |= is_sink(r);
    if (!is_terminal(r)) throw PreconditionError("for_each_topology: terminal slots need terminal roles");
  }
  if (!any_source || !any_sink) throw PreconditionError("for_each_topology: need at least one source and one sink");
  TopologySearch search(terminals, steiner_count, euclidean_table, visit, prune, node_budget);
  return search.run();
}

std::vector<Topology> enumerate_topologies(int num_sources, int num_sinks, int k_max, NormKind kind) {
  if (num_sources < 1 || num_sinks < 1 || k_max < 0) throw PreconditionError("enumerate_topologies: bad counts");
  std::vector<NodeRole> roles(num_sources, NodeRole::Source);
  roles.insert(roles.end(), num_sinks, NodeRole::Sink);
  std::vector<Topology> out;
  for (int k = 0; k <= k_max; ++k)
    for_each_topology(roles, k, kind == NormKind::Euclidean, [&](const Topology& t) { out.push_back(t); });
  return out;
}

}  // namespace dirnet
