#include "liqd/graph.hpp"

#include <algorithm>
#include <sstream>

namespace liqd {

DelegationGraph::DelegationGraph(std::vector<VoterId> nodes,
                                 std::vector<WeightedEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (const auto& n : nodes_) out_[n];
  for (const auto& e : edges_) out_[e.from].emplace_back(e.to, e.weight);
  for (auto& [node, succ] : out_)
    std::sort(succ.begin(), succ.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
}

const std::vector<std::pair<VoterId, int>>& DelegationGraph::successors(
    const VoterId& v) const {
  static const std::vector<std::pair<VoterId, int>> empty;
  auto it = out_.find(v);
  return it == out_.end() ? empty : it->second;
}

DelegationGraph build_graph(const Election& e, const ElectoratePartition& part) {
  std::vector<WeightedEdge> edges;
  for (const auto& d : e.delegations) {
    if (!part.delegating.count(d.owner)) continue;
    for (std::size_t x = 0; x < d.ranked.size(); ++x)
      edges.push_back({d.owner, d.ranked[x], static_cast<int>(x + 1)});
  }
  return DelegationGraph(e.voters(), std::move(edges));
}

std::optional<std::vector<VoterId>> find_cycle(const DelegationGraph& g) {
  enum Color { White, Grey, Black };
  std::map<VoterId, Color> color;
  for (const auto& n : g.nodes()) color[n] = White;

  std::vector<VoterId> path;

  // Recursive DFS; depth is bounded by the voter count.
  auto dfs = [&](auto&& self, const VoterId& v) -> std::optional<std::vector<VoterId>> {
    color[v] = Grey;
    path.push_back(v);
    for (const auto& [next, w] : g.successors(v)) {
      (void)w;
      if (color[next] == Grey) {
        auto start = std::find(path.begin(), path.end(), next);
        std::vector<VoterId> cycle(start, path.end());
        cycle.push_back(next);
        return cycle;
      }
      if (color[next] == White)
        if (auto found = self(self, next)) return found;
    }
    path.pop_back();
    color[v] = Black;
    return std::nullopt;
  };

  for (const auto& n : g.nodes())
    if (color[n] == White)
      if (auto found = dfs(dfs, n)) return found;
  return std::nullopt;
}

std::set<VoterId> reachable_casters(const DelegationGraph& g, const VoterId& i,
                                    const ElectoratePartition& part) {
  // Only delegating voters have out-edges, so plain reachability
  // already respects the intermediate-node constraint. Any walk that
  // reaches a caster contains a simple chain to it.
  std::set<VoterId> visited;
  std::vector<VoterId> stack{i};
  std::set<VoterId> casters;
  while (!stack.empty()) {
    VoterId v = stack.back();
    stack.pop_back();
    if (!visited.insert(v).second) continue;
    for (const auto& [next, w] : g.successors(v)) {
      (void)w;
      if (part.casting.count(next))
        casters.insert(next);
      else if (part.delegating.count(next))
        stack.push_back(next);
    }
  }
  return casters;
}

std::string to_dot(const DelegationGraph& g, const ElectoratePartition& part) {
  std::ostringstream os;
  os << "digraph delegation {\n";
  for (const auto& n : g.nodes()) {
    os << "  \"" << n << "\"";
    if (part.casting.count(n))
      os << " [shape=doublecircle]";
    else if (part.abstaining.count(n))
      os << " [style=dashed]";
    os << ";\n";
  }
  for (const auto& e : g.edges())
    os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=" << e.weight
       << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace liqd
