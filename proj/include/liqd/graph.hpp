#ifndef LIQD_GRAPH_HPP
#define LIQD_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liqd/election.hpp"

namespace liqd {

struct WeightedEdge {
  VoterId from;
  VoterId to;
  int weight;  // 1-based rank of `to` in `from`'s delegation ranking

  bool operator==(const WeightedEdge&) const = default;
};

/// Weighted directed delegation graph. Immutable after construction;
/// out-edges of a node are kept sorted by ascending weight.
class DelegationGraph {
 public:
  DelegationGraph() = default;
  DelegationGraph(std::vector<VoterId> nodes, std::vector<WeightedEdge> edges);

  const std::vector<VoterId>& nodes() const { return nodes_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  bool has_node(const VoterId& v) const { return out_.count(v) != 0; }

  /// Successors of `v` as (target, weight), ascending by weight.
  /// Empty for nodes without outgoing edges and for unknown nodes.
  const std::vector<std::pair<VoterId, int>>& successors(const VoterId& v) const;

 private:
  std::vector<VoterId> nodes_;
  std::vector<WeightedEdge> edges_;
  std::map<VoterId, std::vector<std::pair<VoterId, int>>> out_;
};

/// The delegation graph function g: one edge per entry of each
/// delegating voter's ranking, weighted by rank position. Voters not
/// classified delegating contribute no edges.
DelegationGraph build_graph(const Election& e, const ElectoratePartition& part);

/// Directed cycle detection. Returns a witness node sequence
/// v0, v1, ..., v0 when a cycle exists.
std::optional<std::vector<VoterId>> find_cycle(const DelegationGraph& g);

inline bool has_cycle(const DelegationGraph& g) { return find_cycle(g).has_value(); }

/// Casting voters reachable from `i` along paths whose intermediate
/// nodes are all delegating voters.
std::set<VoterId> reachable_casters(const DelegationGraph& g, const VoterId& i,
                                    const ElectoratePartition& part);

/// Graphviz DOT rendering with edge labels = weights. Casting voters
/// are drawn as double circles, abstainers dashed.
std::string to_dot(const DelegationGraph& g, const ElectoratePartition& part);

}  // namespace liqd

#endif
