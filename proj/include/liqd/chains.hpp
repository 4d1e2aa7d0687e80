#ifndef LIQD_CHAINS_HPP
#define LIQD_CHAINS_HPP

#include <string>
#include <vector>

#include "liqd/graph.hpp"

namespace liqd {

/// Simple path from a delegator to a casting voter together with the
/// rank weights of its edges: weights[x] is the weight of the edge
/// nodes[x] -> nodes[x+1].
struct DelegationChain {
  std::vector<VoterId> nodes;
  std::vector<int> weights;

  const VoterId& delegator() const { return nodes.front(); }
  const VoterId& guru() const { return nodes.back(); }
  bool contains(const VoterId& v) const;

  bool operator==(const DelegationChain&) const = default;
};

enum class Ordering { Less, Equal, Greater };

/// Lexicographic order on weight sequences; the first strict
/// difference decides, a shared-prefix shorter sequence is Less.
/// Between chains of one delegator the prefix case never arises
/// (casting endpoints have no out-edges), but the order stays total.
Ordering lex_compare(const std::vector<int>& a, const std::vector<int>& b);

/// Chain order of the breadth-first rule: shorter chain first, equal
/// lengths ordered by lex_compare on weights. Both chains must belong
/// to the same delegator.
Ordering bfd_compare(const DelegationChain& a, const DelegationChain& b);

/// Brute-force enumeration of every delegation chain of `i`, sorted
/// by lex_compare on weights. Exponential; testing oracle only.
std::vector<DelegationChain> enumerate_chains(const DelegationGraph& g,
                                              const VoterId& i,
                                              const ElectoratePartition& part);

/// "p -> q -> s [1,2]"
std::string format_chain(const DelegationChain& c);

}  // namespace liqd

#endif
