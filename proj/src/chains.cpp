#include "liqd/chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liqd {

bool DelegationChain::contains(const VoterId& v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

Ordering lex_compare(const std::vector<int>& a, const std::vector<int>& b) {
  auto cmp = std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                    b.begin(), b.end());
  if (cmp < 0) return Ordering::Less;
  if (cmp > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Ordering bfd_compare(const DelegationChain& a, const DelegationChain& b) {
  if (a.delegator() != b.delegator())
    throw std::invalid_argument("bfd_compare: chains of different delegators");
  if (a.nodes.size() != b.nodes.size())
    return a.nodes.size() < b.nodes.size() ? Ordering::Less : Ordering::Greater;
  return lex_compare(a.weights, b.weights);
}

std::vector<DelegationChain> enumerate_chains(const DelegationGraph& g,
                                              const VoterId& i,
                                              const ElectoratePartition& part) {
  if (!part.delegating.count(i))
    throw std::invalid_argument("enumerate_chains: " + i + " is not delegating");

  std::vector<DelegationChain> out;
  DelegationChain current;
  current.nodes.push_back(i);

  auto walk = [&](auto&& self, const VoterId& v) -> void {
    for (const auto& [next, w] : g.successors(v)) {
      if (current.contains(next)) continue;  // simplicity (Def. 3a)
      current.weights.push_back(w);
      current.nodes.push_back(next);
      if (part.casting.count(next))
        out.push_back(current);
      else if (part.delegating.count(next))
        self(self, next);
      // abstainer: dead end, chain invalid
      current.nodes.pop_back();
      current.weights.pop_back();
    }
  };
  walk(walk, i);

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return lex_compare(a.weights, b.weights) == Ordering::Less;
  });
  return out;
}

std::string format_chain(const DelegationChain& c) {
  std::ostringstream os;
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    if (k) os << " -> ";
    os << c.nodes[k];
  }
  os << " [";
  for (std::size_t k = 0; k < c.weights.size(); ++k) {
    if (k) os << ",";
    os << c.weights[k];
  }
  os << "]";
  return os.str();
}

}  // namespace liqd
