#ifndef LIQD_ORACLE_HPP
#define LIQD_ORACLE_HPP

#include "liqd/rules.hpp"

namespace liqd {

/// Brute-force guru assignment: enumerate every chain of `i` and take
/// the minimum under the rule's chain order. Independent of the
/// resolvers' search strategies.
std::optional<DelegationChain> oracle_min_chain(const DelegationGraph& g,
                                                const VoterId& i,
                                                const ElectoratePartition& part,
                                                RuleKind rule);

struct OracleMismatch {
  VoterId voter;
  std::optional<VoterId> resolver_guru;
  std::optional<VoterId> oracle_guru;
};

/// Compare the resolver against the enumeration oracle for every
/// delegating voter. An empty result means full agreement.
std::vector<OracleMismatch> oracle_compare(const Election& e, RuleKind rule);

}  // namespace liqd

#endif
