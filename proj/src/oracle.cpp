#include "liqd/oracle.hpp"

namespace liqd {

std::optional<DelegationChain> oracle_min_chain(const DelegationGraph& g,
                                                const VoterId& i,
                                                const ElectoratePartition& part,
                                                RuleKind rule) {
  std::vector<DelegationChain> chains = enumerate_chains(g, i, part);
  if (chains.empty()) return std::nullopt;
  if (rule == RuleKind::DepthFirst) return chains.front();  // lex-sorted

  const DelegationChain* best = &chains.front();
  for (const auto& c : chains)
    if (bfd_compare(c, *best) == Ordering::Less) best = &c;
  return *best;
}

std::vector<OracleMismatch> oracle_compare(const Election& e, RuleKind rule) {
  auto part = classify(e);
  auto graph = build_graph(e, part);
  ResolvedProfile resolved = resolve(e, graph, part, rule);

  std::vector<OracleMismatch> mismatches;
  for (const auto& v : part.delegating) {
    const Disposition& disp = resolved.of(v);
    std::optional<VoterId> resolver_guru;
    if (disp.kind == Disposition::Kind::DelegatesTo) resolver_guru = disp.guru;

    auto expected = oracle_min_chain(graph, v, part, rule);
    std::optional<VoterId> oracle_guru;
    if (expected) oracle_guru = expected->guru();

    if (resolver_guru != oracle_guru)
      mismatches.push_back({v, resolver_guru, oracle_guru});
  }
  return mismatches;
}

}  // namespace liqd
