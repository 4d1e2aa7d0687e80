#include "liqd/rules.hpp"

#include <queue>
#include <stdexcept>

namespace liqd {

const char* to_string(RuleKind r) {
  return r == RuleKind::DepthFirst ? "dfd" : "bfd";
}

Disposition Disposition::delegates_to(DelegationChain c) {
  Disposition d;
  d.kind = Kind::DelegatesTo;
  d.guru = c.guru();
  d.chain = std::move(c);
  return d;
}

const Disposition& ResolvedProfile::of(const VoterId& v) const {
  auto it = dispositions.find(v);
  if (it == dispositions.end())
    throw std::invalid_argument("no disposition for voter " + v);
  return it->second;
}

std::optional<VoterId> ResolvedProfile::effective_guru(const VoterId& v) const {
  const Disposition& d = of(v);
  switch (d.kind) {
    case Disposition::Kind::CastsSelf: return v;
    case Disposition::Kind::DelegatesTo: return d.guru;
    case Disposition::Kind::Abstains: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Weight-ordered DFS with backtracking. Successors are visited in
// ascending weight order, so the first casting voter reached closes
// the lexicographically minimal chain.
std::optional<DelegationChain> depth_first_chain(const DelegationGraph& g,
                                                 const VoterId& start,
                                                 const ElectoratePartition& part) {
  DelegationChain current;
  current.nodes.push_back(start);

  auto walk = [&](auto&& self, const VoterId& v) -> bool {
    for (const auto& [next, w] : g.successors(v)) {
      if (current.contains(next)) continue;
      current.nodes.push_back(next);
      current.weights.push_back(w);
      if (part.casting.count(next)) return true;
      if (part.delegating.count(next) && self(self, next)) return true;
      current.nodes.pop_back();
      current.weights.pop_back();
    }
    return false;
  };

  if (walk(walk, start)) return current;
  return std::nullopt;
}

// Best-first search over simple paths ordered by (length, weight
// sequence); the first popped path ending at a casting voter is the
// bfd_compare-minimal chain. Priorities grow strictly along a path,
// so the uniform-cost argument applies.
std::optional<DelegationChain> breadth_first_chain(const DelegationGraph& g,
                                                   const VoterId& start,
                                                   const ElectoratePartition& part) {
  auto after = [](const DelegationChain& a, const DelegationChain& b) {
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return lex_compare(a.weights, b.weights) == Ordering::Greater;
  };
  std::priority_queue<DelegationChain, std::vector<DelegationChain>,
                      decltype(after)>
      frontier(after);

  DelegationChain seed;
  seed.nodes.push_back(start);
  frontier.push(std::move(seed));

  while (!frontier.empty()) {
    DelegationChain path = frontier.top();
    frontier.pop();
    const VoterId& tip = path.nodes.back();
    if (part.casting.count(tip)) return path;
    for (const auto& [next, w] : g.successors(tip)) {
      if (path.contains(next)) continue;
      if (!part.casting.count(next) && !part.delegating.count(next)) continue;
      DelegationChain extended = path;
      extended.nodes.push_back(next);
      extended.weights.push_back(w);
      frontier.push(std::move(extended));
    }
  }
  return std::nullopt;
}

}  // namespace

ResolvedProfile resolve(const Election& e, const DelegationGraph& g,
                        const ElectoratePartition& part, RuleKind rule) {
  for (const auto& v : part.delegating)
    if (!g.has_node(v))
      throw std::invalid_argument("graph/partition mismatch: missing node " + v);

  ResolvedProfile out;
  for (const auto& v : part.casting) out.dispositions[v] = Disposition::casts_self();
  for (const auto& v : part.abstaining) out.dispositions[v] = Disposition::abstains();
  for (const auto& v : part.delegating) {
    auto chain = rule == RuleKind::DepthFirst ? depth_first_chain(g, v, part)
                                              : breadth_first_chain(g, v, part);
    out.dispositions[v] =
        chain ? Disposition::delegates_to(std::move(*chain)) : Disposition::abstains();
  }
  (void)e;
  return out;
}

ResolvedProfile resolve(const Election& e, RuleKind rule) {
  auto report = validate(e);
  if (!report.ok())
    throw std::invalid_argument("invalid election: " + report.violations.front());
  auto part = classify(e);
  auto graph = build_graph(e, part);
  return resolve(e, graph, part, rule);
}

}  // namespace liqd
