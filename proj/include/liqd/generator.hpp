#ifndef LIQD_GENERATOR_HPP
#define LIQD_GENERATOR_HPP

#include <cstdint>

#include "liqd/election.hpp"

namespace liqd {

/// Knobs for the random election generator. Reproducible across
/// platforms: the stream is mt19937_64 (a fully specified engine)
/// reduced by plain modulo, never a standard distribution.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n_voters = 5;
  int n_alternatives = 2;
  double frac_casting = 0.4;
  double frac_delegating = 0.4;
  double frac_abstaining = 0.2;
  int max_ranking_len = 3;
  /// Probability mass steering each delegation pick toward fellow
  /// delegators, which is what produces cycles.
  double cycle_bias = 0.0;
  /// Restrict delegations to a topological order; emitted graphs are
  /// guaranteed acyclic.
  bool dag_only = false;
};

/// Draw one election. Always passes validate(); ballots are complete
/// rankings so every voting rule applies. Deterministic per seed.
/// Throws std::invalid_argument on infeasible configs.
Election generate(const GeneratorConfig& config);

}  // namespace liqd

#endif
