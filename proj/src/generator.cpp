#include "liqd/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace liqd {

namespace {

// Modulo reduction keeps draws identical on every platform;
// std::uniform_int_distribution is implementation-defined.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() % 1000000) < p * 1000000.0;
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& xs) {
  for (std::size_t i = xs.size(); i > 1; --i)
    std::swap(xs[i - 1], xs[bounded(rng, i)]);
}

}  // namespace

Election generate(const GeneratorConfig& config) {
  if (config.n_voters < 1) throw std::invalid_argument("n_voters must be >= 1");
  if (config.n_alternatives < 1)
    throw std::invalid_argument("n_alternatives must be >= 1");
  if (config.max_ranking_len < 1)
    throw std::invalid_argument("max_ranking_len must be >= 1");
  double frac_sum =
      config.frac_casting + config.frac_delegating + config.frac_abstaining;
  if (std::abs(frac_sum - 1.0) > 0.01)
    throw std::invalid_argument("electorate fractions must sum to 1");

  const int n = config.n_voters;
  int n_cast = static_cast<int>(std::lround(config.frac_casting * n));
  int n_del = static_cast<int>(std::lround(config.frac_delegating * n));
  if (n_cast + n_del > n) n_del = n - n_cast;
  const int n_abs = n - n_cast - n_del;

  if (config.dag_only && n_del > 0 && n_cast == 0)
    throw std::invalid_argument(
        "infeasible: dag_only with delegators but no casting voters");
  if (n_del == n && n > 0 && config.dag_only)
    throw std::invalid_argument(
        "infeasible: dag_only requires a non-delegating sink");

  std::mt19937_64 rng(config.seed);

  Election e;
  for (int a = 0; a < config.n_alternatives; ++a)
    e.alternatives.push_back("A" + std::to_string(a));

  std::vector<VoterId> order;
  for (int v = 0; v < n; ++v) order.push_back("v" + std::to_string(v));
  shuffle(rng, order);
  e.registered = order;

  // dag_only places all delegators first so each can target strictly
  // later voters; that forward orientation rules out cycles.
  std::vector<VoterId> delegators(order.begin(), order.begin() + n_del);
  std::vector<VoterId> casters(order.begin() + n_del,
                               order.begin() + n_del + n_cast);
  (void)n_abs;

  for (const auto& v : casters) {
    AlternativeRanking ballot{v, e.alternatives};
    shuffle(rng, ballot.ranked);
    e.ballots.push_back(std::move(ballot));
  }

  for (int idx = 0; idx < n_del; ++idx) {
    const VoterId& v = delegators[idx];
    std::vector<VoterId> pool;
    if (config.dag_only) {
      pool.assign(order.begin() + idx + 1, order.end());
    } else {
      for (const auto& other : order)
        if (other != v) pool.push_back(other);
    }
    if (pool.empty())
      throw std::invalid_argument("infeasible: no delegation targets for " + v);

    int len = 1 + static_cast<int>(bounded(rng, config.max_ranking_len));
    len = std::min<int>(len, static_cast<int>(pool.size()));

    VoterRanking ranking{v, {}};
    for (int k = 0; k < len; ++k) {
      std::vector<const VoterId*> preferred;
      if (!config.dag_only && chance(rng, config.cycle_bias)) {
        for (const auto& d : delegators)
          if (d != v &&
              std::find(ranking.ranked.begin(), ranking.ranked.end(), d) ==
                  ranking.ranked.end())
            preferred.push_back(&d);
      }
      if (preferred.empty()) {
        for (const auto& t : pool)
          if (std::find(ranking.ranked.begin(), ranking.ranked.end(), t) ==
              ranking.ranked.end())
            preferred.push_back(&t);
      }
      if (preferred.empty()) break;
      ranking.ranked.push_back(*preferred[bounded(rng, preferred.size())]);
    }
    e.delegations.push_back(std::move(ranking));
  }

  return e;
}

}  // namespace liqd
