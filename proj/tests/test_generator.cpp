#include <doctest.h>

#include <stdexcept>

#include "liqd/generator.hpp"
#include "liqd/graph.hpp"

using namespace liqd;

TEST_CASE("same seed, same election") {
  GeneratorConfig config;
  config.seed = 1;
  config.n_voters = 5;
  CHECK(generate(config) == generate(config));
  config.seed = 2;
  CHECK_FALSE(generate(GeneratorConfig{.seed = 1, .n_voters = 5}) ==
              generate(config));
}

TEST_CASE("output always validates") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.n_voters = 1 + static_cast<int>(seed % 9);
    config.n_alternatives = 1 + static_cast<int>(seed % 4);
    config.cycle_bias = (seed % 10) / 10.0;
    CHECK(validate(generate(config)).ok());
  }
}

TEST_CASE("dag_only emits only acyclic graphs") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.n_voters = 3 + static_cast<int>(seed % 7);
    config.dag_only = true;
    Election e = generate(config);
    auto part = classify(e);
    CHECK_FALSE(has_cycle(build_graph(e, part)));
  }
}

TEST_CASE("a strong cycle bias produces cyclic graphs quickly") {
  int cyclic = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig config;
    config.seed = seed;
    config.n_voters = 5;
    config.cycle_bias = 0.9;
    Election e = generate(config);
    auto part = classify(e);
    if (has_cycle(build_graph(e, part))) ++cyclic;
  }
  CHECK(cyclic > 10);
}

TEST_CASE("electorate sizes track the fractions") {
  GeneratorConfig config;
  config.seed = 5;
  config.n_voters = 10;
  config.frac_casting = 0.5;
  config.frac_delegating = 0.3;
  config.frac_abstaining = 0.2;
  auto part = classify(generate(config));
  CHECK(std::abs(static_cast<int>(part.casting.size()) - 5) <= 1);
  CHECK(std::abs(static_cast<int>(part.delegating.size()) - 3) <= 1);
}

TEST_CASE("infeasible configs are rejected") {
  GeneratorConfig config;
  config.n_voters = 4;
  config.frac_casting = 0.0;
  config.frac_delegating = 1.0;
  config.frac_abstaining = 0.0;
  config.dag_only = true;
  CHECK_THROWS_AS(generate(config), std::invalid_argument);

  GeneratorConfig bad_fracs;
  bad_fracs.frac_casting = 0.9;
  bad_fracs.frac_delegating = 0.9;
  CHECK_THROWS_AS(generate(bad_fracs), std::invalid_argument);
}
