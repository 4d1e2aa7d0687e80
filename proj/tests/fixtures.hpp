#ifndef LIQD_TESTS_FIXTURES_HPP
#define LIQD_TESTS_FIXTURES_HPP

#include "liqd/election.hpp"

namespace liqd::testing {

// Two delegators p, q; casters r ("Yes" first) and s ("No" first);
// t registered but silent.
inline Election fig1a() {
  Election e;
  e.alternatives = {"Yes", "No"};
  e.ballots = {{"r", {"Yes", "No"}}, {"s", {"No", "Yes"}}};
  e.delegations = {{"p", {"q", "r"}}, {"q", {"t", "s"}}};
  e.registered = {"p", "q", "r", "s", "t"};
  return e;
}

// fig1a after t starts delegating with ranking [p, r]; the graph now
// has the cycle p -> q -> t -> p.
inline Election fig1b() {
  Election e = fig1a();
  e.delegations.push_back({"t", {"p", "r"}});
  return e;
}

}  // namespace liqd::testing

#endif
