#ifndef ANET_LOCALITY_HPP
#define ANET_LOCALITY_HPP

#include "anet/engine.hpp"
#include "anet/types.hpp"

namespace anet {

struct LocalityCheck {
  bool applicable = false;  // the points share their level-n type
  bool holds = true;        // vacuously true when not applicable
};

/// If both points have the same level-n type, runs the automaton on both
/// models for n rounds and compares the states at the points round by round.
template <MessagePassingAutomaton A>
LocalityCheck check_type_determines_state(const PointedModel& m1, const PointedModel& m2,
                                          unsigned n, const A& a) {
  if (!(m1.model().signature() == m2.model().signature())) {
    throw InputError("pointed models have different signatures");
  }
  TypeTable table(m1.model().signature());
  const TypeId t1 = compute_types(m1.model(), n, table)[m1.point()];
  const TypeId t2 = compute_types(m2.model(), n, table)[m2.point()];
  if (t1 != t2) return {false, true};

  const auto trace1 = run(m1.model(), a, n);
  const auto trace2 = run(m2.model(), a, n);
  for (std::size_t m = 0; m <= n; ++m) {
    if (!(trace1.state(m, m1.point()) == trace2.state(m, m2.point()))) return {true, false};
  }
  return {true, true};
}

}  // namespace anet

#endif  // ANET_LOCALITY_HPP
