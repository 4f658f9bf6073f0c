#ifndef ANET_THEOREM2_HPP
#define ANET_THEOREM2_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "anet/engine.hpp"

namespace anet {

// Paths labelled by Thue-Morse prefixes of lengths 5n+1 and 5n+2, observed
// at node 3n under the TM automaton.
struct Theorem2Report {
  unsigned n = 0;
  std::size_t cap = 0;
  Verdict verdict_nu;
  Verdict verdict_nu_prime;
  std::optional<std::size_t> halt_round_nu;
  std::optional<std::size_t> halt_round_nu_prime;
  bool balls_isomorphic = false;
  bool differ = false;

  bool decided() const { return verdict_nu.decided() && verdict_nu_prime.decided(); }
  /// Pretty-printed JSON, keys in a fixed order.
  std::string to_json() const;
  /// Short human-readable summary.
  std::string summary() const;
};

/// InputError unless n > 10.
Theorem2Report run_theorem2_experiment(unsigned n);

}  // namespace anet

#endif  // ANET_THEOREM2_HPP
