#ifndef ANET_PATH_MODEL_HPP
#define ANET_PATH_MODEL_HPP

#include "anet/structures.hpp"
#include "anet/word.hpp"

namespace anet {

/// Π = {P0,P1,Q1,Q2,Q3}, R = {R}: the signature of labelled walk networks.
const Signature& walk_signature();

/// Labelled path encoding of a nonempty word v of length k+1: nodes "0".."k",
/// symmetric edges between consecutive indices, node i in P_{v(i)} and in
/// Q_j exactly when i = j-1 (mod 3).
Model build_path_model(const Word& v);

/// Cycle of |v| nodes labelled like build_path_model, plus the closing edge.
/// Properly labelled at every node iff |v| is a positive multiple of 3.
/// InputError if |v| < 3.
Model build_cycle_model(const Word& v);

}  // namespace anet

#endif  // ANET_PATH_MODEL_HPP
