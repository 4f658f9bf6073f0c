#ifndef ANET_TESTS_CORPUS_HPP
#define ANET_TESTS_CORPUS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "anet/formula.hpp"
#include "anet/structures.hpp"
#include "anet/word.hpp"

namespace anet::testing {

using Rng = std::mt19937_64;

// {"P","Q",...} x {"R","S",...}
Signature small_signature(std::size_t unary, std::size_t binary);

// Number of models with exactly `nodes` nodes over sig, counting every
// labelling and every subset of pairs (loops included).
std::uint64_t model_count(const Signature& sig, std::size_t nodes);

// The index-th such model; nodes are named "0".."nodes-1". Label bits come
// first, then edges row by row, relation by relation.
Model decode_model(const Signature& sig, std::size_t nodes, std::uint64_t index);

// Calls fn on every model with 1..max_nodes nodes.
void for_each_model(const Signature& sig, std::size_t max_nodes,
                    const std::function<void(const Model&)>& fn);

Model random_model(Rng& rng, const Signature& sig, std::size_t nodes, double label_p = 0.5,
                   double edge_p = 0.3);

// Random symmetric irreflexive graph over the walk signature. Most nodes get
// one P and one Q label; the rest get arbitrary label sets.
Model random_walk_model(Rng& rng, std::size_t nodes, double edge_p = 0.4, double proper_p = 0.8);

Word random_word(Rng& rng, std::size_t length);

// Nodes "0".."length-1" with R(i, i+1); no labels. The head is node 0.
Model directed_chain(std::size_t length);

// Uniform over kinds at each level; depth counts diamonds.
ModalFormula random_modal(Rng& rng, const Signature& sig, unsigned max_depth,
                          unsigned max_size = 12);

// A valid PN(n)-structure: random simple graph of maximum degree n with
// random port numbers.
Model random_pn_structure(Rng& rng, unsigned n, std::size_t nodes);

}  // namespace anet::testing

#endif  // ANET_TESTS_CORPUS_HPP
