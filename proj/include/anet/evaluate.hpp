#ifndef ANET_EVALUATE_HPP
#define ANET_EVALUATE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "anet/formula.hpp"
#include "anet/structures.hpp"

namespace anet {

/// md(T) = md(P) = 0, negation transparent, max over conjunction, +1 per diamond.
unsigned modal_depth(const ModalFormula& phi);

/// A modal formula resolved against a signature and flattened into a
/// post-order program over its distinct subformulas, so that shared DAG
/// nodes are evaluated once. Evaluation labels every node of the model at
/// once (classic model-checking labelling).
class ModalChecker {
 public:
  /// InputError if a symbol is missing from the signature.
  ModalChecker(const Signature& signature, const ModalFormula& phi);

  /// Truth value at every node, in domain order. The model's signature must
  /// equal the one the checker was built for.
  std::vector<bool> evaluate(const Model& model) const;

 private:
  struct Instruction {
    ModalFormula::Kind kind;
    SymbolIndex symbol = 0;
    std::size_t a = 0;
    std::size_t b = 0;
  };
  Signature signature_;
  std::vector<Instruction> program_;
};

std::vector<bool> satisfying_nodes(const Model& model, const ModalFormula& phi);
bool eval_modal(const PointedModel& m, const ModalFormula& phi);

/// True iff both pointed models give phi the same truth value.
bool agree_on_formula(const PointedModel& m1, const PointedModel& m2, const ModalFormula& phi);

/// Partial map VAR -> domain.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const std::string, NodeId>> init) : map_(init) {}

  /// f[x -> v]
  Assignment with(const std::string& x, NodeId v) const;
  std::optional<NodeId> lookup(const std::string& x) const;
  const std::map<std::string, NodeId>& entries() const { return map_; }

 private:
  std::map<std::string, NodeId> map_;
};

/// InputError if a free variable of phi is unassigned, an assigned node is
/// outside the domain, or a symbol is unknown.
bool eval_fo(const Model& model, const Assignment& f, const FoFormula& phi);

/// St_x. Bound variables are y_0, y_1, ... in the order diamonds are met
/// (pre-order), skipping any name equal to x.
FoFormula standard_translation(const ModalFormula& phi, const std::string& x);

}  // namespace anet

#endif  // ANET_EVALUATE_HPP
