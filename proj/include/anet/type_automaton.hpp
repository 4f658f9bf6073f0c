#ifndef ANET_TYPE_AUTOMATON_HPP
#define ANET_TYPE_AUTOMATON_HPP

#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "anet/engine.hpp"
#include "anet/types.hpp"

namespace anet {

// States and messages are TypeIds of a shared table. The table is mutated
// by transit (interning), which does not change the value returned for a
// given input, so the automaton stays observationally pure.
class TypeAutomaton {
 public:
  using State = TypeId;
  using Message = TypeId;

  TypeAutomaton(TypeTable& table, std::set<TypeId> accepting, std::set<TypeId> rejecting);

  const Signature& signature() const { return table_->signature(); }
  TypeId init(LabelSet u) const { return table_->base_type(u); }
  TypeId transit(std::span<const MessageSet<TypeId>> received, TypeId current) const;
  TypeId emit(TypeId s, SymbolIndex) const { return s; }
  bool is_accepting(TypeId s) const { return accepting_.contains(s); }
  bool is_rejecting(TypeId s) const { return rejecting_.contains(s); }
  std::string render(TypeId s) const { return TypeTable::name(s); }

  TypeTable& table() const { return *table_; }

 private:
  TypeTable* table_;
  std::unordered_set<TypeId> accepting_;
  std::unordered_set<TypeId> rejecting_;
  mutable std::vector<std::vector<TypeId>> scratch_;
};

/// InputError if the sets overlap, mention ids the table did not issue, or
/// the table's signature is not sig.
TypeAutomaton make_type_automaton(const Signature& sig, std::set<TypeId> accepting,
                                  std::set<TypeId> rejecting, TypeTable& table);

}  // namespace anet

#endif  // ANET_TYPE_AUTOMATON_HPP
