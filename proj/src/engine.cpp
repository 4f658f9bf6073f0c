#include "anet/engine.hpp"

#include <algorithm>

#include "anet/type_automaton.hpp"

namespace anet {

std::string Verdict::to_string() const {
  switch (outcome) {
    case Outcome::Accept:
      return "accept@" + std::to_string(round);
    case Outcome::Reject:
      return "reject@" + std::to_string(round);
    case Outcome::Undecided:
      break;
  }
  return "undecided@" + std::to_string(round);
}

TypeAutomaton::TypeAutomaton(TypeTable& table, std::set<TypeId> accepting,
                             std::set<TypeId> rejecting)
    : table_(&table), scratch_(table.signature().binary().size()) {
  for (TypeId t : accepting) {
    if (!table.contains(t)) throw InputError("accepting type " + TypeTable::name(t) + " is unknown");
    if (rejecting.contains(t)) {
      throw InputError("type " + TypeTable::name(t) + " is both accepting and rejecting");
    }
  }
  for (TypeId t : rejecting) {
    if (!table.contains(t)) throw InputError("rejecting type " + TypeTable::name(t) + " is unknown");
  }
  accepting_.insert(accepting.begin(), accepting.end());
  rejecting_.insert(rejecting.begin(), rejecting.end());
}

TypeId TypeAutomaton::transit(std::span<const MessageSet<TypeId>> received, TypeId current) const {
  for (std::size_t r = 0; r < scratch_.size(); ++r) {
    scratch_[r].assign(received[r].begin(), received[r].end());
  }
  return table_->refine(current, scratch_);
}

TypeAutomaton make_type_automaton(const Signature& sig, std::set<TypeId> accepting,
                                  std::set<TypeId> rejecting, TypeTable& table) {
  if (!(sig == table.signature())) throw InputError("type table signature differs");
  return TypeAutomaton(table, std::move(accepting), std::move(rejecting));
}

}  // namespace anet
