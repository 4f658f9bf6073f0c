#ifndef ANET_TM_AUTOMATON_HPP
#define ANET_TM_AUTOMATON_HPP

#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <variant>

#include "anet/engine.hpp"
#include "anet/path_model.hpp"
#include "anet/word.hpp"

namespace anet {

enum class Phase { Run, Halt };

struct AuxState {
  LabelSet labels;
  friend bool operator==(const AuxState&, const AuxState&) = default;
};

// (S1, S2, S3, S4, S5): word set, own bit, own Q index 1..3, phase, parity.
struct Quint {
  std::set<Word> words;
  int bit = 0;
  int q = 1;
  Phase phase = Phase::Run;
  int parity = 1;
  friend bool operator==(const Quint&, const Quint&) = default;
};

using TmState = std::variant<AuxState, Quint>;

struct AuxMessage {
  LabelSet labels;
  friend bool operator==(const AuxMessage&, const AuxMessage&) = default;
};

struct Triple {
  std::set<Word> words;
  int q = 1;
  Phase flag = Phase::Run;
  friend bool operator==(const Triple&, const Triple&) = default;
};

using TmMessage = std::variant<AuxMessage, Triple>;

}  // namespace anet

template <>
struct std::hash<anet::AuxMessage> {
  std::size_t operator()(const anet::AuxMessage& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.labels.bits());
  }
};

template <>
struct std::hash<anet::Triple> {
  std::size_t operator()(const anet::Triple& m) const noexcept;
};

namespace anet {

/// True iff s = t u u u v for some nonempty u.
bool has_cube_factor(const Word& s);

/// Properness from radius-1 information: own labels over walk_signature()
/// and the label sets of the neighbours.
bool proper_labels(LabelSet own, std::span<const LabelSet> neighbours);

/// InputError unless the model is over walk_signature().
bool is_properly_labelled(const Model& model, NodeId w);

bool is_halted(const TmState& s);

/// Halting everywhere on finite walk-labelled networks, accepting iff the
/// halt round is even. Word sets are stored exactly; a transition that would
/// hold more than word_limit words throws CapacityError.
class TmAutomaton {
 public:
  using State = TmState;
  using Message = TmMessage;

  static constexpr std::size_t kDefaultWordLimit = std::size_t{1} << 16;

  explicit TmAutomaton(std::size_t word_limit = kDefaultWordLimit) : word_limit_(word_limit) {}

  const Signature& signature() const { return walk_signature(); }
  TmState init(LabelSet u) const { return AuxState{u}; }
  TmState transit(std::span<const MessageSet<TmMessage>> received, const TmState& current) const;
  TmMessage emit(const TmState& s, SymbolIndex relation) const;
  bool is_accepting(const TmState& s) const;
  bool is_rejecting(const TmState& s) const;
  /// "aux{P0,Q1}" or "({01,11},0,Q2,run,1)"
  std::string render(const TmState& s) const;

 private:
  std::size_t word_limit_;
};

TmAutomaton build_tm_automaton();

}  // namespace anet

#endif  // ANET_TM_AUTOMATON_HPP
