#include "anet/tm_automaton.hpp"

#include "anet/error.hpp"

std::size_t std::hash<anet::Triple>::operator()(const anet::Triple& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.q) * 31 + (m.flag == anet::Phase::Halt ? 7 : 0);
  for (const auto& w : m.words) h = h * 1000003 ^ std::hash<anet::Word>{}(w);
  return h;
}

namespace anet {

namespace {

constexpr SymbolIndex kP0 = 0;
constexpr SymbolIndex kP1 = 1;
constexpr SymbolIndex kQ1 = 2;

// Index 1..3 if exactly one Q label holds, else 0.
int single_q(LabelSet u) {
  int found = 0;
  for (int j = 1; j <= 3; ++j) {
    if (u.contains(kQ1 + j - 1)) {
      if (found != 0) return 0;
      found = j;
    }
  }
  return found;
}

int cyclic_next(int q) { return q % 3 + 1; }

Quint halt_state(int parity) { return Quint{{}, 0, 1, Phase::Halt, parity}; }

}  // namespace

bool has_cube_factor(const Word& s) {
  const std::string& t = s.str();
  const std::size_t n = t.size();
  for (std::size_t len = 1; 3 * len <= n; ++len) {
    for (std::size_t start = 0; start + 3 * len <= n; ++start) {
      bool cube = true;
      for (std::size_t i = 0; i < 2 * len && cube; ++i) {
        cube = t[start + i] == t[start + len + i];
      }
      if (cube) return true;
    }
  }
  return false;
}

bool proper_labels(LabelSet own, std::span<const LabelSet> neighbours) {
  const int i = single_q(own);
  if (i == 0) return false;
  if (own.contains(kP0) == own.contains(kP1)) return false;
  unsigned seen = 0;
  for (LabelSet u : neighbours) {
    if (int j = single_q(u)) seen |= 1U << j;
  }
  const unsigned expected = 0b1110U & ~(1U << i);
  return seen == expected;
}

bool is_properly_labelled(const Model& model, NodeId w) {
  if (!(model.signature() == walk_signature())) {
    throw InputError("model is not over {P0,P1,Q1,Q2,Q3},{R}");
  }
  if (w >= model.size()) throw InputError("node index out of range");
  std::vector<LabelSet> neighbours;
  for (NodeId v : model.successors(0, w)) neighbours.push_back(model.labels(v));
  return proper_labels(model.labels(w), neighbours);
}

bool is_halted(const TmState& s) {
  const auto* q = std::get_if<Quint>(&s);
  return q != nullptr && q->phase == Phase::Halt;
}

TmState TmAutomaton::transit(std::span<const MessageSet<TmMessage>> received,
                             const TmState& current) const {
  const MessageSet<TmMessage>& in = received[0];

  if (const auto* aux = std::get_if<AuxState>(&current)) {
    std::vector<LabelSet> neighbours;
    for (const auto& m : in) {
      if (const auto* am = std::get_if<AuxMessage>(&m)) neighbours.push_back(am->labels);
    }
    if (!proper_labels(aux->labels, neighbours)) return halt_state(1);
    const int x = aux->labels.contains(kP1) ? 1 : 0;
    return Quint{{Word::of_bit(x)}, x, single_q(aux->labels), Phase::Run, 1};
  }

  const Quint& s = std::get<Quint>(current);
  if (s.phase == Phase::Halt) return s;

  for (const auto& m : in) {
    const auto* t = std::get_if<Triple>(&m);
    if (t != nullptr && t->flag == Phase::Halt) return halt_state(1 - s.parity);
  }

  Quint next{{}, s.bit, s.q, Phase::Run, 1 - s.parity};
  const int wanted = cyclic_next(s.q);
  for (const auto& m : in) {
    const auto* t = std::get_if<Triple>(&m);
    if (t == nullptr || t->q != wanted) continue;
    for (const Word& u : t->words) {
      next.words.insert(u.prepend(s.bit));
      if (next.words.size() > word_limit_) {
        throw CapacityError("word set exceeds " + std::to_string(word_limit_) + " entries");
      }
    }
  }
  for (const Word& v : next.words) {
    if (has_cube_factor(v)) {
      next.phase = Phase::Halt;
      break;
    }
  }
  return next;
}

TmMessage TmAutomaton::emit(const TmState& s, SymbolIndex) const {
  if (const auto* aux = std::get_if<AuxState>(&s)) return AuxMessage{aux->labels};
  const Quint& q = std::get<Quint>(s);
  if (q.phase == Phase::Halt) return Triple{{}, 1, Phase::Halt};
  return Triple{q.words, q.q, Phase::Run};
}

bool TmAutomaton::is_accepting(const TmState& s) const {
  return is_halted(s) && std::get<Quint>(s).parity == 0;
}

bool TmAutomaton::is_rejecting(const TmState& s) const {
  return is_halted(s) && std::get<Quint>(s).parity == 1;
}

std::string TmAutomaton::render(const TmState& s) const {
  if (const auto* aux = std::get_if<AuxState>(&s)) {
    return "aux" + walk_signature().describe(aux->labels);
  }
  const Quint& q = std::get<Quint>(s);
  std::string out = "({";
  bool first = true;
  for (const Word& w : q.words) {
    if (!first) out += ',';
    out += w.str();
    first = false;
  }
  out += "}," + std::to_string(q.bit) + ",Q" + std::to_string(q.q) + ',';
  out += q.phase == Phase::Halt ? "halt" : "run";
  out += ',' + std::to_string(q.parity) + ')';
  return out;
}

TmAutomaton build_tm_automaton() { return TmAutomaton(); }

}  // namespace anet
