#ifndef ANET_ENGINE_HPP
#define ANET_ENGINE_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "anet/error.hpp"
#include "anet/structures.hpp"

namespace anet {

/// Messages received over one relation in one round. Set semantics: equal
/// messages from different senders collapse to one element. Iteration order
/// is arrival order (successors in domain order) and carries no meaning; an
/// automaton must not depend on it.
template <class M>
class MessageSet {
 public:
  void insert(const M& m) {
    if (contains(m)) return;
    items_.push_back(m);
    if (items_.size() > kLinearLimit) index_.emplace(std::hash<M>{}(m), items_.size() - 1);
    if (items_.size() == kLinearLimit + 1) rebuild_index();
  }

  bool contains(const M& m) const {
    if (items_.size() <= kLinearLimit) return std::find(items_.begin(), items_.end(), m) != items_.end();
    auto [lo, hi] = index_.equal_range(std::hash<M>{}(m));
    for (auto it = lo; it != hi; ++it) {
      if (items_[it->second] == m) return true;
    }
    return false;
  }

  void clear() {
    items_.clear();
    index_.clear();
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  static constexpr std::size_t kLinearLimit = 16;

  void rebuild_index() {
    index_.clear();
    for (std::size_t i = 0; i < items_.size(); ++i) index_.emplace(std::hash<M>{}(items_[i]), i);
  }

  std::vector<M> items_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

/// The (Q, M, pi, delta, mu, F, G) interface. States and messages are opaque
/// values with equality; messages also hash. transit/emit must be pure.
template <class A>
concept MessagePassingAutomaton =
    std::equality_comparable<typename A::State> && std::equality_comparable<typename A::Message> &&
    requires(const A& a, const typename A::State& s, const typename A::Message& m, LabelSet u,
             std::span<const MessageSet<typename A::Message>> received, SymbolIndex r) {
      { std::hash<typename A::Message>{}(m) } -> std::convertible_to<std::size_t>;
      { a.signature() } -> std::convertible_to<const Signature&>;
      { a.init(u) } -> std::same_as<typename A::State>;
      { a.transit(received, s) } -> std::same_as<typename A::State>;
      { a.emit(s, r) } -> std::same_as<typename A::Message>;
      { a.is_accepting(s) } -> std::same_as<bool>;
      { a.is_rejecting(s) } -> std::same_as<bool>;
      { a.render(s) } -> std::convertible_to<std::string>;
    };

/// Global configuration f_n: one state per node, in domain order.
template <class State>
struct Configuration {
  std::size_t round = 0;
  std::vector<State> states;
};

/// f_0 .. f_cap of one run.
template <class State>
struct Trace {
  Model model;
  std::vector<Configuration<State>> configurations;

  std::size_t cap() const { return configurations.size() - 1; }
  const State& state(std::size_t round, NodeId w) const { return configurations.at(round).states.at(w); }
};

struct Verdict {
  enum class Outcome { Accept, Reject, Undecided };

  Outcome outcome = Outcome::Undecided;
  std::size_t round = 0;  // decision round, or the cap when undecided

  static Verdict accept(std::size_t n) { return {Outcome::Accept, n}; }
  static Verdict reject(std::size_t n) { return {Outcome::Reject, n}; }
  static Verdict undecided(std::size_t cap) { return {Outcome::Undecided, cap}; }

  bool decided() const { return outcome != Outcome::Undecided; }
  bool accepted() const { return outcome == Outcome::Accept; }
  /// "accept@3", "reject@1", "undecided@10"
  std::string to_string() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

namespace detail {

template <class A>
void require_signature(const Model& model, const A& a) {
  if (!(model.signature() == a.signature())) {
    throw InputError("automaton signature does not match the model's");
  }
}

}  // namespace detail

template <MessagePassingAutomaton A>
Configuration<typename A::State> init_configuration(const Model& model, const A& a) {
  detail::require_signature(model, a);
  Configuration<typename A::State> f;
  f.states.reserve(model.size());
  for (NodeId w = 0; w < model.size(); ++w) f.states.push_back(a.init(model.labels(w)));
  return f;
}

/// f_{n+1}(w) = delta((N_1..N_k), f_n(w)) where N_i collects mu(f_n(v), R_i)
/// over the R_i-successors v of w.
template <MessagePassingAutomaton A>
Configuration<typename A::State> step(const Model& model, const A& a,
                                      const Configuration<typename A::State>& f) {
  using Message = typename A::Message;
  detail::require_signature(model, a);
  if (f.states.size() != model.size()) throw InputError("configuration does not cover the domain");
  const std::size_t k = model.signature().binary().size();
  const std::size_t n = model.size();

  std::vector<Message> outbox;
  outbox.reserve(n * k);
  for (NodeId v = 0; v < n; ++v) {
    for (SymbolIndex r = 0; r < k; ++r) outbox.push_back(a.emit(f.states[v], r));
  }

  Configuration<typename A::State> next;
  next.round = f.round + 1;
  next.states.reserve(n);
  std::vector<MessageSet<Message>> received(k);
  for (NodeId w = 0; w < n; ++w) {
    for (SymbolIndex r = 0; r < k; ++r) {
      received[r].clear();
      for (NodeId v : model.successors(r, w)) received[r].insert(outbox[v * k + r]);
    }
    next.states.push_back(
        a.transit(std::span<const MessageSet<Message>>(received), f.states[w]));
  }
  return next;
}

template <MessagePassingAutomaton A>
Trace<typename A::State> run(const Model& model, const A& a, std::size_t cap) {
  Trace<typename A::State> trace{model, {}};
  trace.configurations.reserve(cap + 1);
  trace.configurations.push_back(init_configuration(model, a));
  for (std::size_t n = 0; n < cap; ++n) {
    trace.configurations.push_back(step(model, a, trace.configurations.back()));
  }
  return trace;
}

/// First round in F (with no earlier G) accepts; first round in G (with no
/// earlier F) rejects. The trace is never truncated at the decision.
template <MessagePassingAutomaton A>
Verdict verdict(const Trace<typename A::State>& trace, const A& a, NodeId w) {
  if (w >= trace.model.size()) throw InputError("node index out of range");
  for (const auto& f : trace.configurations) {
    const auto& s = f.states[w];
    const bool acc = a.is_accepting(s);
    const bool rej = a.is_rejecting(s);
    if (acc && rej) throw std::logic_error("state is both accepting and rejecting");
    if (acc) return Verdict::accept(f.round);
    if (rej) return Verdict::reject(f.round);
  }
  return Verdict::undecided(trace.cap());
}

/// Every node reaches F or G within the trace.
template <MessagePassingAutomaton A>
bool converged(const Trace<typename A::State>& trace, const A& a) {
  for (NodeId w = 0; w < trace.model.size(); ++w) {
    if (!verdict(trace, a, w).decided()) return false;
  }
  return true;
}

/// Once a node first enters F or G it keeps that exact state to the end of
/// the trace. Says nothing about nodes that never decide.
template <MessagePassingAutomaton A>
bool final_states_absorbing(const Trace<typename A::State>& trace, const A& a) {
  for (NodeId w = 0; w < trace.model.size(); ++w) {
    const Verdict v = verdict(trace, a, w);
    if (!v.decided()) continue;
    const auto& q = trace.state(v.round, w);
    for (std::size_t m = v.round + 1; m <= trace.cap(); ++m) {
      if (!(trace.state(m, w) == q)) return false;
    }
  }
  return true;
}

/// Smallest n <= cap by which every pointed model of the family is accepted
/// or rejected; nullopt if one is still undecided at cap. 0 for an empty
/// family. Each distinct model is run once.
template <MessagePassingAutomaton A>
std::optional<std::size_t> effective_running_time(const A& a,
                                                  std::span<const PointedModel> family,
                                                  std::size_t cap) {
  std::unordered_map<const Model*, Trace<typename A::State>> traces;
  std::size_t worst = 0;
  for (const PointedModel& pm : family) {
    auto it = traces.find(&pm.model());
    if (it == traces.end()) it = traces.emplace(&pm.model(), run(pm.model(), a, cap)).first;
    const Verdict v = verdict(it->second, a, pm.point());
    if (!v.decided()) return std::nullopt;
    worst = std::max(worst, v.round);
  }
  return worst;
}

}  // namespace anet

#endif  // ANET_ENGINE_HPP
