#ifndef ANET_TRACE_IO_HPP
#define ANET_TRACE_IO_HPP

#include <ostream>

#include <json.hpp>

#include "anet/engine.hpp"

namespace anet {

// One line per round: {"round": n, "states": {node name: rendered state}}.
// Nodes appear in domain order.
template <MessagePassingAutomaton A>
void write_trace_jsonl(std::ostream& out, const Trace<typename A::State>& trace, const A& a) {
  for (const auto& f : trace.configurations) {
    nlohmann::ordered_json states = nlohmann::ordered_json::object();
    for (NodeId w = 0; w < trace.model.size(); ++w) {
      states[trace.model.name(w)] = std::string(a.render(f.states[w]));
    }
    nlohmann::ordered_json line;
    line["round"] = f.round;
    line["states"] = std::move(states);
    out << line.dump() << '\n';
  }
}

}  // namespace anet

#endif  // ANET_TRACE_IO_HPP
