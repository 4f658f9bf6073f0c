#include "anet/theorem2.hpp"

#include <json.hpp>

#include "anet/error.hpp"
#include "anet/path_model.hpp"
#include "anet/tm_automaton.hpp"

namespace anet {

namespace {

std::optional<std::size_t> first_halt(const Trace<TmState>& trace, NodeId w) {
  for (const auto& f : trace.configurations) {
    if (is_halted(f.states[w])) return f.round;
  }
  return std::nullopt;
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  switch (v.outcome) {
    case Verdict::Outcome::Accept:
      return "accept";
    case Verdict::Outcome::Reject:
      return "reject";
    case Verdict::Outcome::Undecided:
      break;
  }
  return "undecided";
}

nlohmann::ordered_json round_json(const std::optional<std::size_t>& r) {
  if (r) return *r;
  return nullptr;
}

}  // namespace

std::string Theorem2Report::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["verdict_nu"] = verdict_json(verdict_nu);
  j["verdict_nu_prime"] = verdict_json(verdict_nu_prime);
  j["halt_round_nu"] = round_json(halt_round_nu);
  j["halt_round_nu_prime"] = round_json(halt_round_nu_prime);
  j["balls_isomorphic"] = balls_isomorphic;
  j["differ"] = differ;
  return j.dump(2) + "\n";
}

std::string Theorem2Report::summary() const {
  auto round = [](const std::optional<std::size_t>& r) {
    return r ? std::to_string(*r) : std::string("none");
  };
  std::string out = "n=" + std::to_string(n) + " point=" + std::to_string(3 * n) +
                    " cap=" + std::to_string(cap) + "\n";
  out += "  nu:  " + verdict_nu.to_string() + " (halt " + round(halt_round_nu) + ")\n";
  out += "  nu': " + verdict_nu_prime.to_string() + " (halt " + round(halt_round_nu_prime) + ")\n";
  out += "  balls isomorphic: " + std::string(balls_isomorphic ? "yes" : "no") + "\n";
  out += "  differ: " + std::string(differ ? "yes" : "no") + "\n";
  return out;
}

Theorem2Report run_theorem2_experiment(unsigned n) {
  if (n <= 10) throw InputError("n must be greater than 10");
  const Model nu = build_path_model(thue_morse_prefix(5 * n + 1));
  const Model nu_prime = build_path_model(thue_morse_prefix(5 * n + 2));
  const NodeId point = 3 * n;

  Theorem2Report report;
  report.n = n;
  report.cap = 6 * (5 * n + 2);

  const TmAutomaton a = build_tm_automaton();
  const auto t1 = run(nu, a, report.cap);
  const auto t2 = run(nu_prime, a, report.cap);
  report.verdict_nu = verdict(t1, a, point);
  report.verdict_nu_prime = verdict(t2, a, point);
  report.halt_round_nu = first_halt(t1, point);
  report.halt_round_nu_prime = first_halt(t2, point);
  report.differ =
      report.decided() && report.verdict_nu.accepted() != report.verdict_nu_prime.accepted();

  const Ball b1 = ball(nu, point, n);
  const Ball b2 = ball(nu_prime, point, n);
  report.balls_isomorphic = pointed_isomorphic(b1.model, b1.center, b2.model, b2.center);
  return report;
}

}  // namespace anet
