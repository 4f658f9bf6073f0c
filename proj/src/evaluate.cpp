#include "anet/evaluate.hpp"

#include <algorithm>
#include <unordered_map>

#include "anet/error.hpp"

namespace anet {

unsigned modal_depth(const ModalFormula& phi) {
  std::unordered_map<const void*, unsigned> memo;
  auto go = [&](auto&& self, const ModalFormula& f) -> unsigned {
    if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
    unsigned d = 0;
    switch (f.kind()) {
      case ModalFormula::Kind::Top:
      case ModalFormula::Kind::Prop:
        break;
      case ModalFormula::Kind::Not:
        d = self(self, f.operand());
        break;
      case ModalFormula::Kind::And:
        d = std::max(self(self, f.left()), self(self, f.right()));
        break;
      case ModalFormula::Kind::Diamond:
        d = self(self, f.operand()) + 1;
        break;
    }
    memo.emplace(f.identity(), d);
    return d;
  };
  return go(go, phi);
}

ModalChecker::ModalChecker(const Signature& signature, const ModalFormula& phi)
    : signature_(signature) {
  std::unordered_map<const void*, std::size_t> slot;
  auto compile = [&](auto&& self, const ModalFormula& f) -> std::size_t {
    if (auto it = slot.find(f.identity()); it != slot.end()) return it->second;
    Instruction ins{f.kind()};
    switch (f.kind()) {
      case ModalFormula::Kind::Top:
        break;
      case ModalFormula::Kind::Prop:
        ins.symbol = signature_.unary_index(f.symbol());
        break;
      case ModalFormula::Kind::Not:
        ins.a = self(self, f.operand());
        break;
      case ModalFormula::Kind::And:
        ins.a = self(self, f.left());
        ins.b = self(self, f.right());
        break;
      case ModalFormula::Kind::Diamond:
        ins.symbol = signature_.binary_index(f.symbol());
        ins.a = self(self, f.operand());
        break;
    }
    program_.push_back(ins);
    slot.emplace(f.identity(), program_.size() - 1);
    return program_.size() - 1;
  };
  compile(compile, phi);
}

std::vector<bool> ModalChecker::evaluate(const Model& model) const {
  if (!(model.signature() == signature_)) {
    throw InputError("model signature differs from the formula's signature");
  }
  const std::size_t n = model.size();
  std::vector<std::uint8_t> truth(program_.size() * n);
  for (std::size_t i = 0; i < program_.size(); ++i) {
    const Instruction& ins = program_[i];
    std::uint8_t* out = truth.data() + i * n;
    const std::uint8_t* a = truth.data() + ins.a * n;
    const std::uint8_t* b = truth.data() + ins.b * n;
    for (NodeId w = 0; w < n; ++w) {
      switch (ins.kind) {
        case ModalFormula::Kind::Top:
          out[w] = 1;
          break;
        case ModalFormula::Kind::Prop:
          out[w] = model.has_label(ins.symbol, w);
          break;
        case ModalFormula::Kind::Not:
          out[w] = !a[w];
          break;
        case ModalFormula::Kind::And:
          out[w] = a[w] && b[w];
          break;
        case ModalFormula::Kind::Diamond: {
          const auto succ = model.successors(ins.symbol, w);
          out[w] = std::any_of(succ.begin(), succ.end(), [&](NodeId v) { return a[v] != 0; });
          break;
        }
      }
    }
  }
  const std::uint8_t* root = truth.data() + (program_.size() - 1) * n;
  return std::vector<bool>(root, root + n);
}

std::vector<bool> satisfying_nodes(const Model& model, const ModalFormula& phi) {
  return ModalChecker(model.signature(), phi).evaluate(model);
}

bool eval_modal(const PointedModel& m, const ModalFormula& phi) {
  return satisfying_nodes(m.model(), phi)[m.point()];
}

bool agree_on_formula(const PointedModel& m1, const PointedModel& m2, const ModalFormula& phi) {
  return eval_modal(m1, phi) == eval_modal(m2, phi);
}

Assignment Assignment::with(const std::string& x, NodeId v) const {
  Assignment g = *this;
  g.map_[x] = v;
  return g;
}

std::optional<NodeId> Assignment::lookup(const std::string& x) const {
  auto it = map_.find(x);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct FoEvaluator {
  const Model& model;
  std::map<std::string, NodeId> env;

  NodeId value(const std::string& x) const {
    auto it = env.find(x);
    if (it == env.end()) throw InputError("variable '" + x + "' is unassigned");
    return it->second;
  }

  bool eval(const FoFormula& f) {
    using K = FoFormula::Kind;
    const Signature& sig = model.signature();
    switch (f.kind()) {
      case K::Top:
        return true;
      case K::Eq:
        return value(f.first_var()) == value(f.second_var());
      case K::Pred:
        return model.has_label(sig.unary_index(f.symbol()), value(f.first_var()));
      case K::Rel:
        return model.has_edge(sig.binary_index(f.symbol()), value(f.first_var()),
                              value(f.second_var()));
      case K::Not:
        return !eval(f.operand());
      case K::And:
        return eval(f.left()) && eval(f.right());
      case K::Exists: {
        const std::string& x = f.first_var();
        std::optional<NodeId> saved;
        if (auto it = env.find(x); it != env.end()) saved = it->second;
        bool found = false;
        for (NodeId v = 0; v < model.size() && !found; ++v) {
          env[x] = v;
          found = eval(f.operand());
        }
        if (saved) {
          env[x] = *saved;
        } else {
          env.erase(x);
        }
        return found;
      }
    }
    return false;
  }
};

}  // namespace

bool eval_fo(const Model& model, const Assignment& f, const FoFormula& phi) {
  for (const auto& [x, v] : f.entries()) {
    if (v >= model.size()) throw InputError("variable '" + x + "' assigned outside the domain");
  }
  for (const auto& x : phi.free_variables()) {
    if (!f.lookup(x)) throw InputError("free variable '" + x + "' is unassigned");
  }
  FoEvaluator ev{model, f.entries()};
  return ev.eval(phi);
}

FoFormula standard_translation(const ModalFormula& phi, const std::string& x) {
  std::size_t counter = 0;
  auto fresh = [&] {
    std::string y;
    do {
      y = "y_" + std::to_string(counter++);
    } while (y == x);
    return y;
  };
  auto go = [&](auto&& self, const ModalFormula& f, const std::string& var) -> FoFormula {
    switch (f.kind()) {
      case ModalFormula::Kind::Top:
        return FoFormula::top();
      case ModalFormula::Kind::Prop:
        return FoFormula::pred(f.symbol(), var);
      case ModalFormula::Kind::Not:
        return FoFormula::negation(self(self, f.operand(), var));
      case ModalFormula::Kind::And: {
        FoFormula l = self(self, f.left(), var);
        return FoFormula::conjunction(std::move(l), self(self, f.right(), var));
      }
      case ModalFormula::Kind::Diamond: {
        std::string y = fresh();
        FoFormula body = self(self, f.operand(), y);
        return FoFormula::exists(
            y, FoFormula::conjunction(FoFormula::rel(f.symbol(), var, y), std::move(body)));
      }
    }
    return FoFormula::top();
  };
  return go(go, phi, x);
}

}  // namespace anet
