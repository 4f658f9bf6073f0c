#include "anet/formula.hpp"

#include <cctype>
#include <unordered_map>
#include <vector>

#include "anet/error.hpp"

namespace anet {

// ---------------------------------------------------------------- modal

ModalFormula ModalFormula::top() {
  static const ModalFormula t(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}}));
  return t;
}

ModalFormula ModalFormula::prop(std::string symbol) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Prop, std::move(symbol), {}, {}}));
}

ModalFormula ModalFormula::negation(ModalFormula f) {
  return ModalFormula(std::make_shared<const Node>(Node{Kind::Not, {}, std::move(f), {}}));
}

ModalFormula ModalFormula::conjunction(ModalFormula a, ModalFormula b) {
  return ModalFormula(
      std::make_shared<const Node>(Node{Kind::And, {}, std::move(a), std::move(b)}));
}

ModalFormula ModalFormula::diamond(std::string relation, ModalFormula f) {
  return ModalFormula(
      std::make_shared<const Node>(Node{Kind::Diamond, std::move(relation), std::move(f), {}}));
}

ModalFormula ModalFormula::conjunction_of(std::span<const ModalFormula> parts) {
  if (parts.empty()) return top();
  ModalFormula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(std::move(acc), parts[i]);
  return acc;
}

ModalFormula::Kind ModalFormula::kind() const { return node_->kind; }
const std::string& ModalFormula::symbol() const { return node_->symbol; }
const ModalFormula& ModalFormula::operand() const { return *node_->a; }
const ModalFormula& ModalFormula::left() const { return *node_->a; }
const ModalFormula& ModalFormula::right() const { return *node_->b; }

std::size_t ModalFormula::tree_size(std::size_t limit) const {
  std::unordered_map<const void*, std::size_t> memo;
  auto sat_add = [limit](std::size_t a, std::size_t b) {
    return (a >= limit || b >= limit - a) ? limit : a + b;
  };
  auto go = [&](auto&& self, const ModalFormula& f) -> std::size_t {
    if (auto it = memo.find(f.identity()); it != memo.end()) return it->second;
    std::size_t s = 1;
    switch (f.kind()) {
      case Kind::Top:
      case Kind::Prop:
        break;
      case Kind::Not:
      case Kind::Diamond:
        s = sat_add(s, self(self, f.operand()));
        break;
      case Kind::And:
        s = sat_add(s, self(self, f.left()));
        s = sat_add(s, self(self, f.right()));
        break;
    }
    memo.emplace(f.identity(), s);
    return s;
  };
  return go(go, *this);
}

namespace {

void print_modal(const ModalFormula& f, std::string& out) {
  using K = ModalFormula::Kind;
  switch (f.kind()) {
    case K::Top:
      out += 'T';
      break;
    case K::Prop:
      out += f.symbol();
      break;
    case K::Not:
      out += '~';
      print_modal(f.operand(), out);
      break;
    case K::And:
      out += '(';
      print_modal(f.left(), out);
      out += " & ";
      print_modal(f.right(), out);
      out += ')';
      break;
    case K::Diamond:
      out += '<';
      out += f.symbol();
      out += '>';
      print_modal(f.operand(), out);
      break;
  }
}

}  // namespace

std::string ModalFormula::to_string() const {
  std::string out;
  print_modal(*this, out);
  return out;
}

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.identity() == b.identity()) return true;
  if (a.kind() != b.kind()) return false;
  using K = ModalFormula::Kind;
  switch (a.kind()) {
    case K::Top:
      return true;
    case K::Prop:
      return a.symbol() == b.symbol();
    case K::Not:
      return a.operand() == b.operand();
    case K::And:
      return a.left() == b.left() && a.right() == b.right();
    case K::Diamond:
      return a.symbol() == b.symbol() && a.operand() == b.operand();
  }
  return false;
}

// ---------------------------------------------------------------- first order

FoFormula FoFormula::top() {
  static const FoFormula t(std::make_shared<const Node>(Node{Kind::Top, {}, {}, {}, {}, {}}));
  return t;
}

FoFormula FoFormula::eq(std::string x, std::string y) {
  return FoFormula(
      std::make_shared<const Node>(Node{Kind::Eq, {}, std::move(x), std::move(y), {}, {}}));
}

FoFormula FoFormula::pred(std::string symbol, std::string x) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Pred, std::move(symbol), std::move(x), {}, {}, {}}));
}

FoFormula FoFormula::rel(std::string symbol, std::string x, std::string y) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Rel, std::move(symbol), std::move(x), std::move(y), {}, {}}));
}

FoFormula FoFormula::negation(FoFormula f) {
  return FoFormula(std::make_shared<const Node>(Node{Kind::Not, {}, {}, {}, std::move(f), {}}));
}

FoFormula FoFormula::conjunction(FoFormula a, FoFormula b) {
  return FoFormula(
      std::make_shared<const Node>(Node{Kind::And, {}, {}, {}, std::move(a), std::move(b)}));
}

FoFormula FoFormula::exists(std::string var, FoFormula f) {
  return FoFormula(std::make_shared<const Node>(
      Node{Kind::Exists, {}, std::move(var), {}, std::move(f), {}}));
}

FoFormula::Kind FoFormula::kind() const { return node_->kind; }
const std::string& FoFormula::symbol() const { return node_->symbol; }
const std::string& FoFormula::first_var() const { return node_->x; }
const std::string& FoFormula::second_var() const { return node_->y; }
const FoFormula& FoFormula::operand() const { return *node_->a; }
const FoFormula& FoFormula::left() const { return *node_->a; }
const FoFormula& FoFormula::right() const { return *node_->b; }

std::set<std::string> FoFormula::free_variables() const {
  std::set<std::string> out;
  switch (kind()) {
    case Kind::Top:
      break;
    case Kind::Eq:
    case Kind::Rel:
      out.insert(first_var());
      out.insert(second_var());
      break;
    case Kind::Pred:
      out.insert(first_var());
      break;
    case Kind::Not:
      out = operand().free_variables();
      break;
    case Kind::And: {
      out = left().free_variables();
      auto r = right().free_variables();
      out.insert(r.begin(), r.end());
      break;
    }
    case Kind::Exists:
      out = operand().free_variables();
      out.erase(first_var());
      break;
  }
  return out;
}

namespace {

void print_fo(const FoFormula& f, std::string& out) {
  using K = FoFormula::Kind;
  switch (f.kind()) {
    case K::Top:
      out += 'T';
      break;
    case K::Eq:
      out += f.first_var() + "=" + f.second_var();
      break;
    case K::Pred:
      out += f.symbol() + "(" + f.first_var() + ")";
      break;
    case K::Rel:
      out += f.symbol() + "(" + f.first_var() + "," + f.second_var() + ")";
      break;
    case K::Not:
      out += '~';
      print_fo(f.operand(), out);
      break;
    case K::And:
      out += '(';
      print_fo(f.left(), out);
      out += " & ";
      print_fo(f.right(), out);
      out += ')';
      break;
    case K::Exists:
      out += "exists " + f.first_var() + " ";
      print_fo(f.operand(), out);
      break;
  }
}

}  // namespace

std::string FoFormula::to_string() const {
  std::string out;
  print_fo(*this, out);
  return out;
}

bool operator==(const FoFormula& a, const FoFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using K = FoFormula::Kind;
  switch (a.kind()) {
    case K::Top:
      return true;
    case K::Eq:
      return a.first_var() == b.first_var() && a.second_var() == b.second_var();
    case K::Pred:
      return a.symbol() == b.symbol() && a.first_var() == b.first_var();
    case K::Rel:
      return a.symbol() == b.symbol() && a.first_var() == b.first_var() &&
             a.second_var() == b.second_var();
    case K::Not:
      return a.operand() == b.operand();
    case K::And:
      return a.left() == b.left() && a.right() == b.right();
    case K::Exists:
      return a.first_var() == b.first_var() && a.operand() == b.operand();
  }
  return false;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig) : text_(text), sig_(sig) {}

  ModalFormula modal_formula() {
    skip_space();
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return ModalFormula::negation(modal_formula());
    }
    if (c == '(') {
      ++pos_;
      ModalFormula acc = modal_formula();
      while (accept('&')) acc = ModalFormula::conjunction(std::move(acc), modal_formula());
      expect(')');
      return acc;
    }
    if (c == '<') {
      ++pos_;
      const std::size_t at = pos_;
      std::string rel = identifier("relation symbol");
      expect('>');
      check_binary(rel, at);
      return ModalFormula::diamond(std::move(rel), modal_formula());
    }
    const std::size_t at = pos_;
    std::string name = identifier("formula");
    if (name == "T") return ModalFormula::top();
    if (name == "exists") fail(at, "'exists' is not modal syntax");
    check_unary(name, at);
    return ModalFormula::prop(std::move(name));
  }

  FoFormula fo_formula() {
    skip_space();
    const char c = peek();
    if (c == '~') {
      ++pos_;
      return FoFormula::negation(fo_formula());
    }
    if (c == '(') {
      ++pos_;
      FoFormula acc = fo_formula();
      while (accept('&')) acc = FoFormula::conjunction(std::move(acc), fo_formula());
      expect(')');
      return acc;
    }
    const std::size_t at = pos_;
    std::string name = identifier("formula");
    if (name == "T") return FoFormula::top();
    if (name == "exists") {
      std::string var = identifier("variable");
      return FoFormula::exists(std::move(var), fo_formula());
    }
    if (accept('=')) return FoFormula::eq(std::move(name), identifier("variable"));
    expect('(');
    std::string x = identifier("variable");
    if (accept(',')) {
      std::string y = identifier("variable");
      expect(')');
      check_binary(name, at);
      return FoFormula::rel(std::move(name), std::move(x), std::move(y));
    }
    expect(')');
    check_unary(name, at);
    return FoFormula::pred(std::move(name), std::move(x));
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError("offset " + std::to_string(at), msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_, std::string("expected '") + c + "'");
  }

  std::string identifier(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    auto ident_char = [](char ch, bool first) {
      const auto u = static_cast<unsigned char>(ch);
      return std::isalpha(u) || ch == '_' || (!first && std::isdigit(u));
    };
    if (pos_ >= text_.size() || !ident_char(text_[pos_], true)) {
      fail(start, std::string("expected ") + what);
    }
    while (pos_ < text_.size() && ident_char(text_[pos_], false)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void check_unary(const std::string& name, std::size_t at) const {
    if (sig_ && !sig_->find_unary(name)) fail(at, "unknown unary symbol '" + name + "'");
  }

  void check_binary(const std::string& name, std::size_t at) const {
    if (sig_ && !sig_->find_binary(name)) fail(at, "unknown binary symbol '" + name + "'");
  }

  std::string_view text_;
  const Signature* sig_;
  std::size_t pos_ = 0;
};

}  // namespace

ModalFormula parse_modal(std::string_view text, const Signature* signature) {
  Parser p(text, signature);
  ModalFormula f = p.modal_formula();
  p.finish();
  return f;
}

FoFormula parse_fo(std::string_view text, const Signature* signature) {
  Parser p(text, signature);
  FoFormula f = p.fo_formula();
  p.finish();
  return f;
}

}  // namespace anet
