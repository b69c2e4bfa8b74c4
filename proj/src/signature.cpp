#include "ualg/signature.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace ualg {

namespace {

// Minimal cursor over a one-line-ish input, tracking line/column for errors.
struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& text) : s(text) {}

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  void advance() {
    if (done()) return;
    if (s[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_ws() {
    while (!done() && std::isspace((unsigned char)peek())) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  std::string ident() {
    skip_ws();
    if (done() || !(std::isalpha((unsigned char)peek()) || peek() == '_'))
      fail("expected identifier");
    std::string out;
    while (!done() && (std::isalnum((unsigned char)peek()) || peek() == '_')) {
      out.push_back(peek());
      advance();
    }
    return out;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    if (done() || !std::isdigit((unsigned char)peek())) fail("expected integer");
    int v = 0;
    while (!done() && std::isdigit((unsigned char)peek())) {
      v = v * 10 + (peek() - '0');
      advance();
    }
    return v;
  }
};

Term parse_term_rec(Cursor& cur, const Signature& sig) {
  std::string name = cur.ident();
  int op = sig.index_of(name);
  if (cur.accept('(')) {
    if (op < 0) cur.fail("unknown symbol '" + name + "'");
    std::vector<Term> children;
    if (!cur.accept(')')) {
      children.push_back(parse_term_rec(cur, sig));
      while (cur.accept(',')) children.push_back(parse_term_rec(cur, sig));
      cur.expect(')');
    }
    if ((int)children.size() != sig.arity(op))
      cur.fail("arity mismatch for '" + name + "': expected " + std::to_string(sig.arity(op)) +
               " arguments, got " + std::to_string(children.size()));
    return Term::apply(op, std::move(children));
  }
  // bare identifier: a constant if declared nullary, otherwise a variable
  if (op >= 0) {
    if (sig.arity(op) != 0)
      cur.fail("symbol '" + name + "' of arity " + std::to_string(sig.arity(op)) +
               " used without arguments");
    return Term::apply(op, {});
  }
  return Term::variable(name);
}

}  // namespace

Signature Signature::parse(const std::string& text) {
  Signature sig;
  Cursor cur(text);
  std::set<std::string> seen;
  cur.skip_ws();
  while (!cur.done()) {
    std::string name = cur.ident();
    cur.expect('/');
    int ar = cur.integer();
    if (seen.count(name)) cur.fail("duplicate symbol '" + name + "'");
    seen.insert(name);
    sig.symbols.push_back({name, ar});
    cur.skip_ws();
    if (cur.done()) break;
    cur.expect(',');
    cur.skip_ws();
  }
  if (int m = sig.index_of("m"); m >= 0 && sig.arity(m) == 3) sig.difference_symbol = m;
  return sig;
}

std::string Signature::format() const {
  std::ostringstream os;
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (i) os << ", ";
    os << symbols[i].name << "/" << symbols[i].arity;
  }
  return os.str();
}

void Term::collect_vars(std::vector<std::string>& out) const {
  if (is_variable()) {
    for (const auto& v : out)
      if (v == var_) return;
    out.push_back(var_);
    return;
  }
  for (const auto& c : children_) c.collect_vars(out);
}

std::string Term::print(const Signature& sig) const {
  if (is_variable()) return var_;
  std::string out = sig.symbols[symbol_].name;
  out.push_back('(');
  for (size_t i = 0; i < children_.size(); ++i) {
    if (i) out.push_back(',');
    out += children_[i].print(sig);
  }
  out.push_back(')');
  return out;
}

Term Term::parse(const std::string& text, const Signature& sig) {
  Cursor cur(text);
  Term t = parse_term_rec(cur, sig);
  cur.skip_ws();
  if (!cur.done()) cur.fail("trailing input after term");
  return t;
}

Identity Identity::parse(const std::string& text, const Signature& sig) {
  size_t eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("identity must contain '='", 1, 1);
  Identity id;
  id.lhs = Term::parse(text.substr(0, eq), sig);
  id.rhs = Term::parse(text.substr(eq + 1), sig);
  id.lhs.collect_vars(id.variables);
  id.rhs.collect_vars(id.variables);
  return id;
}

std::string Identity::print(const Signature& sig) const {
  return lhs.print(sig) + " = " + rhs.print(sig);
}

}  // namespace ualg
