#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ualg/error.hpp"

namespace ualg {

struct Symbol {
  std::string name;
  int arity = 0;
};

// An operation signature: named symbols with fixed arities, optionally one
// designated ternary difference-term symbol.
struct Signature {
  std::vector<Symbol> symbols;
  std::optional<int> difference_symbol;  // index into symbols, arity 3

  int index_of(const std::string& name) const {
    for (int i = 0; i < (int)symbols.size(); ++i)
      if (symbols[i].name == name) return i;
    return -1;
  }
  int arity(int op) const { return symbols[op].arity; }
  int num_ops() const { return (int)symbols.size(); }
  bool same_as(const Signature& other) const {
    if (symbols.size() != other.symbols.size()) return false;
    for (size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i].name != other.symbols[i].name || symbols[i].arity != other.symbols[i].arity)
        return false;
    return true;
  }

  // "mul/2, inv/1, e/0"
  static Signature parse(const std::string& text);
  std::string format() const;
};

// Terms are trees: a variable leaf or a symbol applied to children.
class Term {
 public:
  Term() = default;
  static Term variable(std::string name) {
    Term t;
    t.var_ = std::move(name);
    return t;
  }
  static Term apply(int symbol, std::vector<Term> children) {
    Term t;
    t.symbol_ = symbol;
    t.children_ = std::move(children);
    return t;
  }

  bool is_variable() const { return symbol_ < 0; }
  const std::string& var_name() const { return var_; }
  int symbol() const { return symbol_; }
  const std::vector<Term>& children() const { return children_; }

  bool equals(const Term& o) const {
    if (is_variable() != o.is_variable()) return false;
    if (is_variable()) return var_ == o.var_;
    if (symbol_ != o.symbol_ || children_.size() != o.children_.size()) return false;
    for (size_t i = 0; i < children_.size(); ++i)
      if (!children_[i].equals(o.children_[i])) return false;
    return true;
  }

  // variables in order of first occurrence
  void collect_vars(std::vector<std::string>& out) const;
  std::vector<std::string> vars() const {
    std::vector<std::string> v;
    collect_vars(v);
    return v;
  }

  std::string print(const Signature& sig) const;

  // Prefix functional notation; identifiers not in the signature are variables.
  static Term parse(const std::string& text, const Signature& sig);

 private:
  int symbol_ = -1;
  std::string var_;
  std::vector<Term> children_;
};

struct Identity {
  Term lhs, rhs;
  std::vector<std::string> variables;  // vars(lhs) ∪ vars(rhs), first-occurrence order

  // "mul(x,y) = mul(y,x)"
  static Identity parse(const std::string& text, const Signature& sig);
  std::string print(const Signature& sig) const;
};

}  // namespace ualg
