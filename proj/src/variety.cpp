#include "ualg/variety.hpp"

#include <fstream>
#include <sstream>

namespace ualg {

bool VarietySpec::member_by_axioms(const FiniteAlgebra& a, std::string* failed) const {
  if (!a.sig.same_as(sig)) throw SignatureMismatch("variety '" + name + "': signature mismatch");
  for (const auto& ax : axioms) {
    if (!satisfies(a, ax)) {
      if (failed) *failed = ax.print(sig);
      return false;
    }
  }
  return true;
}

VarietySpec VarietySpec::parse(const std::string& text) {
  VarietySpec v;
  std::istringstream in(text);
  std::string line;
  bool in_axioms = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\r' || trimmed.back() == '\t'))
      trimmed.pop_back();
    size_t start = trimmed.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    trimmed = trimmed.substr(start);
    auto starts_with = [&](const std::string& p) { return trimmed.rfind(p, 0) == 0; };
    if (starts_with("variety")) {
      std::istringstream ls(trimmed);
      std::string w;
      ls >> w >> v.name;
      in_axioms = false;
    } else if (starts_with("signature:")) {
      v.sig = Signature::parse(trimmed.substr(10));
      in_axioms = false;
    } else if (starts_with("axioms:")) {
      in_axioms = true;
      std::string rest = trimmed.substr(7);
      if (rest.find('=') != std::string::npos) v.axioms.push_back(Identity::parse(rest, v.sig));
    } else if (starts_with("difference_term_symbol:")) {
      std::istringstream ls(trimmed.substr(23));
      std::string sym;
      ls >> sym;
      int op = v.sig.index_of(sym);
      if (op < 0 || v.sig.arity(op) != 3)
        throw ParseError("difference_term_symbol must name a ternary symbol", lineno, 1);
      v.sig.difference_symbol = op;
      v.difference_term = Term::apply(
          op, {Term::variable("x"), Term::variable("y"), Term::variable("z")});
      in_axioms = false;
    } else if (starts_with("difference_term:")) {
      // "difference_term: m(x,y,z) = <term>"
      std::string rest = trimmed.substr(16);
      size_t eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError("difference_term needs '='", lineno, 1);
      v.difference_term = Term::parse(rest.substr(eq + 1), v.sig);
      in_axioms = false;
    } else if (starts_with("hsp_generator:")) {
      std::string path = trimmed.substr(14);
      size_t s = path.find_first_not_of(" \t");
      if (s == std::string::npos) throw ParseError("hsp_generator needs a path", lineno, 1);
      v.hsp_generator = FiniteAlgebra::load(path.substr(s));
      in_axioms = false;
    } else if (in_axioms) {
      if (trimmed.find('=') != std::string::npos)
        v.axioms.push_back(Identity::parse(trimmed, v.sig));
    } else {
      throw ParseError("unexpected line in variety file: '" + trimmed + "'", lineno, 1);
    }
  }
  if (v.difference_term) {
    auto vars = v.difference_term->vars();
    if (vars.size() > 3) throw Error("difference term must use exactly three variables");
  }
  return v;
}

VarietySpec VarietySpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open variety file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string VarietySpec::format() const {
  std::ostringstream os;
  os << "variety " << (name.empty() ? std::string("unnamed") : name) << "\n";
  os << "signature: " << sig.format() << "\n";
  if (!axioms.empty()) {
    os << "axioms:\n";
    for (const auto& ax : axioms) os << ax.print(sig) << "\n";
  }
  if (difference_term) os << "difference_term: m(x,y,z) = " << difference_term->print(sig) << "\n";
  return os.str();
}

VarietySpec groups_variety() {
  VarietySpec v;
  v.name = "groups";
  v.sig = Signature::parse("mul/2, inv/1, e/0");
  const char* axs[] = {"mul(mul(x,y),z) = mul(x,mul(y,z))", "mul(x,e) = x", "mul(e,x) = x",
                       "mul(x,inv(x)) = e", "mul(inv(x),x) = e"};
  for (const char* s : axs) v.axioms.push_back(Identity::parse(s, v.sig));
  v.difference_term = group_difference_term(v.sig);
  return v;
}

VarietySpec abelian_groups_with_unary_variety() {
  VarietySpec v;
  v.name = "abgrp_g";
  v.sig = Signature::parse("mul/2, inv/1, e/0, g/1");
  const char* axs[] = {"mul(mul(x,y),z) = mul(x,mul(y,z))", "mul(x,y) = mul(y,x)", "mul(x,e) = x",
                       "mul(x,inv(x)) = e"};
  for (const char* s : axs) v.axioms.push_back(Identity::parse(s, v.sig));
  v.difference_term = group_difference_term(v.sig);
  return v;
}

VarietySpec hsp_variety(const FiniteAlgebra& gen, const Term& diff) {
  VarietySpec v;
  v.name = "hsp_" + gen.name;
  v.sig = gen.sig;
  v.hsp_generator = gen;
  v.difference_term = diff;
  return v;
}

}  // namespace ualg
