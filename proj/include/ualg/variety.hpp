#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg {

// A variety given either by a finite axiom list or as HSP of a generator
// algebra. The difference term is part of the data; it is verified on input
// algebras, never searched for.
struct VarietySpec {
  std::string name;
  Signature sig;
  std::vector<Identity> axioms;
  std::optional<Term> difference_term;          // over three variables
  std::optional<FiniteAlgebra> hsp_generator;   // HSP-mode when set

  bool axiom_mode() const { return !axioms.empty() || !hsp_generator; }

  const Term& diff_term() const {
    if (!difference_term) throw Error("variety '" + name + "': no difference term given");
    return *difference_term;
  }

  // axiom-mode satisfaction; throws in HSP mode without axioms
  bool member_by_axioms(const FiniteAlgebra& a, std::string* failed = nullptr) const;

  static VarietySpec parse(const std::string& text);
  static VarietySpec load(const std::string& path);
  std::string format() const;
};

// Variety of groups over mul/2, inv/1, e/0 with m(x,y,z) = mul(x,mul(inv(y),z)).
VarietySpec groups_variety();
// Abelian groups expanded by an unconstrained unary g.
VarietySpec abelian_groups_with_unary_variety();
// HSP(gen) with the group difference term.
VarietySpec hsp_variety(const FiniteAlgebra& gen, const Term& diff);

}  // namespace ualg
