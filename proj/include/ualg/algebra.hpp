#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ualg/signature.hpp"

namespace ualg {

// A finite algebra: universe {0..size-1} and one total operation table per
// signature symbol, stored row-major in lex order of argument tuples.
struct FiniteAlgebra {
  std::string name;
  Signature sig;
  int size = 0;
  std::vector<std::vector<int>> tables;  // tables[op][flat index of args]
  std::vector<std::string> labels;       // optional, size() entries when present

  int apply(int op, std::span<const int> args) const {
    const auto& t = tables[op];
    size_t idx = 0;
    for (int a : args) idx = idx * size + a;
    return t[idx];
  }
  int apply0(int op) const { return tables[op][0]; }
  int apply1(int op, int a) const { return tables[op][a]; }
  int apply2(int op, int a, int b) const { return tables[op][(size_t)a * size + b]; }

  // table totality / range check; throws on malformed input
  void validate() const;

  std::string format() const;
  static FiniteAlgebra parse(const std::string& text);
  static FiniteAlgebra load(const std::string& path);
};

// --- term evaluation ------------------------------------------------------

// Flat postfix program for fast repeated evaluation of one term.
struct CompiledTerm {
  struct Instr {
    int op;   // -1: push variable var_index, else apply symbol op
    int var;  // variable slot when op == -1
  };
  std::vector<Instr> code;
  int num_vars = 0;

  static CompiledTerm compile(const Term& t, const std::vector<std::string>& var_order);
  // env[i] = value of var_order[i]
  int eval(const FiniteAlgebra& a, std::span<const int> env) const;
};

int eval_term(const Term& t, const FiniteAlgebra& a, const std::map<std::string, int>& env);

// Full table of the induced term operation over var_order.
std::vector<int> term_operation(const Term& t, const FiniteAlgebra& a,
                                const std::vector<std::string>& var_order);

bool satisfies(const FiniteAlgebra& a, const Identity& id);
// returns index of first failing axiom, or -1
int first_failing_axiom(const FiniteAlgebra& a, const std::vector<Identity>& axioms);

// --- constructions --------------------------------------------------------

struct ProductResult {
  FiniteAlgebra algebra;       // size = |A||B|, index = a*|B| + b
  std::vector<int> proj1, proj2;
};
ProductResult direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

std::vector<int> find_idempotents(const FiniteAlgebra& a);

// Homomorphism as an image vector over the domain universe.
struct Homomorphism {
  std::vector<int> map;
  bool zero_preserving = false;
};

bool is_homomorphism(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                     const std::vector<int>& map);

// All homomorphisms dom -> cod, found by assigning images to a greedy
// generating set and closing; deterministic order (lex on generator images).
std::vector<Homomorphism> enumerate_homs(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                                         bool zero_preserving, int zero_dom, int zero_cod,
                                         long long limit = 1000000);

// Smallest generating set under greedy-min element order.
std::vector<int> greedy_generators(const FiniteAlgebra& a);

// Unique homomorphism dom -> cod extending gens -> images, if one exists.
// dom must be generated by gens.
bool extend_hom(const FiniteAlgebra& dom, const std::vector<int>& gens,
                const FiniteAlgebra& cod, const std::vector<int>& images,
                std::vector<int>& out_map);

bool find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::vector<int>& out_map);

// --- builders (groups as algebras over mul/2, inv/1, e/0) ------------------

FiniteAlgebra cyclic_group(int n);
FiniteAlgebra klein_four();
FiniteAlgebra dihedral_group4();   // D4, order 8: index i + 4j for r^i s^j
FiniteAlgebra quaternion_group();  // Q8, order 8
FiniteAlgebra symmetric_group3();
FiniteAlgebra alternating_group5();

// Same algebra with one extra unary symbol appended.
FiniteAlgebra expand_with_unary(const FiniteAlgebra& a, const std::string& opname,
                                const std::vector<int>& table);

// difference term x * inv(y) * z over the group signature
Term group_difference_term(const Signature& sig);

}  // namespace ualg
