#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

// Product of finite algebras over a shared signature; elements are coordinate
// tuples. Used for subpowers A^k, graph closures in A^k x Q, and the like.
struct ProductContext {
  Signature sig;
  std::vector<const FiniteAlgebra*> factors;

  int num_coords() const { return (int)factors.size(); }
  void apply(int op, const std::vector<const uint16_t*>& args, uint16_t* out) const {
    int ar = sig.arity(op);
    std::vector<int> buf(ar);
    for (int c = 0; c < num_coords(); ++c) {
      for (int i = 0; i < ar; ++i) buf[i] = args[i][c];
      out[c] = (uint16_t)factors[c]->apply(op, buf);
    }
  }
};

struct TupleHash {
  size_t operator()(const std::vector<uint16_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t x : v) {
      h ^= (size_t)x + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Subuniverse generated by seeds: deterministic closure, elements in
// discovery order (seed order, then by max participating index, symbol
// order, argument lex order).
struct GeneratedSub {
  std::vector<std::vector<uint16_t>> elements;
  std::unordered_map<std::vector<uint16_t>, int, TupleHash> index;

  int find(const std::vector<uint16_t>& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }
};

GeneratedSub close_subpower(const ProductContext& ctx,
                            const std::vector<std::vector<uint16_t>>& seeds, long long budget);

// Materialize a generated subuniverse as a FiniteAlgebra (index order).
FiniteAlgebra materialize(const ProductContext& ctx, const GeneratedSub& sub,
                          const std::string& name);

// Subalgebra of a single algebra generated by seeds.
struct SubalgebraResult {
  FiniteAlgebra algebra;
  std::vector<int> inclusion;  // sub index -> parent element
};
SubalgebraResult subalgebra_generated(const FiniteAlgebra& p, const std::vector<int>& seeds,
                                      long long budget);

// Free algebra on k generators in HSP(a): subalgebra of a^(a^k) generated by
// the k projection tuples.
struct FreeAlgebra {
  FiniteAlgebra algebra;               // materialized (gated by budget)
  std::vector<int> generators;         // indices of the projections
  std::vector<std::vector<uint16_t>> vectors;  // element vectors in a^(a^k)
  FiniteAlgebra base;                  // the HSP generator algebra
  int k = 0;
};
FreeAlgebra free_algebra_hsp(const FiniteAlgebra& a, int k, long long budget);

struct FreePresentation {
  FreeAlgebra free_alg;
  std::vector<int> gen_images;   // chosen images of free generators in Q
  std::vector<int> eval_map;     // F -> Q evaluation homomorphism
  Partition theta;               // kernel of eval_map
  FiniteAlgebra target;          // copy of Q
  std::vector<int> iso;          // F/theta block -> Q element (bijective hom)
};

// theta = kernel of the evaluation homomorphism determined by gen_images;
// requires gen_images to generate Q.
FreePresentation presentation_of(const FiniteAlgebra& q, const FiniteAlgebra& a, int k,
                                 const std::vector<int>& gen_images, long long budget);

// Evaluation homomorphism out of a free algebra determined by generator
// images in any same-signature algebra b; fails (returns false) if b is not
// in the variety the free algebra presents, i.e. the graph closure forks.
bool eval_hom_from_free(const FreeAlgebra& f, const FiniteAlgebra& b,
                        const std::vector<int>& gen_images, std::vector<int>& out_map,
                        long long budget);

}  // namespace ualg
