#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

namespace ualg {

// M(alpha,beta): the subalgebra of A^4 generated by row matrices
// [a a; b b] for (a,b) in alpha and column matrices [u v; u v] for (u,v) in
// beta. A matrix [r s; u v] is stored as the packed index
// ((r*n + s)*n + u)*n + v. If the closure saturates the whole of A^4 the
// element list is dropped and `full` is set.
struct MatrixAlgebra {
  int n = 0;
  bool full = false;
  std::vector<uint32_t> elements;  // sorted ascending; empty when full
  long long size() const {
    if (full) {
      long long t = 1;
      for (int i = 0; i < 4; ++i) t *= n;
      return t;
    }
    return (long long)elements.size();
  }
};

MatrixAlgebra matrix_algebra(const FiniteAlgebra& a, const Partition& alpha,
                             const Partition& beta, long long budget);

// R^1(alpha,beta): pairs (u,v) with some [r r; u v] in M(alpha,beta).
std::vector<std::pair<int, int>> r1_relation(const FiniteAlgebra& a, const MatrixAlgebra& m);

struct CommutatorTrace {
  int iterations = 0;
  long long matrix_count = 0;
  bool matrix_full = false;
};

// Term-condition commutator via the tau recursion: tau^0 = 0, (u,v) in
// R^{i+1} iff some [r s; u v] in M has (r,s) in tau^i, tau^{i+1} = transitive
// closure; stabilizes at [alpha,beta].
Partition tc_commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta,
                        long long budget, CommutatorTrace* trace = nullptr);

bool is_abelian(const FiniteAlgebra& a, long long budget);
bool is_central(const FiniteAlgebra& a, const Partition& alpha, long long budget);
bool is_perfect(const FiniteAlgebra& a, long long budget);
bool is_neutral(const FiniteAlgebra& a, const Partition& theta, long long budget);

// Largest theta with [theta,1] = 0: join of central principal congruences,
// verified; falls back to a lattice search if verification fails.
Partition center_congruence(const FiniteAlgebra& a, long long budget);

struct DifferenceTermReport {
  bool identity_ok = true;      // m(x,x,y) = y
  bool abelian_shift_ok = true; // (x, m(x,y,y)) in [alpha,alpha] for x alpha y
  bool malcev = false;          // m(x,y,y) = x as well
  std::vector<std::string> failures;
  bool ok() const { return identity_ok && abelian_shift_ok; }
};
DifferenceTermReport verify_difference_term(const FiniteAlgebra& a, const Term& m,
                                            long long budget);

}  // namespace ualg
