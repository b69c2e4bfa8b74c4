#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ualg/abgroup.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/subpower.hpp"
#include "ualg/variety.hpp"

namespace ualg {

// A(alpha): the congruence as a subalgebra of A^2, pairs in lex order.
struct PairAlgebraResult {
  FiniteAlgebra algebra;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> pair_index;  // x*|A|+y -> index or -1

  int index_of(int x, int y, int n) const { return pair_index[(size_t)x * n + y]; }
};
PairAlgebraResult pair_algebra(const FiniteAlgebra& a, const Partition& alpha);

// Delta_{alpha beta} = Cg^{A(alpha)} of the beta-diagonal pairs.
Partition delta_congruence(const FiniteAlgebra& a, const PairAlgebraResult& apair,
                           const Partition& beta);

// Kernel algebra: abelian algebra with designated zero, group structure from
// the difference term, and a per-symbol linear decomposition
// f(x1..xn) = sum r_{f,i}(x_i) + d_f.
struct KernelAlgebra {
  FiniteAlgebra alg;
  int zero = 0;
  AbGroup group;
  std::vector<std::vector<std::vector<int>>> endos;  // [op][coord]: element map
  std::vector<int> d;                                // [op]
  bool zero_idempotent = true;

  int plus(int x, int y) const { return group.plus(x, y); }
  int minus(int x) const { return group.minus(x); }
  int sub(int x, int y) const { return group.plus(x, group.minus(y)); }
};

// Verify abelian-group structure via the difference term and extract the
// linear decomposition; throws DecompositionFailed when the tables do not
// decompose (e.g. the designated zero is wrong or m is not a difference term).
KernelAlgebra make_kernel_algebra(const FiniteAlgebra& b, int zero, const Term& diff_term);

// A central extension A -> A/alpha together with its kernel algebra
// B = A(alpha)/Delta_{alpha 1}.
struct CentralExtension {
  FiniteAlgebra a;
  Partition alpha;
  FiniteAlgebra q;
  std::vector<int> pi;  // A -> Q
  PairAlgebraResult apair;
  Partition delta1;            // Delta_{alpha 1} on A(alpha)
  std::vector<int> pair_class; // A(alpha) index -> B element
  KernelAlgebra b;
};
CentralExtension central_extension(const FiniteAlgebra& a, const Partition& alpha,
                                   const VarietySpec& v, long long budget);

// Sections of pi; the default picks least preimages.
std::vector<int> default_section(const CentralExtension& ext);
std::vector<std::vector<int>> all_sections(const CentralExtension& ext, long long limit);

// Per-symbol cocycle tables Q^{ar f} -> B.
struct Cocycle {
  std::vector<std::vector<int>> t;

  std::vector<int> flat() const {
    std::vector<int> out;
    for (const auto& v : t) out.insert(out.end(), v.begin(), v.end());
    return out;
  }
  bool operator==(const Cocycle& o) const { return t == o.t; }
  bool operator<(const Cocycle& o) const { return flat() < o.flat(); }
};

Cocycle zero_cocycle(const Signature& sig, int q_size, int b_zero);
Cocycle cocycle_add(const Cocycle& x, const Cocycle& y, const KernelAlgebra& b);
Cocycle cocycle_sub(const Cocycle& x, const Cocycle& y, const KernelAlgebra& b);

std::string format_cocycle(const Cocycle& t, const Signature& sig);
Cocycle parse_cocycle(const std::string& text, const Signature& sig, int q_size);

// B (x)^T Q on index b*|Q| + q.
FiniteAlgebra basic_construction(const KernelAlgebra& b, const FiniteAlgebra& q,
                                 const Cocycle& t);

// T_f(x) = class of [ l(f^Q(x)) ; f^A(l(x)) ] in B, per section l.
Cocycle extract_cocycle(const CentralExtension& ext, const std::vector<int>& section);

// psi: A -> B x Q, x -> ([l(pi(x)); x], pi(x)); bijective homomorphism onto
// basic_construction(B, Q, extract_cocycle(ext, l)).
std::vector<int> centriso_map(const CentralExtension& ext, const std::vector<int>& section);

// G_f(x) = f^B(h(x)) - h(f^Q(x)).
Cocycle coboundary_from_witness(const std::vector<int>& h, const FiniteAlgebra& q,
                                const KernelAlgebra& b);

// Derivations = homomorphisms Q -> B (witnesses of the zero coboundary).
std::vector<std::vector<int>> derivations(const FiniteAlgebra& q, const KernelAlgebra& b,
                                          long long limit);

// gamma(b,q) = (b + d(q), q) on the represented extension; verified to be a
// stabilizing automorphism.
std::vector<int> stabilizing_automorphism(const KernelAlgebra& b, const FiniteAlgebra& q,
                                          const Cocycle& t, const std::vector<int>& d);

// Search a stabilizing isomorphism gamma : B (x)^{T1} Q -> B (x)^{T2} Q,
// i.e. gamma over the base (p2 . gamma = p2) with gamma = m(gamma . r, r, id)
// for every trace r of p2 (m evaluated in the codomain). Exists iff [T1] = [T2].
bool find_stabilizing_iso(const KernelAlgebra& b, const FiniteAlgebra& q, const Cocycle& t1,
                          const Cocycle& t2, const Term& diff_term, std::vector<int>* gamma_out,
                          long long budget);

// Idempotent-ideal map: A(alpha)/Delta_{alpha 1} ~ I_alpha via [a;b] -> m(a,b,u).
struct IdemIdealIso {
  std::vector<int> map;          // B element -> element of A (inside I_alpha)
  std::vector<int> ideal;        // the alpha-class of u
  FiniteAlgebra ideal_algebra;   // induced subalgebra on I_alpha
};
IdemIdealIso idempotent_ideal_iso(const FiniteAlgebra& a, const Partition& alpha, int u,
                                  const VarietySpec& v, long long budget);

// The short sequence 0 -> kappa(A(alpha ^ [1,1])) -> B -> Abar(beta)/Delta -> 0.
struct SplitSequenceReport {
  int kernel_size = 0;
  int middle_size = 0;
  int right_size = 0;
  bool xi_homomorphism = false;
  bool xi_surjective = false;
  bool kernel_matches = false;
  bool split_found = false;             // a right inverse of xi exists
  std::vector<int> kernel_elements;     // subgroup of B
  std::vector<int> xi;                  // B -> right side
  std::vector<int> splitting;           // right side -> B when split_found
};
SplitSequenceReport split_sequence_check(const FiniteAlgebra& a, const Partition& alpha,
                                         const VarietySpec& v, long long budget);

}  // namespace ualg
