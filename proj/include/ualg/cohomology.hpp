#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ualg/abgroup.hpp"
#include "ualg/extension.hpp"
#include "ualg/report.hpp"
#include "ualg/snf.hpp"
#include "ualg/variety.hpp"

namespace ualg {

// --- compatibility of a 2-cocycle with a variety ---------------------------

// Reference decision: build B (x)^T Q and check the axiom list outright.
bool cocycle_compatible_full(const Cocycle& t, const FiniteAlgebra& q, const KernelAlgebra& b,
                             const VarietySpec& v);

// Same predicate, evaluated only on zero-B inputs. Valid whenever B is a
// kernel algebra with idempotent zero and Q, B satisfy the axioms; both
// requirements are rechecked on entry.
struct CompatChecker {
  const FiniteAlgebra& q;
  const KernelAlgebra& b;
  std::vector<CompiledTerm> lhs, rhs;
  std::vector<int> nvars;

  CompatChecker(const FiniteAlgebra& q_, const KernelAlgebra& b_, const VarietySpec& v);
  bool compatible(const Cocycle& t) const;

  // evaluate the B-part of a term at b-inputs = 0 under a Q-assignment
  int eval_dpart(const CompiledTerm& ct, const Cocycle& t, std::span<const int> qenv) const;
};

// --- Z^2, B^2, H^2 ----------------------------------------------------------

struct CocycleGroupResult {
  std::vector<Cocycle> members;  // lex order of flattened tables
  long long searched = 0;
  bool normalized = false;  // entries at the all-0' tuple pinned to 0
};

// All V-compatible cocycles, by enumeration over the full table space.
CocycleGroupResult cocycle_group(const FiniteAlgebra& q, const KernelAlgebra& b,
                                 const VarietySpec& v, bool normalize, long long budget);

// All coboundaries G_h, h ranging over B^Q; deduplicated, lex order.
std::vector<Cocycle> coboundary_group(const FiniteAlgebra& q, const KernelAlgebra& b,
                                      long long budget);

// Search a witness h with t = G_h; h is written to *witness when found.
bool is_coboundary(const Cocycle& t, const FiniteAlgebra& q, const KernelAlgebra& b,
                   long long budget, std::vector<int>* witness = nullptr);

// lexicographically least element of t + B^2
Cocycle canonical_class_rep(const Cocycle& t, const std::vector<Cocycle>& b2,
                            const KernelAlgebra& b);

struct H2Result {
  std::vector<Cocycle> reps;        // canonical class representatives, lex order
  std::vector<int> invariant_factors;
  long long z2_order = 0;
  long long b2_order = 0;
  long long order = 1;
  AbGroup group;                    // on rep indices
  std::vector<Cocycle> b2;          // the coboundary list (enumeration route)

  int class_of(const Cocycle& t, const KernelAlgebra& b) const;
};

// Enumeration route (the reference semantics).
H2Result h2_group(const FiniteAlgebra& q, const KernelAlgebra& b, const VarietySpec& v,
                  long long budget);

// Additive route: the compatibility defect is linear in T, so Z^2 is the
// kernel of an integer matrix over the cyclic decomposition of B and H^2
// comes out of Smith normal form. Used when the table space is too large to
// enumerate; cross-checked against h2_group in the tests.
struct H2LinearResult {
  std::vector<int> invariant_factors;
  long long z2_order = 0;
  long long b2_order = 0;
  long long order = 1;
  std::vector<Cocycle> generator_reps;  // cocycles generating H^2
};
H2LinearResult h2_linear(const FiniteAlgebra& q, const KernelAlgebra& b, const VarietySpec& v);

// --- hom groups -------------------------------------------------------------

// Hom(dom, E) with pointwise addition in E (zero-preserving when flagged).
struct HomGroup {
  std::vector<std::vector<int>> maps;  // sorted
  AbGroup group;
  std::vector<int> invariant_factors;

  int index_of(const std::vector<int>& m) const;
};
HomGroup hom_group(const FiniteAlgebra& dom, const KernelAlgebra& e, bool zero_preserving,
                   int zero_dom, long long limit);

// --- the three maps ---------------------------------------------------------

// inflation on homs: phi -> phi . pi
std::vector<int> inflate_hom(const std::vector<int>& phi, const std::vector<int>& pi);
// inflation on cocycles: T -> T . pi (tables pulled back along pi)
Cocycle inflate_cocycle(const Cocycle& t, const std::vector<int>& pi, int dom_size,
                        const Signature& sig);

// restriction Hom(A,E) -> Hom(B,E) through the representation of ext
std::vector<int> restrict_hom(const CentralExtension& ext, const std::vector<int>& phi,
                              const KernelAlgebra& e);

// transgression: phi in Hom(B,E), T over (Q,B) -> phi . T over (Q,E)
Cocycle transgress(const std::vector<int>& phi, const Cocycle& t);

// --- Hochschild-Serre -------------------------------------------------------

struct FiveTermReport {
  long long orders[5] = {0, 0, 0, 0, 0};
  bool complex_ok = false;
  bool exact_at[4] = {false, false, false, false};
  bool h2a_computed = false;
  bool idempotent_in_a = false;
  Report report;
};
FiveTermReport hochschild_serre_check(const CentralExtension& ext, const KernelAlgebra& e,
                                      const VarietySpec& v, long long budget);

// --- report bundles ---------------------------------------------------------

// A central extension rho: E -> P paired with a homomorphism gamma: Q -> P
// (gamma indexed by the target algebra of the presentation / extension at hand).
struct LiftingInstance {
  CentralExtension rho;
  std::vector<int> gamma;
};

// Checks on a free presentation: centrality of
// theta/[theta,1], the lifting construction through each family member, and
// the idempotent equivalences (a), (b), (c) scoped to the family.
Report presentation_lifting_report(const FreePresentation& pres, const VarietySpec& v,
                       const std::vector<LiftingInstance>& family, long long budget);

Report inflation_hom_report(const CentralExtension& ext1, const CentralExtension& ext2,
                      const std::vector<int>& pi_q1_to_q2, const VarietySpec& v,
                      long long budget);

Report abelian_inflation_report(const FiniteAlgebra& q, const KernelAlgebra& b, const VarietySpec& v,
                      long long budget);

// classes whose realization is abelian
std::vector<int> ext_subgroup(const H2Result& h2, const FiniteAlgebra& q, const KernelAlgebra& b,
                              long long budget);

Report ext_sequence_report(const FiniteAlgebra& q, const KernelAlgebra& b, const KernelAlgebra& e,
                        const VarietySpec& v, long long budget);

// Perfectness and universal-central-extension clauses checked against a
// finite family of kernel algebras (for the H2 clauses) and lifting
// instances (for the uniqueness clause).
Report perfect_universal_report(const CentralExtension& ext, const VarietySpec& v,
                                const std::vector<KernelAlgebra>& family,
                                const std::vector<LiftingInstance>& lift_family,
                                long long budget);

// Liftings of gamma . pi through rho: homomorphisms tau: A -> E with
// rho . tau = gamma . pi; count capped by the search budget.
std::vector<std::vector<int>> find_liftings(const FiniteAlgebra& a, const std::vector<int>& pi,
                                            const CentralExtension& rho,
                                            const std::vector<int>& gamma, long long budget);

}  // namespace ualg
