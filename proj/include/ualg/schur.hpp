#pragma once

#include <optional>
#include <vector>

#include "ualg/cohomology.hpp"
#include "ualg/extension.hpp"
#include "ualg/subpower.hpp"
#include "ualg/variety.hpp"

namespace ualg {

// Schur multiplier of Q from a free presentation F/theta ~ Q: the pushdown
// kappa_{theta' 1}( F'(theta ^ [1,1] / [theta,1]) ) inside the kernel algebra
// of the central extension F' = F/[theta,1] -> Q.
struct SchurMultiplier {
  FreePresentation pres;
  FiniteAlgebra f1;            // F/[theta,1]
  std::vector<int> f_to_f1;
  Partition theta1;            // theta/[theta,1]
  CentralExtension ext;        // F' -> Q
  std::vector<int> elements;   // multiplier as a subset of ext.b elements
  KernelAlgebra multiplier;    // re-indexed subalgebra with kernel structure
  std::vector<int> to_b;       // multiplier index -> ext.b element
  std::vector<int> invariant_factors;
  bool f1_has_idempotent = false;
  bool ideal_iso_checked = false;  // idempotent-ideal map against I_(theta ^ [1,1])/[theta,1]
};

SchurMultiplier schur_multiplier(const FreePresentation& pres, const VarietySpec& v,
                                 long long budget);

// Induced map on kernel algebras from sigma : F1 -> F2 lifting the identity
// of Q: [a;b]/Delta -> [sigma(r(a)); sigma(m(b,a,r(a)))]/Delta.
std::vector<int> induced_kernel_map(const SchurMultiplier& sm1, const SchurMultiplier& sm2,
                                    const std::vector<int>& sigma_f1p_to_f2p,
                                    const VarietySpec& v);

struct InvarianceReport {
  bool factors_match = false;
  bool round_trip_identity = false;  // lambda_hat . sigma_hat = id on multiplier 1
  bool round_trip_identity2 = false; // sigma_hat . lambda_hat = id on multiplier 2
  Report report;
};
InvarianceReport invariance_check(const FreePresentation& p1, const FreePresentation& p2,
                                  const VarietySpec& v, long long budget);

struct CoverFamilyMember {
  CentralExtension rho;     // E -> P central
  std::vector<int> gamma;   // Q -> P
};

struct CoverResult {
  FiniteAlgebra algebra;       // multiplier (x)^S Q
  Cocycle s;                   // the projected cocycle
  Partition ker_pi;
  bool kernel_below_comm = false;
  bool kernel_below_center = false;
  std::vector<bool> lifting_ok;  // one per family member
  Report report;
};
CoverResult cover_construct(const FreePresentation& pres, const VarietySpec& v,
                            const std::vector<CoverFamilyMember>& family, long long budget);

// Prop schurmult route: im(delta) from the presentation extension compared
// with Hom(multiplier, E) as abelian groups.
Report schur_hopf_check(const FiniteAlgebra& q, const KernelAlgebra& e,
                        const FreePresentation& pres, const VarietySpec& v, long long budget);

}  // namespace ualg
