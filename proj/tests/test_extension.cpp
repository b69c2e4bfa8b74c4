#include <algorithm>
#include <set>

#include "doctest.h"
#include "ualg/cohomology.hpp"
#include "ualg/extension.hpp"

using namespace ualg;

TEST_SUITE_BEGIN("extension");

namespace {
constexpr long long kBudget = 10000000;
}

TEST_CASE("pair algebra sizes") {
  FiniteAlgebra z4 = cyclic_group(4);
  auto p0 = pair_algebra(z4, Partition::zero(4));
  CHECK(p0.algebra.size == 4);  // diagonal
  FiniteAlgebra z2 = cyclic_group(2);
  auto p1 = pair_algebra(z2, Partition::one(2));
  CHECK(p1.algebra.size == 4);
  auto p2 = pair_algebra(z4, cg(z4, {{0, 2}}));
  CHECK(p2.algebra.size == 8);  // two blocks of size two
}

TEST_CASE("delta congruence quotients") {
  FiniteAlgebra z2 = cyclic_group(2);
  auto ap = pair_algebra(z2, Partition::one(2));
  Partition d = delta_congruence(z2, ap, Partition::one(2));
  CHECK(d.num_blocks() == 2);
  // beta = 0 gives the trivial congruence on A(alpha)
  Partition d0 = delta_congruence(z2, ap, Partition::zero(2));
  CHECK(d0.num_blocks() == ap.algebra.size);
  FiniteAlgebra z4 = cyclic_group(4);
  auto ap4 = pair_algebra(z4, cg(z4, {{0, 2}}));
  Partition d4 = delta_congruence(z4, ap4, Partition::one(4));
  CHECK(d4.num_blocks() == 2);  // kernel algebra Z2
}

TEST_CASE("kernel algebra of Z4 over Cg(0,2)") {
  FiniteAlgebra z4 = cyclic_group(4);
  VarietySpec v = groups_variety();
  CentralExtension ext = central_extension(z4, cg(z4, {{0, 2}}), v, kBudget);
  CHECK(ext.b.alg.size == 2);
  CHECK(ext.b.zero_idempotent);
  CHECK(ext.b.group.invariant_factors() == std::vector<int>{2});
  for (int op = 0; op < ext.b.alg.sig.num_ops(); ++op) CHECK(ext.b.d[op] == ext.b.zero);
  // abelian A with alpha = 1: kernel algebra isomorphic to A as a group
  CentralExtension e2 = central_extension(z4, Partition::one(4), v, kBudget);
  CHECK(e2.b.group.invariant_factors() == std::vector<int>{4});
  // alpha = 0: trivial kernel algebra
  CentralExtension e0 = central_extension(z4, Partition::zero(4), v, kBudget);
  CHECK(e0.b.alg.size == 1);
  // noncentral congruence is rejected
  FiniteAlgebra s3 = symmetric_group3();
  Partition a3 = tc_commutator(s3, Partition::one(6), Partition::one(6), kBudget);
  CHECK_THROWS_AS(central_extension(s3, a3, v, kBudget), NotCentral);
}

TEST_CASE("basic construction: trivial cocycle is the product") {
  VarietySpec v = groups_variety();
  FiniteAlgebra z2 = cyclic_group(2);
  CentralExtension ext = central_extension(z2, Partition::one(2), v, kBudget);
  const KernelAlgebra& b = ext.b;  // Z2 kernel algebra
  Cocycle zero = zero_cocycle(z2.sig, 2, b.zero);
  FiniteAlgebra prod = basic_construction(b, z2, zero);
  std::vector<int> iso;
  CHECK(find_isomorphism(prod, klein_four(), iso));
  // nonzero cocycle on mul: T(1,1) = 1 gives Z4
  Cocycle t = zero;
  int nz = 1 - b.zero;
  t.t[z2.sig.index_of("mul")][3] = nz;  // T(1,1)
  t.t[z2.sig.index_of("inv")][1] = nz;  // forced by x*inv(x)=e
  FiniteAlgebra twisted = basic_construction(b, z2, t);
  std::vector<int> iso2;
  CHECK(find_isomorphism(twisted, cyclic_group(4), iso2));
  // whenever the result lands in the variety, the second projection has a
  // central kernel
  for (const FiniteAlgebra* built : {&prod, &twisted}) {
    if (first_failing_axiom(*built, v.axioms) >= 0) continue;
    Partition ker(built->size);
    for (int x = 0; x < built->size; ++x)
      for (int y = x + 1; y < built->size; ++y)
        if (x % 2 == y % 2) ker.unite(x, y);
    ker.normalize();
    CHECK(is_central(*built, ker, kBudget));
  }
}

TEST_CASE("unary-shift example algebra via the basic construction") {
  // B' = <Z2, g = id>, Q = <Z2, g = id>, T_g = -1: g^A(b,x) = (b+1, x)
  VarietySpec v = abelian_groups_with_unary_variety();
  FiniteAlgebra bp = expand_with_unary(cyclic_group(2), "g", {0, 1});
  FiniteAlgebra q = expand_with_unary(cyclic_group(2), "g", {0, 1});
  KernelAlgebra b = make_kernel_algebra(bp, 0, v.diff_term());
  Cocycle t = zero_cocycle(bp.sig, 2, b.zero);
  int gop = bp.sig.index_of("g");
  t.t[gop][0] = 1;  // -1 = 1 in Z2
  t.t[gop][1] = 1;
  FiniteAlgebra a = basic_construction(b, q, t);
  // with index b*|Q|+x: g(b,x) = (b+1, x)
  for (int bb = 0; bb < 2; ++bb)
    for (int x = 0; x < 2; ++x) CHECK(a.apply1(gop, bb * 2 + x) == ((bb + 1) % 2) * 2 + x);
  // direct product B x Q is isomorphic to A (with B = <Z2, g(x)=x+1>)
  FiniteAlgebra bplus = expand_with_unary(cyclic_group(2), "g", {1, 0});
  auto prod = direct_product(bplus, q);
  std::vector<int> iso;
  CHECK(find_isomorphism(a, prod.algebra, iso));
}

TEST_CASE("extract cocycle and reconstruction on Z4") {
  VarietySpec v = groups_variety();
  FiniteAlgebra z4 = cyclic_group(4);
  CentralExtension ext = central_extension(z4, cg(z4, {{0, 2}}), v, kBudget);
  std::vector<int> l = default_section(ext);
  Cocycle t = extract_cocycle(ext, l);
  // T_mul(1,1) is the nonzero class
  int mul = z4.sig.index_of("mul");
  CHECK(t.t[mul][3] != ext.b.zero);
  // psi is an isomorphism onto the basic construction
  FiniteAlgebra rebuilt = basic_construction(ext.b, ext.q, t);
  std::vector<int> psi = centriso_map(ext, l);
  CHECK(is_homomorphism(z4, rebuilt, psi));
  std::set<int> im(psi.begin(), psi.end());
  CHECK((int)im.size() == z4.size);
  // trivial cocycle from the product with the obvious section
  auto prod = direct_product(cyclic_group(2), cyclic_group(2));
  Partition kerp = kernel_partition(prod.proj2, 4);
  CentralExtension pext = central_extension(prod.algebra, kerp, v, kBudget);
  std::vector<int> pl = default_section(pext);
  Cocycle pt = extract_cocycle(pext, pl);
  CHECK(is_coboundary(pt, pext.q, pext.b, kBudget));
}

TEST_CASE("round trip over all sections and central congruences") {
  VarietySpec gv = groups_variety();
  for (const FiniteAlgebra& a :
       {cyclic_group(4), cyclic_group(6), klein_four(), dihedral_group4()}) {
    for (const auto& alpha : all_congruences(a)) {
      if (!is_central(a, alpha, kBudget)) continue;
      CentralExtension ext = central_extension(a, alpha, gv, kBudget);
      for (const auto& l : all_sections(ext, 4096)) {
        Cocycle t = extract_cocycle(ext, l);
        FiniteAlgebra rebuilt = basic_construction(ext.b, ext.q, t);
        std::vector<int> psi = centriso_map(ext, l);
        CHECK(is_homomorphism(a, rebuilt, psi));
        std::set<int> im(psi.begin(), psi.end());
        CHECK((int)im.size() == a.size);
      }
    }
  }
}

TEST_CASE("changing the section shifts the cocycle by a coboundary") {
  VarietySpec v = groups_variety();
  FiniteAlgebra z6 = cyclic_group(6);
  CentralExtension ext = central_extension(z6, cg(z6, {{0, 2}}), v, kBudget);
  auto sections = all_sections(ext, 4096);
  Cocycle t0 = extract_cocycle(ext, sections[0]);
  for (size_t i = 1; i < sections.size(); ++i) {
    Cocycle ti = extract_cocycle(ext, sections[i]);
    CHECK(is_coboundary(cocycle_sub(ti, t0, ext.b), ext.q, ext.b, kBudget));
  }
}

TEST_CASE("coboundary witnesses") {
  VarietySpec v = groups_variety();
  FiniteAlgebra z3 = cyclic_group(3);
  KernelAlgebra b3 = make_kernel_algebra(z3, 0, v.diff_term());
  // h == 0 and homomorphisms give the zero coboundary
  Cocycle z = zero_cocycle(z3.sig, 3, 0);
  CHECK(coboundary_from_witness({0, 0, 0}, z3, b3) == z);
  CHECK(coboundary_from_witness({0, 1, 2}, z3, b3) == z);  // identity hom
  CHECK(coboundary_from_witness({0, 2, 1}, z3, b3) == z);  // x -> -x hom
  // non-homomorphism gives a nonzero coboundary
  Cocycle g = coboundary_from_witness({0, 0, 1}, z3, b3);
  CHECK(!(g == z));
  int mul = z3.sig.index_of("mul");
  // G_mul(1,1) = h(1)+h(1)-h(2) = -1 = 2
  CHECK(g.t[mul][1 * 3 + 1] == 2);
}

TEST_CASE("derivations and stabilizing automorphisms") {
  VarietySpec v = groups_variety();
  FiniteAlgebra z2 = cyclic_group(2);
  KernelAlgebra b = make_kernel_algebra(z2, 0, v.diff_term());
  auto ders = derivations(z2, b, 100000);
  CHECK(ders.size() == 2);  // 0 and the identity
  // d = id on the direct product swaps (b,q) for q = 1
  Cocycle zero = zero_cocycle(z2.sig, 2, 0);
  std::vector<int> gamma = stabilizing_automorphism(b, z2, zero, {0, 1});
  CHECK(gamma[0 * 2 + 1] == 1 * 2 + 1);
  CHECK(gamma[1 * 2 + 1] == 0 * 2 + 1);
  CHECK(gamma[0] == 0);
  // d = 0 gives the identity
  std::vector<int> id = stabilizing_automorphism(b, z2, zero, {0, 0});
  for (int i = 0; i < 4; ++i) CHECK(id[i] == i);
  // count of stabilizing automorphisms = |Hom(Q,B)| on the Z4 extension
  FiniteAlgebra z4 = cyclic_group(4);
  CentralExtension ext = central_extension(z4, cg(z4, {{0, 2}}), v, kBudget);
  Cocycle t = extract_cocycle(ext, default_section(ext));
  auto homs = enumerate_homs(z2, ext.b.alg, true, 0, ext.b.zero, 100000);
  int count = 0;
  for (auto& h : homs) {
    std::vector<int> g2 = stabilizing_automorphism(ext.b, ext.q, t, h.map);
    (void)g2;
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("idempotent ideal isomorphism") {
  VarietySpec v = groups_variety();
  FiniteAlgebra z4 = cyclic_group(4);
  auto iso = idempotent_ideal_iso(z4, cg(z4, {{0, 2}}), 0, v, kBudget);
  CHECK(iso.ideal == std::vector<int>{0, 2});
  FiniteAlgebra d4 = dihedral_group4();
  Partition zeta = center_congruence(d4, kBudget);
  auto iso2 = idempotent_ideal_iso(d4, zeta, 0, v, kBudget);
  CHECK(iso2.ideal == std::vector<int>{0, 2});
  std::vector<int> m;
  CHECK(find_isomorphism(iso2.ideal_algebra, cyclic_group(2), m));
  // alpha = 0: singleton ideal
  auto iso3 = idempotent_ideal_iso(z4, Partition::zero(4), 0, v, kBudget);
  CHECK(iso3.ideal == std::vector<int>{0});
  CHECK_THROWS_AS(idempotent_ideal_iso(z4, Partition::zero(4), 1, v, kBudget), NotIdempotent);
}

TEST_CASE("split sequence check") {
  VarietySpec v = groups_variety();
  // abelian: [1,1] = 0, kernel trivial, middle = right
  FiniteAlgebra z4 = cyclic_group(4);
  auto rep = split_sequence_check(z4, cg(z4, {{0, 2}}), v, kBudget);
  CHECK(rep.kernel_size == 1);
  CHECK(rep.xi_homomorphism);
  CHECK(rep.xi_surjective);
  CHECK(rep.kernel_matches);
  CHECK(rep.middle_size == rep.right_size);
  CHECK(rep.split_found);
  // D4 with the center congruence: element count identity |B| = |ker| * |im|
  FiniteAlgebra d4 = dihedral_group4();
  Partition zeta = center_congruence(d4, kBudget);
  auto rep2 = split_sequence_check(d4, zeta, v, kBudget);
  CHECK(rep2.xi_homomorphism);
  CHECK(rep2.xi_surjective);
  CHECK(rep2.kernel_matches);
  CHECK(rep2.middle_size == rep2.kernel_size * rep2.right_size);
}

TEST_SUITE_END();
