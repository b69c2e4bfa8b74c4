#include <algorithm>
#include <set>

#include "doctest.h"
#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"
#include "ualg/subpower.hpp"

using namespace ualg;

TEST_SUITE_BEGIN("algebra");

namespace {

// test-only oracle: subuniverse closure by repeated full scans
std::set<int> naive_closure(const FiniteAlgebra& a, const std::vector<int>& seeds) {
  std::set<int> s(seeds.begin(), seeds.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int op = 0; op < a.sig.num_ops(); ++op) {
      int ar = a.sig.arity(op);
      std::vector<int> members(s.begin(), s.end());
      size_t total = 1;
      for (int i = 0; i < ar; ++i) total *= members.size();
      if (ar == 0) {
        if (s.insert(a.apply0(op)).second) grew = true;
        continue;
      }
      if (members.empty()) continue;
      std::vector<int> args(ar);
      for (size_t flat = 0; flat < total; ++flat) {
        size_t rem = flat;
        for (int i = ar - 1; i >= 0; --i) {
          args[i] = members[rem % members.size()];
          rem /= members.size();
        }
        if (s.insert(a.apply(op, args)).second) grew = true;
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("group builders are groups") {
  Signature gsig = Signature::parse("mul/2, inv/1, e/0");
  std::vector<Identity> axioms;
  for (const char* s : {"mul(mul(x,y),z) = mul(x,mul(y,z))", "mul(x,e) = x", "mul(e,x) = x",
                        "mul(x,inv(x)) = e", "mul(inv(x),x) = e"})
    axioms.push_back(Identity::parse(s, gsig));
  for (const FiniteAlgebra& g : {cyclic_group(4), klein_four(), symmetric_group3(),
                                 dihedral_group4(), quaternion_group()}) {
    g.validate();
    CHECK(first_failing_axiom(g, axioms) == -1);
  }
  FiniteAlgebra a5 = alternating_group5();
  CHECK(a5.size == 60);
  CHECK(first_failing_axiom(a5, axioms) == -1);
}

TEST_CASE("direct products") {
  auto k4 = direct_product(cyclic_group(2), cyclic_group(2));
  // klein four: every element self-inverse
  for (int x = 0; x < 4; ++x) CHECK(k4.algebra.apply2(0, x, x) == k4.algebra.apply0(2));
  auto p = direct_product(cyclic_group(3), cyclic_group(4));
  CHECK(p.algebra.size == 12);
  // A x trivial ~ A
  auto t = direct_product(symmetric_group3(), cyclic_group(1));
  std::vector<int> iso;
  CHECK(find_isomorphism(t.algebra, symmetric_group3(), iso));
}

TEST_CASE("algebra file round trip") {
  FiniteAlgebra s3 = symmetric_group3();
  FiniteAlgebra back = FiniteAlgebra::parse(s3.format());
  CHECK(back.size == s3.size);
  CHECK(back.tables == s3.tables);
  CHECK(back.sig.same_as(s3.sig));
}

TEST_CASE("subalgebra_generated matches naive closure") {
  FiniteAlgebra z4 = cyclic_group(4);
  auto sub = subalgebra_generated(z4, {1}, 1000);
  CHECK(sub.algebra.size == 4);  // 1 generates Z4
  auto sub0 = subalgebra_generated(z4, {0}, 1000);
  CHECK(sub0.algebra.size == 1);
  FiniteAlgebra d4 = dihedral_group4();
  for (std::vector<int> seeds : {std::vector<int>{1}, {4}, {1, 4}, {2, 6}}) {
    auto got = subalgebra_generated(d4, seeds, 1000);
    std::set<int> inc(got.inclusion.begin(), got.inclusion.end());
    CHECK(inc == naive_closure(d4, seeds));
  }
}

TEST_CASE("subalgebra_generated monotone and idempotent") {
  FiniteAlgebra d4 = dihedral_group4();
  auto s1 = subalgebra_generated(d4, {2}, 1000);
  auto s2 = subalgebra_generated(d4, {2, 4}, 1000);
  std::set<int> i1(s1.inclusion.begin(), s1.inclusion.end());
  std::set<int> i2(s2.inclusion.begin(), s2.inclusion.end());
  CHECK(std::includes(i2.begin(), i2.end(), i1.begin(), i1.end()));
  auto again = subalgebra_generated(d4, s1.inclusion, 1000);
  std::set<int> ia(again.inclusion.begin(), again.inclusion.end());
  CHECK(ia == i1);
}

TEST_CASE("budget exceeded") {
  FiniteAlgebra z4 = cyclic_group(4);
  CHECK_THROWS_AS(subalgebra_generated(z4, {1}, 2), BudgetExceeded);
}

TEST_CASE("quotient basics") {
  FiniteAlgebra z4 = cyclic_group(4);
  Partition theta = cg(z4, {{0, 2}});
  auto q = quotient(z4, theta);
  CHECK(q.algebra.size == 2);
  std::vector<int> iso;
  CHECK(find_isomorphism(q.algebra, cyclic_group(2), iso));
  // A/0 ~ A, A/1 trivial
  auto q0 = quotient(z4, Partition::zero(4));
  CHECK(q0.algebra.size == 4);
  auto q1 = quotient(z4, Partition::one(4));
  CHECK(q1.algebra.size == 1);
  // kernel of canonical surjection is theta again
  CHECK(kernel_partition(q.surjection, 4) == theta);
}

TEST_CASE("find_idempotents") {
  CHECK(find_idempotents(cyclic_group(4)) == std::vector<int>{0});
  // Z2 expanded with g(x) = x+1 has no idempotent
  FiniteAlgebra b = expand_with_unary(cyclic_group(2), "g", {1, 0});
  CHECK(find_idempotents(b).empty());
  // two-element semilattice: meet operation
  FiniteAlgebra lat;
  lat.name = "sl2";
  lat.sig = Signature::parse("meet/2");
  lat.size = 2;
  lat.tables = {{0, 0, 0, 1}};
  CHECK(find_idempotents(lat) == std::vector<int>{0, 1});
}

TEST_CASE("enumerate_homs") {
  auto h1 = enumerate_homs(cyclic_group(2), cyclic_group(3), true, 0, 0, 1000);
  CHECK(h1.size() == 1);  // only zero
  // identity among Hom(A,A)
  auto h2 = enumerate_homs(symmetric_group3(), symmetric_group3(), false, 0, 0, 100000);
  bool has_id = false;
  for (auto& h : h2) {
    bool id = true;
    for (int i = 0; i < 6; ++i)
      if (h.map[i] != i) id = false;
    if (id) has_id = true;
    CHECK(is_homomorphism(symmetric_group3(), symmetric_group3(), h.map));
  }
  CHECK(has_id);
  // coprime cyclic orders with g = identity unary op force the zero map
  FiniteAlgebra b2 = expand_with_unary(cyclic_group(2), "g", {0, 1});
  FiniteAlgebra e3 = expand_with_unary(cyclic_group(3), "g", {0, 1, 2});
  auto h3 = enumerate_homs(b2, e3, true, 0, 0, 1000);
  CHECK(h3.size() == 1);
  for (auto& h : h3) CHECK(h.map == std::vector<int>{0, 0});
}

TEST_CASE("free algebras in HSP") {
  auto f1 = free_algebra_hsp(cyclic_group(2), 2, 100000);
  CHECK(f1.algebra.size == 4);
  auto f2 = free_algebra_hsp(symmetric_group3(), 1, 100000);
  CHECK(f2.algebra.size == 6);
  auto f3 = free_algebra_hsp(cyclic_group(3), 1, 100000);
  CHECK(f3.algebra.size == 3);
  auto f4 = free_algebra_hsp(cyclic_group(4), 1, 100000);
  CHECK(f4.algebra.size == 4);
}

TEST_CASE("free algebra universal property at desk scale") {
  // every generator assignment into a member algebra extends uniquely
  auto f = free_algebra_hsp(cyclic_group(4), 1, 100000);
  FiniteAlgebra z2 = cyclic_group(2);
  for (int img = 0; img < z2.size; ++img) {
    std::vector<int> map;
    bool ok = eval_hom_from_free(f, z2, {img}, map, 100000);
    CHECK(ok);
    CHECK(is_homomorphism(f.algebra, z2, map));
    CHECK(map[f.generators[0]] == img);
    // uniqueness: determined on the generator, so any other hom with the same
    // image must coincide
    auto homs = enumerate_homs(f.algebra, z2, false, 0, 0, 100000);
    int count = 0;
    for (auto& h : homs)
      if (h.map[f.generators[0]] == img) ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("free algebra on two generators in HSP(S3)") {
  FiniteAlgebra s3 = symmetric_group3();
  auto f = free_algebra_hsp(s3, 2, 1000000);
  CHECK(f.algebra.size == 972);
  // universal property: the unique extension of any generator assignment
  // into S3 is projection to the matching coordinate
  for (int a = 0; a < 6; a += 2)
    for (int b = 1; b < 6; b += 3) {
      std::vector<int> map;
      REQUIRE(extend_hom(f.algebra, f.generators, s3, {a, b}, map));
      size_t coord = (size_t)a * 6 + b;
      for (size_t i = 0; i < f.vectors.size(); ++i) CHECK(map[i] == f.vectors[i][coord]);
    }
}

TEST_CASE("presentation_of") {
  // Q = Z2 presented by Z2 itself on one generator: theta = 0
  auto p1 = presentation_of(cyclic_group(2), cyclic_group(2), 1, {1}, 100000);
  CHECK(p1.theta.num_blocks() == p1.free_alg.algebra.size);
  // two generators both sent to 1: kernel has blocks of size 2
  auto p2 = presentation_of(cyclic_group(2), cyclic_group(2), 2, {1, 1}, 100000);
  CHECK(p2.free_alg.algebra.size == 4);
  CHECK(p2.theta.num_blocks() == 2);
  for (auto& blk : p2.theta.blocks()) CHECK(blk.size() == 2);
  // trivial target
  auto p3 = presentation_of(cyclic_group(1), cyclic_group(3), 1, {0}, 100000);
  CHECK(p3.theta.num_blocks() == 1);
  // non-generating assignment
  CHECK_THROWS_AS(presentation_of(cyclic_group(2), cyclic_group(2), 1, {0}, 100000),
                  NotGenerated);
}

TEST_SUITE_END();
