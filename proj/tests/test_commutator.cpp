#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ualg/algebra.hpp"
#include "ualg/commutator.hpp"
#include "ualg/congruence.hpp"
#include "ualg/variety.hpp"

using namespace ualg;

TEST_SUITE_BEGIN("commutator");

namespace {

constexpr long long kBudget = 10000000;

// oracle: subalgebra of G^4 generated by the row/column seeds, naive closure
std::set<uint32_t> naive_matrix_closure(const FiniteAlgebra& g, const Partition& alpha,
                                        const Partition& beta) {
  int n = g.size;
  auto pack = [&](int r, int s, int u, int v) {
    return (uint32_t)(((r * n + s) * n + u) * n + v);
  };
  std::set<uint32_t> m;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (alpha.same(x, y)) m.insert(pack(x, x, y, y));
      if (beta.same(x, y)) m.insert(pack(x, y, x, y));
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<uint32_t> cur(m.begin(), m.end());
    for (int op = 0; op < g.sig.num_ops(); ++op) {
      int ar = g.sig.arity(op);
      if (ar == 0) {
        int c = g.apply0(op);
        if (m.insert(pack(c, c, c, c)).second) grew = true;
        continue;
      }
      std::vector<size_t> idx(ar, 0);
      std::vector<int> comp(4);
      while (true) {
        for (int c = 0; c < 4; ++c) {
          std::vector<int> args(ar);
          for (int i = 0; i < ar; ++i) {
            uint32_t e = cur[idx[i]];
            int digits[4];
            digits[3] = e % n;
            e /= n;
            digits[2] = e % n;
            e /= n;
            digits[1] = e % n;
            digits[0] = e / n;
            args[i] = digits[c];
          }
          comp[c] = g.apply(op, args);
        }
        if (m.insert(pack(comp[0], comp[1], comp[2], comp[3])).second) grew = true;
        int pos = ar - 1;
        while (pos >= 0 && idx[pos] + 1 == cur.size()) {
          idx[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
      }
    }
  }
  return m;
}

// subgroup-commutator oracle: [H,K] generated by x^-1 y^-1 x y
std::set<int> subgroup_commutator(const FiniteAlgebra& g, const std::set<int>& h,
                                  const std::set<int>& k) {
  int mul = g.sig.index_of("mul");
  int inv = g.sig.index_of("inv");
  std::set<int> gen;
  gen.insert(g.apply0(g.sig.index_of("e")));
  for (int x : h)
    for (int y : k) {
      int c = g.apply2(mul, g.apply2(mul, g.apply1(inv, x), g.apply1(inv, y)),
                       g.apply2(mul, x, y));
      gen.insert(c);
    }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> m(gen.begin(), gen.end());
    for (int x : m) {
      if (gen.insert(g.apply1(inv, x)).second) grew = true;
      for (int y : m)
        if (gen.insert(g.apply2(mul, x, y)).second) grew = true;
    }
  }
  return gen;
}

std::set<int> block_of_identity(const FiniteAlgebra& g, const Partition& p) {
  int e = g.apply0(g.sig.index_of("e"));
  std::set<int> out;
  for (int x = 0; x < g.size; ++x)
    if (p.same(x, e)) out.insert(x);
  return out;
}

Partition partition_of_subgroup(const FiniteAlgebra& g, const std::set<int>& h) {
  int mul = g.sig.index_of("mul");
  int inv = g.sig.index_of("inv");
  Partition p(g.size);
  for (int x = 0; x < g.size; ++x)
    for (int y = x + 1; y < g.size; ++y)
      if (h.count(g.apply2(mul, x, g.apply1(inv, y)))) p.unite(x, y);
  p.normalize();
  return p;
}

}  // namespace

TEST_CASE("matrix algebra sizes and oracle agreement") {
  FiniteAlgebra z2 = cyclic_group(2);
  Partition one2 = Partition::one(2);
  MatrixAlgebra m = matrix_algebra(z2, one2, one2, kBudget);
  // affine parity constraint r+s+u+v = 0 over Z2: eight matrices
  CHECK(m.size() == 8);
  auto oracle = naive_matrix_closure(z2, one2, one2);
  CHECK((size_t)m.size() == oracle.size());

  FiniteAlgebra s3 = symmetric_group3();
  Partition one6 = Partition::one(6);
  MatrixAlgebra ms3 = matrix_algebra(s3, one6, one6, kBudget);
  auto oracle3 = naive_matrix_closure(s3, one6, one6);
  CHECK((size_t)ms3.size() == oracle3.size());
  CHECK(ms3.size() == 648);
  if (!ms3.full) {
    std::set<uint32_t> got(ms3.elements.begin(), ms3.elements.end());
    CHECK(got == oracle3);
  }

  // alpha = beta = 0 gives only diagonal constants
  MatrixAlgebra mz = matrix_algebra(s3, Partition::zero(6), Partition::zero(6), kBudget);
  CHECK(mz.size() == 6);
}

TEST_CASE("r1 degenerate cases") {
  FiniteAlgebra s3 = symmetric_group3();
  Partition one = Partition::one(6), zero = Partition::zero(6);
  // alpha = 0 forces equal rows, so R1 is inside the identity relation
  MatrixAlgebra m = matrix_algebra(s3, zero, one, kBudget);
  auto r1 = r1_relation(s3, m);
  for (auto [u, v] : r1) CHECK(u == v);
  // abelian algebra: R1(1,1) inside the identity
  FiniteAlgebra z6 = cyclic_group(6);
  MatrixAlgebra mz = matrix_algebra(z6, Partition::one(6), Partition::one(6), kBudget);
  for (auto [u, v] : r1_relation(z6, mz)) CHECK(u == v);
}

TEST_CASE("tc commutator on groups matches subgroup commutator") {
  // criterion-4 style check at unit-test scale
  for (const FiniteAlgebra& g : {cyclic_group(4), symmetric_group3(), dihedral_group4(),
                                 quaternion_group()}) {
    auto cons = all_congruences(g);
    for (auto& ca : cons)
      for (auto& cb : cons) {
        std::set<int> h = block_of_identity(g, ca);
        std::set<int> k = block_of_identity(g, cb);
        std::set<int> hk = subgroup_commutator(g, h, k);
        Partition want = partition_of_subgroup(g, hk);
        Partition got = tc_commutator(g, ca, cb, kBudget);
        CHECK(got == want);
      }
  }
}

TEST_CASE("commutator on named groups") {
  FiniteAlgebra s3 = symmetric_group3();
  Partition one = Partition::one(6);
  Partition c = tc_commutator(s3, one, one, kBudget);
  CHECK(c.num_blocks() == 2);  // A3 partition
  FiniteAlgebra d4 = dihedral_group4();
  Partition cd = tc_commutator(d4, Partition::one(8), Partition::one(8), kBudget);
  // commutator subgroup {e, r^2} = {0, 2}
  CHECK(cd.same(0, 2));
  CHECK(cd.num_blocks() == 4);
  CHECK(is_abelian(cyclic_group(6), kBudget));
  CHECK(!is_perfect(s3, kBudget));
}

TEST_CASE("commutator monotone and below meet") {
  FiniteAlgebra d4 = dihedral_group4();
  auto cons = all_congruences(d4);
  for (auto& a : cons)
    for (auto& b : cons) {
      Partition c = tc_commutator(d4, a, b, kBudget);
      CHECK(c.leq(meet(a, b)));
      for (auto& a2 : cons)
        for (auto& b2 : cons)
          if (a.leq(a2) && b.leq(b2)) {
            Partition c2 = tc_commutator(d4, a2, b2, kBudget);
            CHECK(c.leq(c2));
          }
      // symmetry in difference-term varieties
      CHECK(c == tc_commutator(d4, b, a, kBudget));
    }
}

TEST_CASE("center congruence") {
  CHECK(center_congruence(cyclic_group(6), kBudget).num_blocks() == 1);     // abelian: full
  CHECK(center_congruence(symmetric_group3(), kBudget).num_blocks() == 6);  // trivial
  Partition zd4 = center_congruence(dihedral_group4(), kBudget);
  CHECK(zd4.same(0, 2));
  CHECK(zd4.num_blocks() == 4);  // blocks of Z(D4) = {e, r^2}
}

TEST_CASE("difference term verification") {
  FiniteAlgebra z4 = cyclic_group(4);
  Term m = group_difference_term(z4.sig);
  auto rep = verify_difference_term(z4, m, kBudget);
  CHECK(rep.ok());
  CHECK(rep.malcev);
  // projection to the third coordinate: satisfies (i) but fails (ii) on Z2
  FiniteAlgebra z2 = cyclic_group(2);
  Signature sig3 = Signature::parse("mul/2, inv/1, e/0, m/3");
  FiniteAlgebra z2m = z2;
  z2m.sig = sig3;
  std::vector<int> proj3(8);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) proj3[x * 4 + y * 2 + z] = z;
  z2m.tables.push_back(proj3);
  Term mm = Term::parse("m(x,y,z)", sig3);
  auto rep2 = verify_difference_term(z2m, mm, kBudget);
  CHECK(rep2.identity_ok);
  CHECK(!rep2.abelian_shift_ok);
}

TEST_CASE("meet with an abelian congruence reduces the commutator to R1") {
  // deterministic sample of expanded groups
  std::mt19937 rng(12345);
  int instances = 0;
  int round = 0;
  while (instances < 25) {
    FiniteAlgebra base = (round % 3 == 0)   ? cyclic_group(4)
                         : (round % 3 == 1) ? klein_four()
                                            : symmetric_group3();
    ++round;
    std::vector<int> g(base.size);
    for (int i = 0; i < base.size; ++i) g[i] = (int)(rng() % base.size);
    FiniteAlgebra a = expand_with_unary(base, "g", g);
    auto cons = all_congruences(a);
    for (auto& alpha : cons) {
      if (tc_commutator(a, alpha, alpha, kBudget).num_blocks() != a.size) continue;
      for (auto& beta : cons) {
        Partition lhs = meet(alpha, tc_commutator(a, beta, beta, kBudget));
        MatrixAlgebra m = matrix_algebra(a, beta, beta, kBudget);
        auto r1 = r1_relation(a, m);
        std::set<std::pair<int, int>> r1set(r1.begin(), r1.end());
        for (int x = 0; x < a.size; ++x)
          for (int y = 0; y < a.size; ++y) {
            bool in_lhs = lhs.same(x, y);
            bool in_rhs =
                alpha.same(x, y) && (x == y || r1set.count({x, y}) || r1set.count({y, x}));
            CHECK(in_lhs == in_rhs);
          }
        ++instances;
      }
    }
  }
}

TEST_SUITE_END();
