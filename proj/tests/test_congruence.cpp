#include <algorithm>
#include <set>

#include "doctest.h"
#include "ualg/algebra.hpp"
#include "ualg/congruence.hpp"

using namespace ualg;

TEST_SUITE_BEGIN("congruence");

namespace {

// oracle: all partitions of {0..n-1} via restricted growth strings
void all_partitions(int n, std::vector<Partition>& out) {
  std::vector<int> rgs(n, 0);
  while (true) {
    Partition p(n);
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (rgs[i] == rgs[j]) p.unite(i, j);
    p.normalize();
    out.push_back(p);
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int maxv = 0;
      for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
      if (rgs[i] <= maxv) {
        ++rgs[i];
        break;
      }
      rgs[i] = 0;
      --i;
    }
    if (i == 0) break;
  }
}

std::vector<Partition> congruences_by_bruteforce(const FiniteAlgebra& a) {
  std::vector<Partition> parts;
  all_partitions(a.size, parts);
  std::vector<Partition> out;
  for (auto& p : parts)
    if (is_congruence(a, p)) out.push_back(p);
  return out;
}

// normal subgroups of a group algebra (elements containing e, closed, normal)
std::vector<std::set<int>> normal_subgroups(const FiniteAlgebra& g) {
  int e = g.apply0(g.sig.index_of("e"));
  int mul = g.sig.index_of("mul");
  int inv = g.sig.index_of("inv");
  std::set<std::set<int>> found;
  // subgroups = closures of subsets; n small so iterate subsets
  for (unsigned mask = 0; mask < (1u << g.size); ++mask) {
    if (!(mask & (1u << e))) continue;
    std::set<int> s;
    for (int i = 0; i < g.size; ++i)
      if (mask & (1u << i)) s.insert(i);
    // close under mul and inv
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> m(s.begin(), s.end());
      for (int x : m) {
        if (s.insert(g.apply1(inv, x)).second) grew = true;
        for (int y : m)
          if (s.insert(g.apply2(mul, x, y)).second) grew = true;
      }
    }
    // normality
    bool normal = true;
    for (int x : s)
      for (int a = 0; a < g.size && normal; ++a) {
        int c = g.apply2(mul, g.apply2(mul, a, x), g.apply1(inv, a));
        if (!s.count(c)) normal = false;
      }
    if (normal) found.insert(s);
  }
  return {found.begin(), found.end()};
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

TEST_CASE("partition parse and format") {
  Partition p = Partition::parse("0,2|1,3", 4);
  CHECK(p.same(0, 2));
  CHECK(!p.same(0, 1));
  CHECK(p.format() == "0,2|1,3");
  CHECK_THROWS_AS(Partition::parse("0,2|1", 4), Error);
  CHECK_THROWS_AS(Partition::parse("0,2|1,2,3", 4), Error);
}

TEST_CASE("cg on Z4") {
  FiniteAlgebra z4 = cyclic_group(4);
  Partition p = cg(z4, {{0, 2}});
  CHECK(p.format() == "0,2|1,3");
  CHECK(is_congruence(z4, p));
  CHECK(cg(z4, {}) == Partition::zero(4));
  CHECK(cg(z4, {{1, 1}}) == Partition::zero(4));
  // brute-force cross-check: the three congruences of Z4
  auto all = congruences_by_bruteforce(z4);
  CHECK(all.size() == 3);
  bool found = false;
  for (auto& c : all)
    if (c == p) found = true;
  CHECK(found);
}

TEST_CASE("all_congruences against brute force") {
  for (const FiniteAlgebra& g :
       {cyclic_group(4), cyclic_group(6), symmetric_group3(), klein_four()}) {
    auto got = all_congruences(g);
    auto want = congruences_by_bruteforce(g);
    CHECK(got.size() == want.size());
    for (auto& c : got) CHECK(is_congruence(g, c));
  }
  CHECK(all_congruences(cyclic_group(4)).size() == 3);
  CHECK(all_congruences(symmetric_group3()).size() == 3);
}

TEST_CASE("congruence lattice matches normal subgroup lattice") {
  for (const FiniteAlgebra& g : {cyclic_group(4), symmetric_group3(), dihedral_group4()}) {
    auto cons = all_congruences(g);
    auto subs = normal_subgroups(g);
    REQUIRE(cons.size() == subs.size());
    // each normal subgroup's coset partition is a congruence we found
    for (auto& h : subs) {
      Partition p = partition_of_subgroup(g, h);
      bool found = false;
      for (auto& c : cons)
        if (c == p) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("join and meet") {
  FiniteAlgebra z12 = cyclic_group(12);
  Partition c4 = cg(z12, {{0, 4}});
  Partition c6 = cg(z12, {{0, 6}});
  Partition c2 = cg(z12, {{0, 2}});
  CHECK(join(z12, c4, c6) == c2);
  Partition zero = Partition::zero(12), one = Partition::one(12);
  CHECK(join(z12, c4, zero) == c4);
  CHECK(meet(c4, one) == c4);
}

TEST_CASE("lattice laws on small congruence lattices") {
  FiniteAlgebra d4 = dihedral_group4();
  auto cons = all_congruences(d4);
  for (auto& x : cons)
    for (auto& y : cons) {
      Partition j = join(d4, x, y), m = meet(x, y);
      CHECK(join(d4, x, x) == x);
      CHECK(meet(x, x) == x);
      CHECK(j == join(d4, y, x));
      CHECK(m == meet(y, x));
      // absorption
      CHECK(join(d4, x, m) == x);
      CHECK(meet(x, j) == x);
      for (auto& z : cons) {
        CHECK(join(d4, x, join(d4, y, z)) == join(d4, join(d4, x, y), z));
        CHECK(meet(x, meet(y, z)) == meet(meet(x, y), z));
      }
    }
}

TEST_SUITE_END();
