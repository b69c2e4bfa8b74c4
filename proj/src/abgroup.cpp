#include "ualg/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ualg {

bool AbGroup::check() const {
  for (int x = 0; x < n; ++x) {
    if (plus(x, zero) != x || plus(zero, x) != x) return false;
    if (plus(x, neg[x]) != zero) return false;
    for (int y = 0; y < n; ++y) {
      if (plus(x, y) != plus(y, x)) return false;
      for (int z = 0; z < n; ++z)
        if (plus(plus(x, y), z) != plus(x, plus(y, z))) return false;
    }
  }
  return true;
}

int AbGroup::order_of(int x) const {
  int k = 1;
  int v = x;
  while (v != zero) {
    v = plus(v, x);
    ++k;
    if (k > n) throw std::runtime_error("AbGroup::order_of: not a group");
  }
  return k;
}

std::vector<int> AbGroup::invariant_factors() const {
  // peel off a cyclic subgroup of maximal order, quotient, repeat
  if (n == 1) return {};
  std::vector<int> reps(n);
  std::iota(reps.begin(), reps.end(), 0);
  // current quotient: elements are classes, represented by a canonical map
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  int cls_count = n;
  std::vector<int> factors;
  while (cls_count > 1) {
    // order of class x in quotient: least k with k*x in the zero class
    auto class_order = [&](int x) {
      int k = 1, v = x;
      while (cls[v] != cls[zero]) {
        v = plus(v, x);
        ++k;
      }
      return k;
    };
    int best = zero, best_ord = 1;
    for (int x = 0; x < n; ++x) {
      int o = class_order(x);
      if (o > best_ord) {
        best_ord = o;
        best = x;
      }
    }
    factors.push_back(best_ord);
    // quotient further by <best>
    std::vector<int> newcls(n, -1);
    for (int x = 0; x < n; ++x) {
      if (newcls[x] != -1) continue;
      // merge the coset chain x, x+best, x+2best, ... at the class level
      int rep = cls[x];
      int v = x;
      for (int k = 0; k < best_ord; ++k) {
        rep = std::min(rep, cls[v]);
        v = plus(v, best);
      }
      v = x;
      for (int k = 0; k < best_ord; ++k) {
        // everything in v's class joins rep
        for (int y = 0; y < n; ++y)
          if (cls[y] == cls[v]) newcls[y] = rep;
        v = plus(v, best);
      }
    }
    // normalize class codes and count
    std::set<int> codes(newcls.begin(), newcls.end());
    cls_count = (int)codes.size();
    cls = std::move(newcls);
  }
  // greedy extraction yields largest first; invariant chain wants d1 | d2 | ...
  std::reverse(factors.begin(), factors.end());
  long long prod = 1;
  for (int f : factors) prod *= f;
  if (prod != n) throw std::runtime_error("AbGroup::invariant_factors: decomposition mismatch");
  return factors;
}

AbGroup AbGroupBuilder::build() const {
  AbGroup g;
  g.n = n;
  g.zero = zero;
  g.add.resize((size_t)n * n);
  g.neg.resize(n);
  for (int x = 0; x < n; ++x) {
    g.neg[x] = neg(x);
    for (int y = 0; y < n; ++y) g.add[(size_t)x * n + y] = add(x, y);
  }
  if (!g.check()) throw std::runtime_error("AbGroupBuilder: not an abelian group");
  return g;
}

}  // namespace ualg
