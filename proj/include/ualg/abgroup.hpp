#pragma once

#include <functional>
#include <vector>

namespace ualg {

// Finite abelian group given by an explicit addition table on {0..n-1}.
struct AbGroup {
  int n = 0;
  int zero = 0;
  std::vector<int> add;  // n*n
  std::vector<int> neg;  // n

  int plus(int x, int y) const { return add[(size_t)x * n + y]; }
  int minus(int x) const { return neg[x]; }

  bool check() const;  // abelian group axioms, exhaustive

  int order_of(int x) const;
  // invariant factors d1 | d2 | ... with product n, by greedy extraction of
  // maximal-order cyclic summands
  std::vector<int> invariant_factors() const;
};

// Build the structure of a finite abelian group presented as a list of
// opaque items with an addition callback (used for cocycle class groups).
struct AbGroupBuilder {
  std::function<int(int, int)> add;
  std::function<int(int)> neg;
  int n = 0;
  int zero = 0;
  AbGroup build() const;
};

}  // namespace ualg
