#pragma once

#include <utility>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/partition.hpp"

namespace ualg {

// Compatibility of a partition with all operation tables.
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

// Least congruence containing the given pairs: union-find plus one-coordinate
// substitution closure to fixpoint.
Partition cg(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs);

Partition join(const FiniteAlgebra& a, const Partition& x, const Partition& y);
// meet is blockwise intersection and needs no algebra (see partition.hpp)

// All congruences: principal ones closed under join; includes 0 and 1.
// Result sorted by (num blocks desc, canonical form) so 0 comes first.
std::vector<Partition> all_congruences(const FiniteAlgebra& a, long long limit = 100000);

// Quotient algebra A/theta; blocks numbered by ascending minima.
struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<int> surjection;  // element -> block index
};
QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta);

// kernel of a map as a partition of dom
Partition kernel_partition(const std::vector<int>& map, int dom_size);

}  // namespace ualg
