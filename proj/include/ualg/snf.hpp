#pragma once

#include <cstdint>
#include <vector>

namespace ualg {

// Dense integer matrices for Smith normal form work. Sizes here are tiny
// (hundreds of rows at most) so a simple quadratic pivot strategy is fine.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row-major

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
  long long at(int r, int c) const { return a[(size_t)r * cols + c]; }
  static IntMat identity(int n);
};

// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ... ; returns
// the diagonal. U and V (and their inverses) are optional outputs.
std::vector<long long> smith_normal_form(IntMat a, IntMat* u = nullptr, IntMat* v = nullptr,
                                         IntMat* u_inv = nullptr, IntMat* v_inv = nullptr);

IntMat mat_mul(const IntMat& x, const IntMat& y);

// Invariant factors (> 1) of Z^n / columnspan(rel).
std::vector<long long> quotient_invariants(int n, const IntMat& rel);

// Solve M x = 0 over the group (Z/m_1) x ... x (Z/m_cols) -> (Z/r_1) x ...
// where row i of M is taken mod row_mod[i]. Returns a basis (columns) of the
// solution lattice in Z^cols; the lattice contains m_j e_j for every j.
IntMat solution_lattice(const IntMat& m, const std::vector<long long>& row_mod,
                        const std::vector<long long>& col_mod);

}  // namespace ualg
