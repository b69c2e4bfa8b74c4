#include "ualg/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ualg {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("snf: integer overflow"); }

long long checked_mul(long long x, long long y) {
  long long r;
  if (__builtin_mul_overflow(x, y, &r)) overflow();
  return r;
}

long long checked_add(long long x, long long y) {
  long long r;
  if (__builtin_add_overflow(x, y, &r)) overflow();
  return r;
}

}  // namespace

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& x, const IntMat& y) {
  IntMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      long long v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, y.at(k, j)));
    }
  return r;
}

std::vector<long long> smith_normal_form(IntMat a, IntMat* u, IntMat* v, IntMat* u_inv,
                                         IntMat* v_inv) {
  int rows = a.rows, cols = a.cols;
  IntMat U = IntMat::identity(rows), V = IntMat::identity(cols);
  IntMat Ui = IntMat::identity(rows), Vi = IntMat::identity(cols);

  // row ops track U (left) and Ui = U^-1; col ops track V (right) and Vi
  auto row_swap = [&](int i, int j) {
    for (int c = 0; c < cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < rows; ++c) std::swap(U.at(i, c), U.at(j, c));
    for (int r = 0; r < rows; ++r) std::swap(Ui.at(r, i), Ui.at(r, j));
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < cols; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (int r = 0; r < cols; ++r) std::swap(Vi.at(i, r), Vi.at(j, r));
  };
  auto row_add = [&](int dst, int src, long long f) {  // row dst += f * row src
    for (int c = 0; c < cols; ++c) a.at(dst, c) = checked_add(a.at(dst, c), checked_mul(f, a.at(src, c)));
    for (int c = 0; c < rows; ++c) U.at(dst, c) = checked_add(U.at(dst, c), checked_mul(f, U.at(src, c)));
    for (int r = 0; r < rows; ++r) Ui.at(r, src) = checked_add(Ui.at(r, src), checked_mul(-f, Ui.at(r, dst)));
  };
  auto col_add = [&](int dst, int src, long long f) {  // col dst += f * col src
    for (int r = 0; r < rows; ++r) a.at(r, dst) = checked_add(a.at(r, dst), checked_mul(f, a.at(r, src)));
    for (int r = 0; r < cols; ++r) V.at(r, dst) = checked_add(V.at(r, dst), checked_mul(f, V.at(r, src)));
    for (int c = 0; c < cols; ++c) Vi.at(src, c) = checked_add(Vi.at(src, c), checked_mul(-f, Vi.at(dst, c)));
  };
  auto row_neg = [&](int i) {
    for (int c = 0; c < cols; ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < rows; ++c) U.at(i, c) = -U.at(i, c);
    for (int r = 0; r < rows; ++r) Ui.at(r, i) = -Ui.at(r, i);
  };

  int t = 0;
  int limit = std::min(rows, cols);
  while (t < limit) {
    // find a pivot: nonzero entry of least absolute value in the trailing block
    int pr = -1, pc = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        long long x = std::llabs(a.at(i, j));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // all zero
    row_swap(t, pr);
    col_swap(t, pc);
    if (a.at(t, t) < 0) row_neg(t);
    bool reduced = true;
    for (int i = t + 1; i < rows; ++i) {
      long long q = a.at(i, t) / a.at(t, t);
      if (q) row_add(i, t, -q);
      if (a.at(i, t) != 0) reduced = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      long long q = a.at(t, j) / a.at(t, t);
      if (q) col_add(j, t, -q);
      if (a.at(t, j) != 0) reduced = false;
    }
    if (!reduced) continue;  // smaller remainders appeared; repick pivot
    // divisibility fix-up: pivot must divide the rest of the block
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          row_add(t, i, 1);
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  std::vector<long long> diag(limit, 0);
  for (int i = 0; i < limit; ++i) diag[i] = a.at(i, i);
  if (u) *u = U;
  if (v) *v = V;
  if (u_inv) *u_inv = Ui;
  if (v_inv) *v_inv = Vi;
  return diag;
}

std::vector<long long> quotient_invariants(int n, const IntMat& rel) {
  IntMat m = rel;
  if (m.rows != n) throw std::runtime_error("quotient_invariants: row count mismatch");
  auto diag = smith_normal_form(m);
  std::vector<long long> inv;
  int r = 0;
  for (long long d : diag) {
    if (d != 0) ++r;
    if (d > 1) inv.push_back(d);
  }
  // free part means the quotient is infinite; callers here always pass
  // relations of full rank, so flag it loudly
  if (r < std::min(n, (int)diag.size()) || n > (int)diag.size()) {
    int rank = 0;
    for (long long d : diag)
      if (d != 0) ++rank;
    if (rank < n) throw std::runtime_error("quotient_invariants: quotient is infinite");
  }
  return inv;
}

IntMat solution_lattice(const IntMat& m, const std::vector<long long>& row_mod,
                        const std::vector<long long>& col_mod) {
  // solutions of M x === 0 (row i mod row_mod[i]) form a lattice in Z^cols:
  // x is a solution iff (x, y) solves [M | diag(row_mod)] (x;y)^T = 0 for some y.
  int rows = m.rows, cols = m.cols;
  IntMat big(rows, cols + rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) big.at(i, j) = m.at(i, j) % row_mod[i];
    big.at(i, cols + i) = row_mod[i];
  }
  IntMat V, Vi;
  auto diag = smith_normal_form(big, nullptr, &V, nullptr, &Vi);
  int rank = 0;
  for (long long d : diag)
    if (d != 0) ++rank;
  // kernel basis = last (cols+rows-rank) columns of V, projected to x-part
  int kdim = cols + rows - rank;
  IntMat kb(cols, kdim);
  for (int j = 0; j < kdim; ++j)
    for (int i = 0; i < cols; ++i) kb.at(i, j) = V.at(i, cols + rows - kdim + j);
  // adjoin the column moduli so the lattice always contains col_mod[j] e_j
  IntMat full(cols, kdim + cols);
  for (int j = 0; j < kdim; ++j)
    for (int i = 0; i < cols; ++i) full.at(i, j) = kb.at(i, j);
  for (int j = 0; j < cols; ++j) full.at(j, kdim + j) = col_mod[j];
  return full;
}

}  // namespace ualg
