#include "ualg/commutator.hpp"

#include <algorithm>
#include <cstring>

namespace ualg {

namespace {

// Closure of seeds in A^4 over a packed universe with a seen bitmap. Pair
// scanning is quadratic in general, but saturation is detected early: once
// every packed index is present the closure is all of A^4 and no further
// verification is needed. That is what makes |A| = 60 runs practical.
struct PackedQuadClosure {
  const FiniteAlgebra& a;
  int n;
  uint64_t total;
  std::vector<uint32_t> elements;
  std::vector<char> seen;
  long long budget;
  bool full = false;
  long long pair_ops = 0;
  long long pair_op_limit;

  PackedQuadClosure(const FiniteAlgebra& a_, long long budget_, long long pair_limit)
      : a(a_), n(a_.size), budget(budget_), pair_op_limit(pair_limit) {
    total = 1;
    for (int i = 0; i < 4; ++i) total *= (uint64_t)n;
    if ((long long)total > budget)
      throw BudgetExceeded("matrix_algebra: |A|^4 = " + std::to_string(total), budget);
    seen.assign(total, 0);
  }

  inline void unpack(uint32_t x, int out[4]) const {
    out[3] = (int)(x % n);
    x /= n;
    out[2] = (int)(x % n);
    x /= n;
    out[1] = (int)(x % n);
    out[0] = (int)(x / n);
  }

  bool add(uint32_t x) {
    if (seen[x]) return false;
    seen[x] = 1;
    elements.push_back(x);
    if ((uint64_t)elements.size() == total) full = true;
    return true;
  }

  void run(const std::vector<uint32_t>& seeds) {
    for (uint32_t s : seeds) {
      add(s);
      if (full) return;
    }
    // nullary ops: diagonal constants
    for (int op = 0; op < a.sig.num_ops(); ++op) {
      if (a.sig.arity(op) != 0) continue;
      uint32_t c = (uint32_t)a.apply0(op);
      uint32_t x = ((c * n + c) * n + c) * n + c;
      add(x);
      if (full) return;
    }
    int b1[4], b2[4];
    for (size_t k = 0; k < elements.size() && !full; ++k) {
      for (int op = 0; op < a.sig.num_ops() && !full; ++op) {
        int ar = a.sig.arity(op);
        if (ar == 0) continue;
        if (ar == 1) {
          const auto& t = a.tables[op];
          unpack(elements[k], b1);
          uint32_t x = (uint32_t)(((t[b1[0]] * n + t[b1[1]]) * n + t[b1[2]]) * n + t[b1[3]]);
          add(x);
          continue;
        }
        if (ar == 2) {
          const auto& t = a.tables[op];
          unpack(elements[k], b1);
          for (size_t i = 0; i <= k && !full; ++i) {
            unpack(elements[i], b2);
            pair_ops += 2;
            if (pair_ops > pair_op_limit)
              throw BudgetExceeded("matrix_algebra: pair applications", pair_op_limit);
            uint32_t x = (uint32_t)(((t[(size_t)b1[0] * n + b2[0]] * n + t[(size_t)b1[1] * n + b2[1]]) * n +
                                     t[(size_t)b1[2] * n + b2[2]]) * n +
                                    t[(size_t)b1[3] * n + b2[3]]);
            add(x);
            if (full) break;
            uint32_t y = (uint32_t)(((t[(size_t)b2[0] * n + b1[0]] * n + t[(size_t)b2[1] * n + b1[1]]) * n +
                                     t[(size_t)b2[2] * n + b1[2]]) * n +
                                    t[(size_t)b2[3] * n + b1[3]]);
            add(y);
          }
          continue;
        }
        // higher arities: lex tuples over [0..k] containing k
        std::vector<size_t> idx(ar, 0);
        std::vector<int> unpacked(4 * ar);
        std::vector<int> args(ar);
        while (!full) {
          bool uses_k = false;
          for (int i = 0; i < ar; ++i)
            if (idx[i] == k) uses_k = true;
          if (uses_k) {
            pair_ops += 1;
            if (pair_ops > pair_op_limit)
              throw BudgetExceeded("matrix_algebra: tuple applications", pair_op_limit);
            for (int i = 0; i < ar; ++i) unpack(elements[idx[i]], unpacked.data() + 4 * i);
            uint32_t x = 0;
            for (int c = 0; c < 4; ++c) {
              for (int i = 0; i < ar; ++i) args[i] = unpacked[4 * i + c];
              x = x * n + (uint32_t)a.apply(op, args);
            }
            add(x);
          }
          int pos = ar - 1;
          while (pos >= 0 && idx[pos] == k) {
            idx[pos] = 0;
            --pos;
          }
          if (pos < 0) break;
          ++idx[pos];
        }
      }
    }
  }
};

}  // namespace

MatrixAlgebra matrix_algebra(const FiniteAlgebra& a, const Partition& alpha,
                             const Partition& beta, long long budget) {
  if (alpha.size() != a.size || beta.size() != a.size)
    throw Error("matrix_algebra: congruence carrier mismatch");
  int n = a.size;
  std::vector<uint32_t> seeds;
  // rows [a a; b b] for (a,b) in alpha, both orders and the diagonal
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (alpha.same(x, y)) seeds.push_back((uint32_t)(((x * n + x) * n + y) * n + y));
      if (beta.same(x, y)) seeds.push_back((uint32_t)(((x * n + y) * n + x) * n + y));
    }
  PackedQuadClosure cl(a, budget, 20000000000LL);
  cl.run(seeds);
  MatrixAlgebra m;
  m.n = n;
  m.full = cl.full;
  if (!cl.full) {
    m.elements = std::move(cl.elements);
    std::sort(m.elements.begin(), m.elements.end());
  }
  return m;
}

std::vector<std::pair<int, int>> r1_relation(const FiniteAlgebra& a, const MatrixAlgebra& m) {
  std::vector<std::pair<int, int>> out;
  int n = m.n;
  if (m.full) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) out.emplace_back(u, v);
    return out;
  }
  std::vector<char> have((size_t)n * n, 0);
  for (uint32_t x : m.elements) {
    int v = (int)(x % n);
    uint32_t y = x / n;
    int u = (int)(y % n);
    y /= n;
    int s = (int)(y % n);
    int r = (int)(y / n);
    if (r == s && !have[(size_t)u * n + v]) {
      have[(size_t)u * n + v] = 1;
      out.emplace_back(u, v);
    }
  }
  (void)a;
  return out;
}

Partition tc_commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta,
                        long long budget, CommutatorTrace* trace) {
  MatrixAlgebra m = matrix_algebra(a, alpha, beta, budget);
  int n = a.size;
  Partition tau = Partition::zero(n);
  int iters = 0;
  while (true) {
    ++iters;
    bool grew = false;
    if (m.full) {
      // every matrix is present, so R^{i+1} relates all pairs already at i=1
      Partition one = Partition::one(n);
      grew = !(tau == one);
      tau = one;
    } else {
      Partition next = tau;
      for (uint32_t x : m.elements) {
        int v = (int)(x % n);
        uint32_t y = x / n;
        int u = (int)(y % n);
        y /= n;
        int s = (int)(y % n);
        int r = (int)(y / n);
        if (tau.same(r, s)) next.unite(u, v);
      }
      next.normalize();
      grew = !(next == tau);
      tau = next;
    }
    if (!grew) break;
  }
  tau.normalize();
  if (trace) {
    trace->iterations = iters;
    trace->matrix_count = m.size();
    trace->matrix_full = m.full;
  }
  return tau;
}

bool is_abelian(const FiniteAlgebra& a, long long budget) {
  Partition one = Partition::one(a.size);
  return tc_commutator(a, one, one, budget).num_blocks() == a.size;
}

bool is_central(const FiniteAlgebra& a, const Partition& alpha, long long budget) {
  Partition one = Partition::one(a.size);
  return tc_commutator(a, alpha, one, budget).num_blocks() == a.size;
}

bool is_perfect(const FiniteAlgebra& a, long long budget) {
  Partition one = Partition::one(a.size);
  Partition c = tc_commutator(a, one, one, budget);
  return c.num_blocks() == 1;
}

bool is_neutral(const FiniteAlgebra& a, const Partition& theta, long long budget) {
  return tc_commutator(a, theta, theta, budget) == theta;
}

Partition center_congruence(const FiniteAlgebra& a, long long budget) {
  int n = a.size;
  Partition one = Partition::one(n);
  Partition zeta = Partition::zero(n);
  std::vector<std::pair<int, int>> central_pairs;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Partition p = cg(a, {{x, y}});
      if (tc_commutator(a, p, one, budget).num_blocks() == n) central_pairs.emplace_back(x, y);
    }
  zeta = cg(a, central_pairs);
  if (tc_commutator(a, zeta, one, budget).num_blocks() == n) return zeta;
  // join-additivity route failed; fall back to a full lattice search for the
  // maximum central congruence
  auto cons = all_congruences(a);
  std::vector<Partition> central;
  for (const auto& c : cons)
    if (tc_commutator(a, c, one, budget).num_blocks() == n) central.push_back(c);
  for (const auto& c : central) {
    bool is_max = true;
    for (const auto& d : central)
      if (!d.leq(c)) {
        is_max = false;
        break;
      }
    if (is_max) return c;
  }
  throw VerificationFailed("center_congruence: no largest central congruence found");
}

DifferenceTermReport verify_difference_term(const FiniteAlgebra& a, const Term& m,
                                            long long budget) {
  DifferenceTermReport rep;
  std::vector<std::string> vars = m.vars();
  if (vars.size() > 3) throw Error("verify_difference_term: term must use 3 variables");
  while (vars.size() < 3) vars.push_back("_pad" + std::to_string(vars.size()));
  CompiledTerm ct = CompiledTerm::compile(m, vars);
  int n = a.size;
  // (i) m(x,x,y) = y
  for (int x = 0; x < n && rep.identity_ok; ++x)
    for (int y = 0; y < n; ++y) {
      int env[3] = {x, x, y};
      if (ct.eval(a, env) != y) {
        rep.identity_ok = false;
        rep.failures.push_back("m(" + std::to_string(x) + "," + std::to_string(x) + "," +
                               std::to_string(y) + ") != " + std::to_string(y));
        break;
      }
    }
  // Mal'cev short-cut: m(x,y,y) = x makes (ii) trivial
  rep.malcev = true;
  for (int x = 0; x < n && rep.malcev; ++x)
    for (int y = 0; y < n; ++y) {
      int env[3] = {x, y, y};
      if (ct.eval(a, env) != x) {
        rep.malcev = false;
        break;
      }
    }
  if (rep.malcev || !rep.identity_ok) return rep;
  // (ii) x [alpha,alpha] m(x,y,y) for every congruence alpha and (x,y) in alpha
  for (const auto& alpha : all_congruences(a)) {
    Partition comm = tc_commutator(a, alpha, alpha, budget);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (!alpha.same(x, y)) continue;
        int env[3] = {x, y, y};
        int v = ct.eval(a, env);
        if (!comm.same(x, v)) {
          rep.abelian_shift_ok = false;
          rep.failures.push_back("pair (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") in alpha=" + alpha.format() + ": m(x,y,y)=" +
                                 std::to_string(v) + " not [alpha,alpha]-related to x");
          if (rep.failures.size() > 8) return rep;
        }
      }
  }
  return rep;
}

}  // namespace ualg
