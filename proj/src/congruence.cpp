#include "ualg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ualg {

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size) return false;
  int n = a.size;
  for (int op = 0; op < a.sig.num_ops(); ++op) {
    int ar = a.sig.arity(op);
    if (ar == 0) continue;
    std::vector<int> args(ar);
    size_t ctx_total = 1;
    for (int i = 0; i < ar - 1; ++i) ctx_total *= (size_t)n;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (!p.same(x, y)) continue;
        for (int coord = 0; coord < ar; ++coord) {
          for (size_t ctx = 0; ctx < ctx_total; ++ctx) {
            size_t rem = ctx;
            for (int i = ar - 1; i >= 0; --i) {
              if (i == coord) continue;
              args[i] = (int)(rem % n);
              rem /= n;
            }
            args[coord] = x;
            int u = a.apply(op, args);
            args[coord] = y;
            int v = a.apply(op, args);
            if (!p.same(u, v)) return false;
          }
        }
      }
    }
  }
  return true;
}

Partition cg(const FiniteAlgebra& a, const std::vector<std::pair<int, int>>& pairs) {
  int n = a.size;
  Partition p(n);
  std::deque<std::pair<int, int>> work(pairs.begin(), pairs.end());
  std::vector<int> args;
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (!p.unite(x, y)) continue;
    // propagate through every op, one coordinate at a time
    for (int op = 0; op < a.sig.num_ops(); ++op) {
      int ar = a.sig.arity(op);
      if (ar == 0) continue;
      args.assign(ar, 0);
      size_t ctx_total = 1;
      for (int i = 0; i < ar - 1; ++i) ctx_total *= (size_t)n;
      for (int coord = 0; coord < ar; ++coord) {
        for (size_t ctx = 0; ctx < ctx_total; ++ctx) {
          size_t rem = ctx;
          for (int i = ar - 1; i >= 0; --i) {
            if (i == coord) continue;
            args[i] = (int)(rem % n);
            rem /= n;
          }
          args[coord] = x;
          int u = a.apply(op, args);
          args[coord] = y;
          int v = a.apply(op, args);
          if (!p.same(u, v)) work.emplace_back(u, v);
        }
      }
    }
  }
  p.normalize();
  return p;
}

Partition join(const FiniteAlgebra& a, const Partition& x, const Partition& y) {
  if (x.size() != y.size()) throw Error("join: carrier mismatch");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < x.size(); ++i) {
    if (x.find(i) != i) pairs.emplace_back(i, x.find(i));
    if (y.find(i) != i) pairs.emplace_back(i, y.find(i));
  }
  return cg(a, pairs);
}

std::vector<Partition> all_congruences(const FiniteAlgebra& a, long long limit) {
  int n = a.size;
  std::set<std::vector<int>> seen;
  std::vector<Partition> out;
  auto add = [&](const Partition& p) -> bool {
    auto key = p.canonical();
    if (seen.insert(key).second) {
      out.push_back(p);
      if ((long long)out.size() > limit) throw LimitExceeded("all_congruences: limit exceeded");
      return true;
    }
    return false;
  };
  add(Partition::zero(n));
  // principal congruences
  std::vector<Partition> principals;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Partition p = cg(a, {{x, y}});
      if (add(p)) principals.push_back(p);
    }
  // close under join
  std::vector<Partition> frontier = out;
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& p : frontier) {
      for (const auto& q : principals) {
        Partition j = join(a, p, q);
        if (add(j)) next.push_back(j);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
    int bp = p.num_blocks(), bq = q.num_blocks();
    if (bp != bq) return bp > bq;
    return p.canonical() < q.canonical();
  });
  return out;
}

QuotientResult quotient(const FiniteAlgebra& a, const Partition& theta) {
  if (!is_congruence(a, theta)) throw IncompatiblePartition("quotient: partition not compatible");
  QuotientResult res;
  res.surjection = theta.block_index();
  auto blocks = theta.blocks();
  int m = (int)blocks.size();
  FiniteAlgebra& q = res.algebra;
  q.name = a.name + "_mod";
  q.sig = a.sig;
  q.size = m;
  q.tables.resize(a.sig.num_ops());
  std::vector<int> reps(m);
  for (int b = 0; b < m; ++b) reps[b] = blocks[b][0];
  for (int op = 0; op < a.sig.num_ops(); ++op) {
    int ar = a.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)m;
    q.tables[op].resize(total);
    std::vector<int> args(ar);
    for (size_t idx = 0; idx < total; ++idx) {
      size_t rem = idx;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = reps[rem % m];
        rem /= m;
      }
      q.tables[op][idx] = res.surjection[a.apply(op, args)];
    }
  }
  return res;
}

Partition kernel_partition(const std::vector<int>& map, int dom_size) {
  Partition p(dom_size);
  std::map<int, int> first;
  for (int i = 0; i < dom_size; ++i) {
    auto it = first.find(map[i]);
    if (it == first.end())
      first.emplace(map[i], i);
    else
      p.unite(it->second, i);
  }
  p.normalize();
  return p;
}

}  // namespace ualg
