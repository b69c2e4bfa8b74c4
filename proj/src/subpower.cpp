#include "ualg/subpower.hpp"

#include <algorithm>

namespace ualg {

GeneratedSub close_subpower(const ProductContext& ctx,
                            const std::vector<std::vector<uint16_t>>& seeds, long long budget) {
  GeneratedSub sub;
  auto add = [&](const std::vector<uint16_t>& v) -> bool {
    auto it = sub.index.find(v);
    if (it != sub.index.end()) return false;
    if ((long long)sub.elements.size() >= budget)
      throw BudgetExceeded("subpower closure", budget);
    sub.index.emplace(v, (int)sub.elements.size());
    sub.elements.push_back(v);
    return true;
  };
  int nc = ctx.num_coords();
  std::vector<uint16_t> out(nc);
  for (const auto& s : seeds) add(s);
  // nullary ops enter immediately
  for (int op = 0; op < ctx.sig.num_ops(); ++op) {
    if (ctx.sig.arity(op) != 0) continue;
    ctx.apply(op, {}, out.data());
    add(out);
  }
  // process element k against everything discovered so far
  for (size_t k = 0; k < sub.elements.size(); ++k) {
    for (int op = 0; op < ctx.sig.num_ops(); ++op) {
      int ar = ctx.sig.arity(op);
      if (ar == 0) continue;
      if (ar == 1) {
        std::vector<const uint16_t*> args{sub.elements[k].data()};
        ctx.apply(op, args, out.data());
        add(out);
        continue;
      }
      // all arg tuples over [0..k] whose max index is k, in lex order
      std::vector<size_t> idx(ar, 0);
      std::vector<const uint16_t*> args(ar);
      while (true) {
        bool uses_k = false;
        for (int i = 0; i < ar; ++i)
          if (idx[i] == k) uses_k = true;
        if (uses_k) {
          for (int i = 0; i < ar; ++i) args[i] = sub.elements[idx[i]].data();
          ctx.apply(op, args, out.data());
          add(out);
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
  return sub;
}

FiniteAlgebra materialize(const ProductContext& ctx, const GeneratedSub& sub,
                          const std::string& name) {
  FiniteAlgebra a;
  a.name = name;
  a.sig = ctx.sig;
  a.size = (int)sub.elements.size();
  a.tables.resize(ctx.sig.num_ops());
  int nc = ctx.num_coords();
  std::vector<uint16_t> out(nc);
  for (int op = 0; op < ctx.sig.num_ops(); ++op) {
    int ar = ctx.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)a.size;
    a.tables[op].resize(total);
    std::vector<size_t> idx(ar, 0);
    std::vector<const uint16_t*> args(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        idx[i] = rem % a.size;
        rem /= a.size;
      }
      for (int i = 0; i < ar; ++i) args[i] = sub.elements[idx[i]].data();
      ctx.apply(op, args, out.data());
      int v = sub.find(out);
      if (v < 0) throw Error("materialize: closure not closed (internal)");
      a.tables[op][flat] = v;
    }
  }
  return a;
}

SubalgebraResult subalgebra_generated(const FiniteAlgebra& p, const std::vector<int>& seeds,
                                      long long budget) {
  ProductContext ctx{p.sig, {&p}};
  std::vector<std::vector<uint16_t>> seed_tuples;
  for (int s : seeds) {
    if (s < 0 || s >= p.size) throw Error("subalgebra_generated: seed out of range");
    seed_tuples.push_back({(uint16_t)s});
  }
  GeneratedSub sub = close_subpower(ctx, seed_tuples, budget);
  SubalgebraResult res;
  res.algebra = materialize(ctx, sub, p.name + "_sub");
  res.inclusion.reserve(sub.elements.size());
  for (const auto& e : sub.elements) res.inclusion.push_back(e[0]);
  return res;
}

FreeAlgebra free_algebra_hsp(const FiniteAlgebra& a, int k, long long budget) {
  if (k < 1) throw Error("free_algebra_hsp: k must be >= 1");
  if (a.size > 60000) throw Error("free_algebra_hsp: base too large");
  size_t coords = 1;
  for (int i = 0; i < k; ++i) {
    coords *= (size_t)a.size;
    if ((long long)coords > 2000000) throw BudgetExceeded("free_algebra_hsp coordinates", 2000000);
  }
  ProductContext ctx{a.sig, std::vector<const FiniteAlgebra*>(coords, &a)};
  // projection i at coordinate j = i-th digit of j in base |A| (most
  // significant digit = first generator)
  std::vector<std::vector<uint16_t>> seeds(k, std::vector<uint16_t>(coords));
  for (size_t j = 0; j < coords; ++j) {
    size_t rem = j;
    for (int i = k - 1; i >= 0; --i) {
      seeds[i][j] = (uint16_t)(rem % a.size);
      rem /= a.size;
    }
  }
  GeneratedSub sub = close_subpower(ctx, seeds, budget);
  FreeAlgebra f;
  f.base = a;
  f.k = k;
  f.vectors = sub.elements;
  for (const auto& s : seeds) f.generators.push_back(sub.find(s));
  // materialization is quadratic in |F| for binary ops; keep a hard gate
  size_t msize = sub.elements.size();
  size_t cells = 0;
  for (int op = 0; op < a.sig.num_ops(); ++op) {
    size_t t = 1;
    for (int i = 0; i < a.sig.arity(op); ++i) t *= msize;
    cells += t;
  }
  if ((long long)cells > 200000000)
    throw BudgetExceeded("free_algebra_hsp materialization", 200000000);
  f.algebra = materialize(ctx, sub, "free_" + a.name + "_" + std::to_string(k));
  return f;
}

bool eval_hom_from_free(const FreeAlgebra& f, const FiniteAlgebra& b,
                        const std::vector<int>& gen_images, std::vector<int>& out_map,
                        long long budget) {
  if ((int)gen_images.size() != f.k) throw Error("eval_hom_from_free: wrong image count");
  if (!f.base.sig.same_as(b.sig)) throw SignatureMismatch("eval_hom_from_free");
  // close the graph inside base^(base^k) x B starting from (projection_i, image_i);
  // the closure forks exactly when b violates an identity of HSP(base)
  size_t coords = f.vectors.empty() ? 0 : f.vectors[0].size();
  std::vector<const FiniteAlgebra*> factors(coords, &f.base);
  factors.push_back(&b);
  ProductContext ctx{f.base.sig, std::move(factors)};
  std::vector<std::vector<uint16_t>> seeds(f.k);
  for (int i = 0; i < f.k; ++i) {
    seeds[i] = f.vectors[f.generators[i]];
    seeds[i].push_back((uint16_t)gen_images[i]);
  }
  GeneratedSub graph = close_subpower(ctx, seeds, budget);
  std::unordered_map<std::vector<uint16_t>, int, TupleHash> fpart;
  for (const auto& e : graph.elements) {
    std::vector<uint16_t> head(e.begin(), e.end() - 1);
    auto [it, fresh] = fpart.emplace(head, e.back());
    if (!fresh && it->second != e.back()) return false;
  }
  out_map.assign(f.vectors.size(), -1);
  for (size_t i = 0; i < f.vectors.size(); ++i) {
    auto it = fpart.find(f.vectors[i]);
    if (it == fpart.end()) throw Error("eval_hom_from_free: internal closure mismatch");
    out_map[i] = it->second;
  }
  return true;
}

FreePresentation presentation_of(const FiniteAlgebra& q, const FiniteAlgebra& a, int k,
                                 const std::vector<int>& gen_images, long long budget) {
  if (!q.sig.same_as(a.sig)) throw SignatureMismatch("presentation_of: signature mismatch");
  if ((int)gen_images.size() != k) throw Error("presentation_of: need k generator images");
  size_t coords = 1;
  for (int i = 0; i < k; ++i) coords *= (size_t)a.size;
  // graph closure in a^(a^k) x q
  std::vector<const FiniteAlgebra*> factors(coords, &a);
  factors.push_back(&q);
  ProductContext ctx{a.sig, std::move(factors)};
  std::vector<std::vector<uint16_t>> seeds(k, std::vector<uint16_t>(coords + 1));
  for (size_t j = 0; j < coords; ++j) {
    size_t rem = j;
    for (int i = k - 1; i >= 0; --i) {
      seeds[i][j] = (uint16_t)(rem % a.size);
      rem /= a.size;
    }
  }
  for (int i = 0; i < k; ++i) seeds[i][coords] = (uint16_t)gen_images[i];
  GeneratedSub graph = close_subpower(ctx, seeds, budget);
  // functional check: same F-part must not occur with two Q-parts
  std::unordered_map<std::vector<uint16_t>, int, TupleHash> fpart;
  for (const auto& e : graph.elements) {
    std::vector<uint16_t> head(e.begin(), e.end() - 1);
    auto [it, fresh] = fpart.emplace(head, e.back());
    if (!fresh && it->second != e.back())
      throw Error("presentation_of: Q is not in HSP(A) under this assignment");
  }
  FreePresentation pres;
  pres.free_alg = free_algebra_hsp(a, k, budget);
  pres.gen_images = gen_images;
  pres.target = q;
  pres.eval_map.resize(pres.free_alg.vectors.size(), -1);
  for (size_t i = 0; i < pres.free_alg.vectors.size(); ++i) {
    auto it = fpart.find(pres.free_alg.vectors[i]);
    if (it == fpart.end()) throw Error("presentation_of: internal closure mismatch");
    pres.eval_map[i] = it->second;
  }
  // surjectivity onto Q
  std::vector<char> hit(q.size, 0);
  for (int v : pres.eval_map) hit[v] = 1;
  for (int x = 0; x < q.size; ++x)
    if (!hit[x]) throw NotGenerated("presentation_of: generator images do not generate Q");
  pres.theta = kernel_partition(pres.eval_map, (int)pres.eval_map.size());
  // verify the induced bijection F/theta -> Q is an isomorphism
  QuotientResult fq = quotient(pres.free_alg.algebra, pres.theta);
  std::vector<int> iso(fq.algebra.size, -1);
  for (int x = 0; x < pres.free_alg.algebra.size; ++x) iso[fq.surjection[x]] = pres.eval_map[x];
  if (!is_homomorphism(fq.algebra, q, iso))
    throw Error("presentation_of: induced map is not a homomorphism");
  pres.iso = std::move(iso);
  return pres;
}

}  // namespace ualg
