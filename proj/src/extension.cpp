#include "ualg/extension.hpp"

#include <algorithm>
#include <sstream>

namespace ualg {

PairAlgebraResult pair_algebra(const FiniteAlgebra& a, const Partition& alpha) {
  if (alpha.size() != a.size) throw Error("pair_algebra: carrier mismatch");
  PairAlgebraResult res;
  int n = a.size;
  res.pair_index.assign((size_t)n * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (alpha.same(x, y)) {
        res.pair_index[(size_t)x * n + y] = (int)res.pairs.size();
        res.pairs.emplace_back(x, y);
      }
  int m = (int)res.pairs.size();
  FiniteAlgebra& p = res.algebra;
  p.name = a.name + "_pairs";
  p.sig = a.sig;
  p.size = m;
  p.tables.resize(a.sig.num_ops());
  for (int op = 0; op < a.sig.num_ops(); ++op) {
    int ar = a.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)m;
    p.tables[op].resize(total);
    std::vector<int> idx(ar), xs(ar), ys(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        idx[i] = (int)(rem % m);
        rem /= m;
      }
      for (int i = 0; i < ar; ++i) {
        xs[i] = res.pairs[idx[i]].first;
        ys[i] = res.pairs[idx[i]].second;
      }
      int rx = a.apply(op, xs), ry = a.apply(op, ys);
      int v = res.pair_index[(size_t)rx * n + ry];
      if (v < 0) throw Error("pair_algebra: congruence not compatible");
      p.tables[op][flat] = v;
    }
  }
  return res;
}

Partition delta_congruence(const FiniteAlgebra& a, const PairAlgebraResult& apair,
                           const Partition& beta) {
  int n = a.size;
  std::vector<std::pair<int, int>> gens;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!beta.same(u, v)) continue;
      int iu = apair.index_of(u, u, n);
      int iv = apair.index_of(v, v, n);
      gens.emplace_back(iu, iv);
    }
  return cg(apair.algebra, gens);
}

KernelAlgebra make_kernel_algebra(const FiniteAlgebra& b, int zero, const Term& diff_term) {
  KernelAlgebra k;
  k.alg = b;
  k.zero = zero;
  std::vector<std::string> vars = diff_term.vars();
  while (vars.size() < 3) vars.push_back("_pad" + std::to_string(vars.size()));
  CompiledTerm m = CompiledTerm::compile(diff_term, vars);
  AbGroupBuilder gb;
  gb.n = b.size;
  gb.zero = zero;
  gb.add = [&](int x, int y) {
    int env[3] = {x, zero, y};
    return m.eval(b, env);
  };
  gb.neg = [&](int x) {
    int env[3] = {zero, x, zero};
    return m.eval(b, env);
  };
  try {
    k.group = gb.build();
  } catch (const std::exception& e) {
    throw DecompositionFailed(std::string("kernel algebra: x+y := m(x,0,y) is not an abelian group: ") + e.what());
  }
  // idempotence of the zero
  k.zero_idempotent = true;
  for (int op = 0; op < b.sig.num_ops(); ++op) {
    std::vector<int> args(b.sig.arity(op), zero);
    if (b.apply(op, args) != zero) k.zero_idempotent = false;
  }
  // linear decomposition: r_{f,i}(x) = f(0,..,x,..,0) - f(0..0), d_f = f(0..0)
  k.endos.resize(b.sig.num_ops());
  k.d.resize(b.sig.num_ops());
  for (int op = 0; op < b.sig.num_ops(); ++op) {
    int ar = b.sig.arity(op);
    std::vector<int> args(ar, zero);
    k.d[op] = b.apply(op, args);
    k.endos[op].assign(ar, std::vector<int>(b.size));
    for (int i = 0; i < ar; ++i) {
      for (int x = 0; x < b.size; ++x) {
        args.assign(ar, zero);
        args[i] = x;
        k.endos[op][i][x] = k.sub(b.apply(op, args), k.d[op]);
      }
      // each r_{f,i} must be an endomorphism of (B,+)
      const auto& r = k.endos[op][i];
      for (int x = 0; x < b.size; ++x)
        for (int y = 0; y < b.size; ++y)
          if (r[k.plus(x, y)] != k.plus(r[x], r[y]))
            throw DecompositionFailed("kernel algebra: r_{f,i} is not additive (op " +
                                      b.sig.symbols[op].name + ")");
    }
    // decomposition must reproduce the full table
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)b.size;
    std::vector<int> tup(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        tup[i] = (int)(rem % b.size);
        rem /= b.size;
      }
      int acc = k.d[op];
      for (int i = 0; i < ar; ++i) acc = k.plus(acc, k.endos[op][i][tup[i]]);
      if (acc != b.apply(op, tup))
        throw DecompositionFailed("kernel algebra: linear decomposition fails for op " +
                                  b.sig.symbols[op].name);
    }
  }
  return k;
}

CentralExtension central_extension(const FiniteAlgebra& a, const Partition& alpha,
                                   const VarietySpec& v, long long budget) {
  if (!is_congruence(a, alpha)) throw IncompatiblePartition("central_extension: not a congruence");
  if (!is_central(a, alpha, budget))
    throw NotCentral("central_extension: [alpha,1] != 0");
  CentralExtension ext;
  ext.a = a;
  ext.alpha = alpha;
  auto qr = quotient(a, alpha);
  ext.q = qr.algebra;
  ext.q.name = a.name + "_q";
  ext.pi = qr.surjection;
  ext.apair = pair_algebra(a, alpha);
  ext.delta1 = delta_congruence(a, ext.apair, Partition::one(a.size));
  // centrality puts all diagonal pairs in one class
  {
    int d0 = ext.apair.index_of(0, 0, a.size);
    for (int x = 1; x < a.size; ++x)
      if (!ext.delta1.same(d0, ext.apair.index_of(x, x, a.size)))
        throw NotCentral("central_extension: diagonal not a single Delta class");
  }
  QuotientResult bq = quotient(ext.apair.algebra, ext.delta1);
  ext.pair_class = bq.surjection;
  int zero = ext.pair_class[ext.apair.index_of(0, 0, a.size)];
  bq.algebra.name = a.name + "_ker";
  ext.b = make_kernel_algebra(bq.algebra, zero, v.diff_term());
  return ext;
}

std::vector<int> default_section(const CentralExtension& ext) {
  std::vector<int> l(ext.q.size, -1);
  for (int x = 0; x < ext.a.size; ++x)
    if (l[ext.pi[x]] < 0) l[ext.pi[x]] = x;
  return l;
}

std::vector<std::vector<int>> all_sections(const CentralExtension& ext, long long limit) {
  std::vector<std::vector<int>> fibers(ext.q.size);
  for (int x = 0; x < ext.a.size; ++x) fibers[ext.pi[x]].push_back(x);
  long long total = 1;
  for (const auto& f : fibers) {
    total *= (long long)f.size();
    if (total > limit) throw LimitExceeded("all_sections: too many sections");
  }
  std::vector<std::vector<int>> out;
  std::vector<size_t> idx(ext.q.size, 0);
  while (true) {
    std::vector<int> l(ext.q.size);
    for (int qv = 0; qv < ext.q.size; ++qv) l[qv] = fibers[qv][idx[qv]];
    out.push_back(std::move(l));
    int pos = ext.q.size - 1;
    while (pos >= 0 && idx[pos] + 1 == fibers[pos].size()) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

Cocycle zero_cocycle(const Signature& sig, int q_size, int b_zero) {
  Cocycle t;
  t.t.resize(sig.num_ops());
  for (int op = 0; op < sig.num_ops(); ++op) {
    size_t total = 1;
    for (int i = 0; i < sig.arity(op); ++i) total *= (size_t)q_size;
    t.t[op].assign(total, b_zero);
  }
  return t;
}

Cocycle cocycle_add(const Cocycle& x, const Cocycle& y, const KernelAlgebra& b) {
  Cocycle out = x;
  for (size_t op = 0; op < out.t.size(); ++op)
    for (size_t i = 0; i < out.t[op].size(); ++i)
      out.t[op][i] = b.plus(x.t[op][i], y.t[op][i]);
  return out;
}

Cocycle cocycle_sub(const Cocycle& x, const Cocycle& y, const KernelAlgebra& b) {
  Cocycle out = x;
  for (size_t op = 0; op < out.t.size(); ++op)
    for (size_t i = 0; i < out.t[op].size(); ++i)
      out.t[op][i] = b.sub(x.t[op][i], y.t[op][i]);
  return out;
}

std::string format_cocycle(const Cocycle& t, const Signature& sig) {
  std::ostringstream os;
  for (int op = 0; op < sig.num_ops(); ++op) {
    os << "cocycle " << sig.symbols[op].name << ":";
    for (size_t i = 0; i < t.t[op].size(); ++i) os << " " << t.t[op][i];
    os << "\n";
  }
  return os.str();
}

Cocycle parse_cocycle(const std::string& text, const Signature& sig, int q_size) {
  Cocycle t = zero_cocycle(sig, q_size, 0);
  std::istringstream in(text);
  std::string line;
  int cur = -1;
  size_t pos = 0;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string w;
    if (!(ls >> w)) continue;
    if (w == "cocycle") {
      std::string opname;
      ls >> opname;
      if (!opname.empty() && opname.back() == ':') opname.pop_back();
      cur = sig.index_of(opname);
      if (cur < 0) throw Error("parse_cocycle: unknown op '" + opname + "'");
      pos = 0;
      int v;
      while (ls >> v) {
        if (pos >= t.t[cur].size()) throw Error("parse_cocycle: too many entries");
        t.t[cur][pos++] = v;
      }
    } else {
      if (cur < 0) throw Error("parse_cocycle: entries before a 'cocycle' header");
      std::istringstream row(line);
      int v;
      while (row >> v) {
        if (pos >= t.t[cur].size()) throw Error("parse_cocycle: too many entries");
        t.t[cur][pos++] = v;
      }
    }
  }
  return t;
}

FiniteAlgebra basic_construction(const KernelAlgebra& b, const FiniteAlgebra& q,
                                 const Cocycle& t) {
  if (!b.alg.sig.same_as(q.sig)) throw SignatureMismatch("basic_construction");
  FiniteAlgebra r;
  r.name = b.alg.name + "_x_" + q.name;
  r.sig = q.sig;
  int nb = b.alg.size, nq = q.size;
  r.size = nb * nq;
  r.tables.resize(q.sig.num_ops());
  for (int op = 0; op < q.sig.num_ops(); ++op) {
    int ar = q.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)r.size;
    r.tables[op].resize(total);
    std::vector<int> args(ar), bs(ar), qs(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = (int)(rem % r.size);
        rem /= r.size;
      }
      for (int i = 0; i < ar; ++i) {
        bs[i] = args[i] / nq;
        qs[i] = args[i] % nq;
      }
      size_t qflat = 0;
      for (int i = 0; i < ar; ++i) qflat = qflat * nq + qs[i];
      int bval = b.plus(b.alg.apply(op, bs), t.t[op][qflat]);
      int qval = q.apply(op, qs);
      r.tables[op][flat] = bval * nq + qval;
    }
  }
  return r;
}

Cocycle extract_cocycle(const CentralExtension& ext, const std::vector<int>& section) {
  // validate the section
  for (int qv = 0; qv < ext.q.size; ++qv)
    if (section[qv] < 0 || section[qv] >= ext.a.size || ext.pi[section[qv]] != qv)
      throw NotASection("extract_cocycle: l is not a section of pi");
  Cocycle t;
  int nq = ext.q.size, n = ext.a.size;
  t.t.resize(ext.a.sig.num_ops());
  for (int op = 0; op < ext.a.sig.num_ops(); ++op) {
    int ar = ext.a.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)nq;
    t.t[op].resize(total);
    std::vector<int> qs(ar), ls(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        qs[i] = (int)(rem % nq);
        rem /= nq;
      }
      for (int i = 0; i < ar; ++i) ls[i] = section[qs[i]];
      int top = section[ext.q.apply(op, qs)];
      int bot = ext.a.apply(op, ls);
      int pidx = ext.apair.index_of(top, bot, n);
      if (pidx < 0) throw Error("extract_cocycle: lifted values not alpha-related");
      t.t[op][flat] = ext.pair_class[pidx];
    }
  }
  return t;
}

std::vector<int> centriso_map(const CentralExtension& ext, const std::vector<int>& section) {
  int n = ext.a.size, nq = ext.q.size;
  std::vector<int> psi(n);
  for (int x = 0; x < n; ++x) {
    int pidx = ext.apair.index_of(section[ext.pi[x]], x, n);
    psi[x] = ext.pair_class[pidx] * nq + ext.pi[x];
  }
  return psi;
}

Cocycle coboundary_from_witness(const std::vector<int>& h, const FiniteAlgebra& q,
                                const KernelAlgebra& b) {
  Cocycle g;
  int nq = q.size;
  g.t.resize(q.sig.num_ops());
  for (int op = 0; op < q.sig.num_ops(); ++op) {
    int ar = q.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)nq;
    g.t[op].resize(total);
    std::vector<int> qs(ar), hb(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        qs[i] = (int)(rem % nq);
        rem /= nq;
      }
      for (int i = 0; i < ar; ++i) hb[i] = h[qs[i]];
      g.t[op][flat] = b.sub(b.alg.apply(op, hb), h[q.apply(op, qs)]);
    }
  }
  return g;
}

std::vector<std::vector<int>> derivations(const FiniteAlgebra& q, const KernelAlgebra& b,
                                          long long limit) {
  auto homs = enumerate_homs(q, b.alg, false, 0, 0, limit);
  std::vector<std::vector<int>> out;
  for (auto& h : homs) out.push_back(h.map);
  return out;
}

std::vector<int> stabilizing_automorphism(const KernelAlgebra& b, const FiniteAlgebra& q,
                                          const Cocycle& t, const std::vector<int>& d) {
  FiniteAlgebra ext = basic_construction(b, q, t);
  int nq = q.size;
  std::vector<int> gamma(ext.size);
  for (int x = 0; x < ext.size; ++x) {
    int bv = x / nq, qv = x % nq;
    gamma[x] = b.plus(bv, d[qv]) * nq + qv;
  }
  // must be an automorphism fixing the base
  if (!is_homomorphism(ext, ext, gamma))
    throw VerificationFailed("stabilizing_automorphism: gamma is not an endomorphism");
  std::vector<char> seen(ext.size, 0);
  for (int v : gamma) {
    if (seen[v]) throw VerificationFailed("stabilizing_automorphism: gamma is not bijective");
    seen[v] = 1;
  }
  return gamma;
}

bool find_stabilizing_iso(const KernelAlgebra& b, const FiniteAlgebra& q, const Cocycle& t1,
                          const Cocycle& t2, const Term& diff_term, std::vector<int>* gamma_out,
                          long long budget) {
  FiniteAlgebra a1 = basic_construction(b, q, t1);
  FiniteAlgebra a2 = basic_construction(b, q, t2);
  int nb = b.alg.size, nq = q.size;
  long long space = 1;
  for (int i = 0; i < nq; ++i) {
    space *= nb;
    if (space > budget) throw BudgetExceeded("find_stabilizing_iso: |B|^|Q|", budget);
  }
  std::vector<std::string> vars = diff_term.vars();
  while (vars.size() < 3) vars.push_back("_pad" + std::to_string(vars.size()));
  CompiledTerm m = CompiledTerm::compile(diff_term, vars);
  // base-preserving candidates are the additive shifts gamma(b,q) = (b+g(q), q);
  // the trace condition forces this shape, the search decides existence
  std::vector<int> g(nq, 0);
  while (true) {
    std::vector<int> gamma(a1.size);
    for (int x = 0; x < a1.size; ++x) gamma[x] = b.plus(x / nq, g[x % nq]) * nq + x % nq;
    if (is_homomorphism(a1, a2, gamma)) {
      // gamma = m(gamma . r, r, id) for every trace r(x) = l(p2(x)),
      // m evaluated in the codomain; fibers are small so all sections run
      bool stable = true;
      std::vector<int> digits(nq, 0);
      while (true) {
        for (int x = 0; x < a1.size && stable; ++x) {
          int rx = digits[x % nq] * nq + x % nq;
          int env[3] = {gamma[rx], rx, x};
          if (m.eval(a2, env) != gamma[x]) stable = false;
        }
        int pos = nq - 1;
        while (pos >= 0 && digits[pos] + 1 == nb) {
          digits[pos] = 0;
          --pos;
        }
        if (pos < 0 || !stable) break;
        ++digits[pos];
      }
      if (stable) {
        if (gamma_out) *gamma_out = gamma;
        return true;
      }
    }
    int pos = nq - 1;
    while (pos >= 0 && g[pos] + 1 == nb) {
      g[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++g[pos];
  }
  return false;
}

IdemIdealIso idempotent_ideal_iso(const FiniteAlgebra& a, const Partition& alpha, int u,
                                  const VarietySpec& v, long long budget) {
  auto idems = find_idempotents(a);
  if (std::find(idems.begin(), idems.end(), u) == idems.end())
    throw NotIdempotent("idempotent_ideal_iso: u is not idempotent");
  CentralExtension ext = central_extension(a, alpha, v, budget);
  IdemIdealIso iso;
  for (int x = 0; x < a.size; ++x)
    if (alpha.same(x, u)) iso.ideal.push_back(x);
  // the map [a;b]/Delta -> m(a,b,u)
  std::vector<std::string> vars = v.diff_term().vars();
  while (vars.size() < 3) vars.push_back("_pad" + std::to_string(vars.size()));
  CompiledTerm m = CompiledTerm::compile(v.diff_term(), vars);
  iso.map.assign(ext.b.alg.size, -1);
  for (size_t p = 0; p < ext.apair.pairs.size(); ++p) {
    auto [x, y] = ext.apair.pairs[p];
    int env[3] = {x, y, u};
    int img = m.eval(a, env);
    int cls = ext.pair_class[p];
    if (iso.map[cls] == -1)
      iso.map[cls] = img;
    else if (iso.map[cls] != img)
      throw VerificationFailed("idempotent_ideal_iso: map not well-defined on classes");
  }
  // bijective onto I_alpha
  std::vector<int> sorted = iso.map;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ideal_sorted = iso.ideal;
  std::sort(ideal_sorted.begin(), ideal_sorted.end());
  if (sorted != ideal_sorted)
    throw VerificationFailed("idempotent_ideal_iso: map is not a bijection onto I_alpha");
  // I_alpha as a subalgebra, re-indexed by position in iso.ideal
  std::vector<int> pos(a.size, -1);
  for (size_t i = 0; i < iso.ideal.size(); ++i) pos[iso.ideal[i]] = (int)i;
  FiniteAlgebra& ia = iso.ideal_algebra;
  ia.name = a.name + "_ideal";
  ia.sig = a.sig;
  ia.size = (int)iso.ideal.size();
  ia.tables.resize(a.sig.num_ops());
  for (int op = 0; op < a.sig.num_ops(); ++op) {
    int ar = a.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)ia.size;
    ia.tables[op].resize(total);
    std::vector<int> args(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = iso.ideal[rem % ia.size];
        rem /= ia.size;
      }
      int r = a.apply(op, args);
      if (pos[r] < 0) throw Error("idempotent_ideal_iso: I_alpha is not a subalgebra");
      ia.tables[op][flat] = pos[r];
    }
  }
  // the map must be a homomorphism B -> I_alpha
  std::vector<int> as_positions(ext.b.alg.size);
  for (int c = 0; c < ext.b.alg.size; ++c) as_positions[c] = pos[iso.map[c]];
  if (!is_homomorphism(ext.b.alg, ia, as_positions))
    throw VerificationFailed("idempotent_ideal_iso: map is not a homomorphism");
  return iso;
}

SplitSequenceReport split_sequence_check(const FiniteAlgebra& a, const Partition& alpha,
                                         const VarietySpec& v, long long budget) {
  SplitSequenceReport rep;
  CentralExtension ext = central_extension(a, alpha, v, budget);
  Partition comm = tc_commutator(a, Partition::one(a.size), Partition::one(a.size), budget);
  // kernel side: kappa(A(alpha ^ [1,1]))
  Partition aw = meet(alpha, comm);
  std::vector<char> in_kernel(ext.b.alg.size, 0);
  for (size_t p = 0; p < ext.apair.pairs.size(); ++p) {
    auto [x, y] = ext.apair.pairs[p];
    if (aw.same(x, y)) in_kernel[ext.pair_class[p]] = 1;
  }
  for (int c = 0; c < ext.b.alg.size; ++c)
    if (in_kernel[c]) rep.kernel_elements.push_back(c);
  rep.kernel_size = (int)rep.kernel_elements.size();
  rep.middle_size = ext.b.alg.size;
  // right side: Abar = A/[1,1], beta = (alpha v [1,1])/[1,1]
  QuotientResult abar = quotient(a, comm);
  Partition av = join(a, alpha, comm);
  Partition beta(abar.algebra.size);
  for (int x = 0; x < a.size; ++x)
    for (int y = x + 1; y < a.size; ++y)
      if (av.same(x, y)) beta.unite(abar.surjection[x], abar.surjection[y]);
  beta.normalize();
  CentralExtension extbar = central_extension(abar.algebra, beta, v, budget);
  rep.right_size = extbar.b.alg.size;
  // xi: class of (x,y) in B -> class of (xbar,ybar) in Bbar
  rep.xi.assign(ext.b.alg.size, -1);
  bool well_defined = true;
  for (size_t p = 0; p < ext.apair.pairs.size(); ++p) {
    auto [x, y] = ext.apair.pairs[p];
    int xb = abar.surjection[x], yb = abar.surjection[y];
    int pidx = extbar.apair.index_of(xb, yb, abar.algebra.size);
    if (pidx < 0) {
      well_defined = false;
      continue;
    }
    int img = extbar.pair_class[pidx];
    int cls = ext.pair_class[p];
    if (rep.xi[cls] == -1)
      rep.xi[cls] = img;
    else if (rep.xi[cls] != img)
      well_defined = false;
  }
  rep.xi_homomorphism = well_defined && is_homomorphism(ext.b.alg, extbar.b.alg, rep.xi);
  std::vector<char> hit(extbar.b.alg.size, 0);
  for (int v2 : rep.xi)
    if (v2 >= 0) hit[v2] = 1;
  rep.xi_surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  // kernel of xi (preimage of zero) must equal kappa(A(alpha ^ [1,1]))
  std::vector<int> ker_xi;
  for (int c = 0; c < ext.b.alg.size; ++c)
    if (rep.xi[c] == extbar.b.zero) ker_xi.push_back(c);
  rep.kernel_matches = (ker_xi == rep.kernel_elements);
  // search a splitting homomorphism chi with xi . chi = id
  auto homs = enumerate_homs(extbar.b.alg, ext.b.alg, true, extbar.b.zero, ext.b.zero, 1000000);
  for (auto& h : homs) {
    bool ok = true;
    for (int c = 0; c < extbar.b.alg.size && ok; ++c)
      if (rep.xi[h.map[c]] != c) ok = false;
    if (ok) {
      rep.split_found = true;
      rep.splitting = h.map;
      break;
    }
  }
  return rep;
}

}  // namespace ualg
