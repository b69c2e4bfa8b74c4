#include "ualg/schur.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ualg {

namespace {

// subalgebra of b.alg on the given elements, re-indexed, with kernel structure
KernelAlgebra sub_kernel_algebra(const KernelAlgebra& b, const std::vector<int>& elements,
                                 const Term& diff, std::vector<int>& to_b) {
  std::vector<int> pos(b.alg.size, -1);
  to_b = elements;
  for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = (int)i;
  FiniteAlgebra sub;
  sub.name = b.alg.name + "_mult";
  sub.sig = b.alg.sig;
  sub.size = (int)elements.size();
  sub.tables.resize(sub.sig.num_ops());
  for (int op = 0; op < sub.sig.num_ops(); ++op) {
    int ar = sub.sig.arity(op);
    size_t total = 1;
    for (int i = 0; i < ar; ++i) total *= (size_t)sub.size;
    sub.tables[op].resize(total);
    std::vector<int> args(ar);
    for (size_t flat = 0; flat < total; ++flat) {
      size_t rem = flat;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = elements[rem % sub.size];
        rem /= sub.size;
      }
      int r = b.alg.apply(op, args);
      if (pos[r] < 0) throw Error("multiplier: set is not a subalgebra");
      sub.tables[op][flat] = pos[r];
    }
  }
  if (pos[b.zero] < 0) throw Error("multiplier: zero missing from subalgebra");
  return make_kernel_algebra(sub, pos[b.zero], diff);
}

}  // namespace

SchurMultiplier schur_multiplier(const FreePresentation& pres, const VarietySpec& v,
                                 long long budget) {
  SchurMultiplier sm;
  sm.pres = pres;
  const FiniteAlgebra& f = pres.free_alg.algebra;
  Partition comm_theta1 = tc_commutator(f, pres.theta, Partition::one(f.size), budget);
  QuotientResult fq = quotient(f, comm_theta1);
  fq.algebra.name = f.name + "_c";
  sm.f1 = fq.algebra;
  sm.f_to_f1 = fq.surjection;
  // theta' = theta/[theta,1]
  Partition theta1(sm.f1.size);
  for (int x = 0; x < f.size; ++x)
    for (int y = x + 1; y < f.size; ++y)
      if (pres.theta.same(x, y)) theta1.unite(sm.f_to_f1[x], sm.f_to_f1[y]);
  theta1.normalize();
  sm.theta1 = theta1;
  sm.ext = central_extension(sm.f1, theta1, v, budget);
  // theta' ^ [1',1'], cross-checked against the pushdown of theta ^ [1,1]
  Partition comm1 = tc_commutator(sm.f1, Partition::one(sm.f1.size), Partition::one(sm.f1.size),
                                  budget);
  Partition tw = meet(theta1, comm1);
  {
    Partition comm_f = tc_commutator(f, Partition::one(f.size), Partition::one(f.size), budget);
    Partition twf = meet(pres.theta, comm_f);
    Partition pushed(sm.f1.size);
    for (int x = 0; x < f.size; ++x)
      for (int y = x + 1; y < f.size; ++y)
        if (twf.same(x, y)) pushed.unite(sm.f_to_f1[x], sm.f_to_f1[y]);
    pushed.normalize();
    if (!(pushed == tw))
      throw VerificationFailed("schur_multiplier: homomorphism property cross-check failed");
  }
  // pushdown kappa(F'(theta' ^ [1',1'])) inside the kernel algebra
  std::vector<char> in_mult(sm.ext.b.alg.size, 0);
  for (size_t p = 0; p < sm.ext.apair.pairs.size(); ++p) {
    auto [x, y] = sm.ext.apair.pairs[p];
    if (tw.same(x, y)) in_mult[sm.ext.pair_class[p]] = 1;
  }
  for (int c = 0; c < sm.ext.b.alg.size; ++c)
    if (in_mult[c]) sm.elements.push_back(c);
  sm.multiplier = sub_kernel_algebra(sm.ext.b, sm.elements, v.diff_term(), sm.to_b);
  sm.invariant_factors.assign(sm.multiplier.group.invariant_factors().begin(),
                              sm.multiplier.group.invariant_factors().end());
  auto idems = find_idempotents(sm.f1);
  sm.f1_has_idempotent = !idems.empty();
  if (sm.f1_has_idempotent) {
    // idempotent-ideal map for the multiplier: I_(theta ^ [1,1])/[theta,1] at u
    int u = idems[0];
    std::vector<std::string> vars = v.diff_term().vars();
    while (vars.size() < 3) vars.push_back("_pad" + std::to_string(vars.size()));
    CompiledTerm m = CompiledTerm::compile(v.diff_term(), vars);
    std::set<int> ideal;
    for (int x = 0; x < sm.f1.size; ++x)
      if (tw.same(x, u)) ideal.insert(x);
    std::set<int> image;
    bool welldef = true;
    std::vector<int> img_of(sm.ext.b.alg.size, -2);
    for (size_t p = 0; p < sm.ext.apair.pairs.size(); ++p) {
      auto [x, y] = sm.ext.apair.pairs[p];
      if (!tw.same(x, y)) continue;
      int env[3] = {x, y, u};
      int val = m.eval(sm.f1, env);
      int cls = sm.ext.pair_class[p];
      if (img_of[cls] == -2)
        img_of[cls] = val;
      else if (img_of[cls] != val)
        welldef = false;
      image.insert(val);
    }
    sm.ideal_iso_checked = welldef && image == ideal &&
                           (int)image.size() == (int)sm.elements.size();
  }
  return sm;
}

std::vector<int> induced_kernel_map(const SchurMultiplier& sm1, const SchurMultiplier& sm2,
                                    const std::vector<int>& sigma, const VarietySpec& v) {
  // sigma : F1' -> F2' with pi2 . sigma = pi1; build the induced map on kernel
  // algebra elements, checking well-definedness on every pair
  const CentralExtension& e1 = sm1.ext;
  const CentralExtension& e2 = sm2.ext;
  std::vector<std::string> vars = v.diff_term().vars();
  while (vars.size() < 3) vars.push_back("_pad" + std::to_string(vars.size()));
  CompiledTerm m = CompiledTerm::compile(v.diff_term(), vars);
  std::vector<int> l1 = default_section(e1);
  std::vector<int> out(e1.b.alg.size, -1);
  for (size_t p = 0; p < e1.apair.pairs.size(); ++p) {
    auto [aup, blow] = e1.apair.pairs[p];
    int ra = l1[e1.pi[aup]];
    int env[3] = {blow, aup, ra};
    int shifted = m.eval(sm1.f1, env);  // m(b, a, r(a))
    int top = sigma[ra];
    int bot = sigma[shifted];
    int pidx = e2.apair.index_of(top, bot, sm2.f1.size);
    if (pidx < 0) throw VerificationFailed("induced_kernel_map: image pair not in ker pi2");
    int img = e2.pair_class[pidx];
    int cls = e1.pair_class[p];
    if (out[cls] == -1)
      out[cls] = img;
    else if (out[cls] != img)
      throw VerificationFailed("induced_kernel_map: not well-defined on Delta classes");
  }
  if (!is_homomorphism(e1.b.alg, e2.b.alg, out))
    throw VerificationFailed("induced_kernel_map: not a homomorphism");
  return out;
}

namespace {

// evaluation onto the shared target Q, pushed down to F' = F/[theta,1]
std::vector<int> target_eval_on_f1(const SchurMultiplier& sm) {
  std::vector<int> qmap(sm.f1.size, -1);
  for (int x = 0; x < sm.pres.free_alg.algebra.size; ++x) qmap[sm.f_to_f1[x]] = sm.pres.eval_map[x];
  return qmap;
}

// lifting sigma : F1' -> F2' of the identity on Q through pi2, built from
// generator preimages as in the free lifting recipe; both presentations
// target the same algebra Q, so all commuting checks go through it
std::vector<int> build_lifting(const SchurMultiplier& from, const SchurMultiplier& to,
                               long long budget) {
  const FreePresentation& p1 = from.pres;
  std::vector<int> qmap_from = target_eval_on_f1(from);
  std::vector<int> qmap_to = target_eval_on_f1(to);
  // generator i of F1 maps to q_i in Q; choose the least preimage in F2'
  std::vector<int> images;
  for (int g = 0; g < p1.free_alg.k; ++g) {
    int fgen = p1.free_alg.generators[g];
    int qv = p1.eval_map[fgen];
    int pre = -1;
    for (int x = 0; x < to.f1.size && pre < 0; ++x)
      if (qmap_to[x] == qv) pre = x;
    images.push_back(pre);
  }
  std::vector<int> sigma_f;  // F1 -> F2'
  if (!eval_hom_from_free(p1.free_alg, to.f1, images, sigma_f, budget))
    throw VerificationFailed("build_lifting: F2' escaped the variety (closure forked)");
  // must kill [theta,1] to induce F1' -> F2'
  std::vector<int> sigma(from.f1.size, -1);
  for (int x = 0; x < p1.free_alg.algebra.size; ++x) {
    int cls = from.f_to_f1[x];
    if (sigma[cls] == -1)
      sigma[cls] = sigma_f[x];
    else if (sigma[cls] != sigma_f[x])
      throw VerificationFailed("build_lifting: [theta,1] not contained in the kernel");
  }
  // pi2 . sigma = pi1' over the shared target
  for (int x = 0; x < from.f1.size; ++x)
    if (qmap_to[sigma[x]] != qmap_from[x])
      throw VerificationFailed("build_lifting: lifting does not commute with projections");
  return sigma;
}

}  // namespace

InvarianceReport invariance_check(const FreePresentation& p1, const FreePresentation& p2,
                                  const VarietySpec& v, long long budget) {
  InvarianceReport rep;
  SchurMultiplier sm1 = schur_multiplier(p1, v, budget);
  SchurMultiplier sm2 = schur_multiplier(p2, v, budget);
  rep.factors_match = (sm1.invariant_factors == sm2.invariant_factors);
  std::vector<int> sigma = build_lifting(sm1, sm2, budget);
  std::vector<int> lambda = build_lifting(sm2, sm1, budget);
  std::vector<int> sig_hat = induced_kernel_map(sm1, sm2, sigma, v);
  std::vector<int> lam_hat = induced_kernel_map(sm2, sm1, lambda, v);
  // sigma_hat must carry multiplier 1 into multiplier 2 and compose to the
  // identity there (and symmetrically)
  std::set<int> m2set(sm2.elements.begin(), sm2.elements.end());
  std::set<int> m1set(sm1.elements.begin(), sm1.elements.end());
  rep.round_trip_identity = true;
  for (int c : sm1.elements) {
    if (!m2set.count(sig_hat[c])) rep.round_trip_identity = false;
    else if (lam_hat[sig_hat[c]] != c) rep.round_trip_identity = false;
  }
  rep.round_trip_identity2 = true;
  for (int c : sm2.elements) {
    if (!m1set.count(lam_hat[c])) rep.round_trip_identity2 = false;
    else if (sig_hat[lam_hat[c]] != c) rep.round_trip_identity2 = false;
  }
  rep.report.add_list("factors_1", sm1.invariant_factors);
  rep.report.add_list("factors_2", sm2.invariant_factors);
  rep.report.add("multiplier_1_order", (long long)sm1.elements.size());
  rep.report.add("multiplier_2_order", (long long)sm2.elements.size());
  rep.report.add("factors_match", rep.factors_match);
  rep.report.add("round_trip_1", rep.round_trip_identity);
  rep.report.add("round_trip_2", rep.round_trip_identity2);
  return rep;
}

CoverResult cover_construct(const FreePresentation& pres, const VarietySpec& v,
                            const std::vector<CoverFamilyMember>& family, long long budget) {
  SchurMultiplier sm = schur_multiplier(pres, v, budget);
  if (!sm.f1_has_idempotent)
    throw HypothesisFailed("cover_construct: F/[theta,1] has no idempotent element");
  // direct-sum splitting of the kernel algebra over the multiplier
  SplitSequenceReport split = split_sequence_check(sm.f1, sm.theta1, v, budget);
  if (!split.split_found)
    throw VerificationFailed("cover_construct: complement search failed (SplittingNotFound)");
  if (split.kernel_elements != sm.elements)
    throw VerificationFailed("cover_construct: split kernel differs from multiplier");
  // p1 : B -> multiplier along the complement chi(Bbar)
  const KernelAlgebra& b = sm.ext.b;
  std::vector<int> p1(b.alg.size, -1);
  for (int k : sm.elements)
    for (size_t cbar = 0; cbar < split.splitting.size(); ++cbar) {
      int c = split.splitting[cbar];
      int s = b.plus(k, c);
      if (p1[s] != -1) throw VerificationFailed("cover_construct: direct sum is not direct");
      p1[s] = k;
    }
  for (int x = 0; x < b.alg.size; ++x)
    if (p1[x] < 0) throw VerificationFailed("cover_construct: direct sum does not cover B");
  CoverResult res;
  Cocycle t = extract_cocycle(sm.ext, default_section(sm.ext));
  // S = p1 . T expressed in multiplier coordinates
  std::vector<int> pos(b.alg.size, -1);
  for (size_t i = 0; i < sm.to_b.size(); ++i) pos[sm.to_b[i]] = (int)i;
  res.s = t;
  for (auto& tbl : res.s.t)
    for (auto& x : tbl) x = pos[p1[x]];
  res.algebra = basic_construction(sm.multiplier, sm.ext.q, res.s);
  res.algebra.name = pres.target.name + "_cover";
  // certificates
  int nq = sm.ext.q.size;
  Partition ker(res.algebra.size);
  for (int x = 0; x < res.algebra.size; ++x)
    for (int y = x + 1; y < res.algebra.size; ++y)
      if (x % nq == y % nq) ker.unite(x, y);
  ker.normalize();
  res.ker_pi = ker;
  Partition one = Partition::one(res.algebra.size);
  Partition comm = tc_commutator(res.algebra, one, one, budget);
  res.kernel_below_comm = ker.leq(comm);
  Partition zeta = center_congruence(res.algebra, budget);
  res.kernel_below_center = ker.leq(zeta);
  // lifting property against the supplied family
  for (const auto& fam : family) {
    // gamma must be a homomorphism from the cover's base to the family base
    if (!is_homomorphism(sm.ext.q, fam.rho.q, fam.gamma))
      throw Error("cover_construct: gamma is not a homomorphism Q -> P");
    // want tau_bar : cover -> E with rho . tau_bar = gamma . p2
    bool found = false;
    auto gens = greedy_generators(res.algebra);
    long long space = 1;
    bool overflow = false;
    for (size_t i = 0; i < gens.size(); ++i) {
      space *= fam.rho.a.size;
      if (space > budget) {
        overflow = true;
        break;
      }
    }
    if (overflow) {
      res.lifting_ok.push_back(false);
      continue;
    }
    std::vector<int> images(gens.size(), 0);
    for (long long it = 0; it < space && !found; ++it) {
      long long rem = it;
      for (int i = (int)images.size() - 1; i >= 0; --i) {
        images[i] = (int)(rem % fam.rho.a.size);
        rem /= fam.rho.a.size;
      }
      bool feasible = true;
      for (size_t i = 0; i < gens.size() && feasible; ++i)
        if (fam.rho.pi[images[i]] != fam.gamma[gens[i] % nq]) feasible = false;
      if (!feasible) continue;
      std::vector<int> tau;
      if (!extend_hom(res.algebra, gens, fam.rho.a, images, tau)) continue;
      bool ok = true;
      for (int x = 0; x < res.algebra.size && ok; ++x)
        if (fam.rho.pi[tau[x]] != fam.gamma[x % nq]) ok = false;
      if (ok) found = true;
    }
    res.lifting_ok.push_back(found);
  }
  res.report.add("cover_size", res.algebra.size);
  res.report.add_list("multiplier_factors", sm.invariant_factors);
  res.report.add("kernel_below_comm", res.kernel_below_comm);
  res.report.add("kernel_below_center", res.kernel_below_center);
  for (size_t i = 0; i < res.lifting_ok.size(); ++i)
    res.report.add("lifting_" + std::to_string(i), (bool)res.lifting_ok[i]);
  return res;
}

Report schur_hopf_check(const FiniteAlgebra& q, const KernelAlgebra& e,
                        const FreePresentation& pres, const VarietySpec& v, long long budget) {
  Report rep;
  SchurMultiplier sm = schur_multiplier(pres, v, budget);
  // all cocycle tables below are indexed by the presentation's own quotient
  // F'/theta'; q is only checked for compatibility
  if (q.size != sm.ext.q.size)
    throw Error("schur_hopf_check: target size does not match the presentation");
  const FiniteAlgebra& qx = sm.ext.q;
  if (!sm.f1_has_idempotent) {
    rep.add("hypothesis", "HypothesisFailed");
    return rep;
  }
  rep.add("hypothesis", "ok");
  HomGroup hom_mult_e = hom_group(sm.multiplier.alg, e, true, sm.multiplier.zero, budget);
  // im delta from the presentation extension
  Cocycle t = extract_cocycle(sm.ext, default_section(sm.ext));
  HomGroup hom_b_e = hom_group(sm.ext.b.alg, e, true, sm.ext.b.zero, budget);
  // kernel of delta and of the restriction nabla to the multiplier
  std::vector<char> in_ker_delta(hom_b_e.maps.size(), 0);
  std::vector<char> in_ker_nabla(hom_b_e.maps.size(), 0);
  for (size_t i = 0; i < hom_b_e.maps.size(); ++i) {
    Cocycle c = transgress(hom_b_e.maps[i], t);
    in_ker_delta[i] = is_coboundary(c, qx, e, budget) ? 1 : 0;
    bool nz = true;
    for (int m : sm.elements)
      if (hom_b_e.maps[i][m] != e.zero) nz = false;
    in_ker_nabla[i] = nz ? 1 : 0;
  }
  bool kernels_match = true;
  for (size_t i = 0; i < hom_b_e.maps.size(); ++i)
    if (in_ker_delta[i] != in_ker_nabla[i]) kernels_match = false;
  rep.add("ker_delta_equals_ker_nabla", kernels_match);
  // nabla surjectivity onto Hom(multiplier, E): the regularity surrogate check
  std::set<std::vector<int>> restricted;
  for (const auto& phi : hom_b_e.maps) {
    std::vector<int> r(sm.elements.size());
    for (size_t j = 0; j < sm.elements.size(); ++j) r[j] = phi[sm.elements[j]];
    restricted.insert(r);
  }
  bool nabla_surjective = restricted.size() == hom_mult_e.maps.size();
  rep.add("nabla_surjective", nabla_surjective);
  // im delta as a quotient group Hom(B,E)/ker
  std::vector<int> ker_members;
  for (size_t i = 0; i < hom_b_e.maps.size(); ++i)
    if (in_ker_delta[i]) ker_members.push_back((int)i);
  // coset representatives
  std::vector<int> coset_of(hom_b_e.maps.size(), -1);
  std::vector<int> reps;
  for (size_t i = 0; i < hom_b_e.maps.size(); ++i) {
    if (coset_of[i] != -1) continue;
    int rep_idx = (int)reps.size();
    for (int k : ker_members) coset_of[hom_b_e.group.plus((int)i, k)] = rep_idx;
    reps.push_back((int)i);
  }
  AbGroupBuilder gb;
  gb.n = (int)reps.size();
  gb.zero = coset_of[hom_b_e.group.zero];
  gb.add = [&](int i, int j) { return coset_of[hom_b_e.group.plus(reps[i], reps[j])]; };
  gb.neg = [&](int i) { return coset_of[hom_b_e.group.minus(reps[i])]; };
  AbGroup imdelta = gb.build();
  auto im_factors = imdelta.invariant_factors();
  rep.add("im_delta_order", (long long)imdelta.n);
  rep.add_list("im_delta_factors", im_factors);
  rep.add("hom_mult_e_order", (long long)hom_mult_e.maps.size());
  rep.add_list("hom_mult_e_factors", hom_mult_e.invariant_factors);
  bool iso = (im_factors == hom_mult_e.invariant_factors);
  rep.add("factors_match", iso);
  rep.add_list("multiplier_factors", sm.invariant_factors);
  return rep;
}

}  // namespace ualg
