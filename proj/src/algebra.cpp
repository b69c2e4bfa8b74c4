#include "ualg/algebra.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ualg {

namespace {

size_t pow_size(int base, int exp) {
  size_t v = 1;
  for (int i = 0; i < exp; ++i) v *= (size_t)base;
  return v;
}

}  // namespace

void FiniteAlgebra::validate() const {
  if (size <= 0) throw Error("algebra '" + name + "': size must be positive");
  if ((int)tables.size() != sig.num_ops())
    throw Error("algebra '" + name + "': missing operation tables");
  for (int op = 0; op < sig.num_ops(); ++op) {
    size_t want = pow_size(size, sig.arity(op));
    if (tables[op].size() != want)
      throw Error("algebra '" + name + "': table for '" + sig.symbols[op].name + "' has " +
                  std::to_string(tables[op].size()) + " entries, expected " + std::to_string(want));
    for (int v : tables[op])
      if (v < 0 || v >= size)
        throw Error("algebra '" + name + "': table entry out of range for '" +
                    sig.symbols[op].name + "'");
  }
  if (!labels.empty() && (int)labels.size() != size)
    throw Error("algebra '" + name + "': label count mismatch");
}

std::string FiniteAlgebra::format() const {
  std::ostringstream os;
  os << "algebra " << (name.empty() ? std::string("unnamed") : name) << "\n";
  os << "signature: " << sig.format() << "\n";
  os << "size " << size << "\n";
  for (int op = 0; op < sig.num_ops(); ++op) {
    os << "op " << sig.symbols[op].name << ":";
    int ar = sig.arity(op);
    size_t rows = ar <= 1 ? 1 : pow_size(size, ar - 1);
    size_t cols = tables[op].size() / rows;
    size_t k = 0;
    for (size_t r = 0; r < rows; ++r) {
      os << "\n";
      for (size_t c = 0; c < cols; ++c) {
        if (c) os << " ";
        os << tables[op][k++];
      }
    }
    os << "\n";
  }
  if (!labels.empty()) {
    os << "labels:";
    for (const auto& l : labels) os << " " << l;
    os << "\n";
  }
  return os.str();
}

FiniteAlgebra FiniteAlgebra::parse(const std::string& text) {
  FiniteAlgebra a;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int cur_op = -1;
  std::vector<std::vector<int>> tables;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, lineno, 1); };
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments
    if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "algebra") {
      ls >> a.name;
    } else if (word == "signature:") {
      std::string rest;
      std::getline(ls, rest);
      a.sig = Signature::parse(rest);
      tables.assign(a.sig.num_ops(), {});
    } else if (word == "size") {
      if (!(ls >> a.size)) fail("expected size value");
    } else if (word == "op") {
      std::string opname;
      ls >> opname;
      if (!opname.empty() && opname.back() == ':') opname.pop_back();
      cur_op = a.sig.index_of(opname);
      if (cur_op < 0) fail("unknown op '" + opname + "'");
      int v;
      while (ls >> v) tables[cur_op].push_back(v);
    } else if (word == "labels:") {
      std::string l;
      while (ls >> l) a.labels.push_back(l);
    } else {
      // continuation of the current table
      if (cur_op < 0) fail("unexpected content '" + word + "'");
      std::istringstream row(line);
      int v;
      while (row >> v) tables[cur_op].push_back(v);
    }
  }
  a.tables = std::move(tables);
  a.validate();
  return a;
}

FiniteAlgebra FiniteAlgebra::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open algebra file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  FiniteAlgebra a = parse(ss.str());
  if (a.name.empty()) a.name = path;
  return a;
}

// --- term evaluation ------------------------------------------------------

CompiledTerm CompiledTerm::compile(const Term& t, const std::vector<std::string>& var_order) {
  CompiledTerm ct;
  ct.num_vars = (int)var_order.size();
  auto var_index = [&](const std::string& v) {
    for (int i = 0; i < (int)var_order.size(); ++i)
      if (var_order[i] == v) return i;
    throw Error("unbound variable '" + v + "' in term");
  };
  // postfix emit
  std::vector<std::pair<const Term*, bool>> walk;
  walk.push_back({&t, false});
  while (!walk.empty()) {
    auto [node, expanded] = walk.back();
    walk.pop_back();
    if (node->is_variable()) {
      ct.code.push_back({-1, var_index(node->var_name())});
      continue;
    }
    if (expanded) {
      ct.code.push_back({node->symbol(), 0});
      continue;
    }
    walk.push_back({node, true});
    const auto& ch = node->children();
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) walk.push_back({&*it, false});
  }
  return ct;
}

int CompiledTerm::eval(const FiniteAlgebra& a, std::span<const int> env) const {
  // stack machine; depth bounded by term size
  int small[64] = {0};
  std::vector<int> big;
  int* sp = small;
  if (code.size() > 60) {
    big.resize(code.size() + 1);
    sp = big.data();
  }
  int top = 0;
  for (const auto& ins : code) {
    if (ins.op < 0) {
      sp[top++] = env[ins.var];
    } else {
      int ar = a.sig.arity(ins.op);
      top -= ar;
      sp[top] = a.apply(ins.op, std::span<const int>(sp + top, (size_t)ar));
      ++top;
    }
  }
  return sp[0];
}

int eval_term(const Term& t, const FiniteAlgebra& a, const std::map<std::string, int>& env) {
  if (t.is_variable()) {
    auto it = env.find(t.var_name());
    if (it == env.end()) throw Error("missing variable binding '" + t.var_name() + "'");
    return it->second;
  }
  std::vector<int> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(eval_term(c, a, env));
  return a.apply(t.symbol(), args);
}

std::vector<int> term_operation(const Term& t, const FiniteAlgebra& a,
                                const std::vector<std::string>& var_order) {
  CompiledTerm ct = CompiledTerm::compile(t, var_order);
  size_t total = pow_size(a.size, (int)var_order.size());
  std::vector<int> table(total);
  std::vector<int> env(var_order.size(), 0);
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rem = idx;
    for (int i = (int)env.size() - 1; i >= 0; --i) {
      env[i] = (int)(rem % a.size);
      rem /= a.size;
    }
    table[idx] = ct.eval(a, env);
  }
  return table;
}

bool satisfies(const FiniteAlgebra& a, const Identity& id) {
  CompiledTerm l = CompiledTerm::compile(id.lhs, id.variables);
  CompiledTerm r = CompiledTerm::compile(id.rhs, id.variables);
  size_t total = pow_size(a.size, (int)id.variables.size());
  std::vector<int> env(id.variables.size(), 0);
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rem = idx;
    for (int i = (int)env.size() - 1; i >= 0; --i) {
      env[i] = (int)(rem % a.size);
      rem /= a.size;
    }
    if (l.eval(a, env) != r.eval(a, env)) return false;
  }
  return true;
}

int first_failing_axiom(const FiniteAlgebra& a, const std::vector<Identity>& axioms) {
  for (int i = 0; i < (int)axioms.size(); ++i)
    if (!satisfies(a, axioms[i])) return i;
  return -1;
}

// --- constructions --------------------------------------------------------

ProductResult direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.sig.same_as(b.sig)) throw SignatureMismatch("direct_product: signature mismatch");
  ProductResult res;
  FiniteAlgebra& p = res.algebra;
  p.name = a.name + "x" + b.name;
  p.sig = a.sig;
  p.size = a.size * b.size;
  p.tables.resize(p.sig.num_ops());
  res.proj1.resize(p.size);
  res.proj2.resize(p.size);
  for (int x = 0; x < p.size; ++x) {
    res.proj1[x] = x / b.size;
    res.proj2[x] = x % b.size;
  }
  for (int op = 0; op < p.sig.num_ops(); ++op) {
    int ar = p.sig.arity(op);
    size_t total = pow_size(p.size, ar);
    p.tables[op].resize(total);
    std::vector<int> args(ar), aa(ar), bb(ar);
    for (size_t idx = 0; idx < total; ++idx) {
      size_t rem = idx;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = (int)(rem % p.size);
        rem /= p.size;
      }
      for (int i = 0; i < ar; ++i) {
        aa[i] = args[i] / b.size;
        bb[i] = args[i] % b.size;
      }
      p.tables[op][idx] = a.apply(op, aa) * b.size + b.apply(op, bb);
    }
  }
  return res;
}

std::vector<int> find_idempotents(const FiniteAlgebra& a) {
  std::vector<int> out;
  std::vector<int> args;
  for (int u = 0; u < a.size; ++u) {
    bool ok = true;
    for (int op = 0; op < a.sig.num_ops() && ok; ++op) {
      args.assign(a.sig.arity(op), u);
      if (a.apply(op, args) != u) ok = false;
    }
    if (ok) out.push_back(u);
  }
  return out;
}

bool is_homomorphism(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                     const std::vector<int>& map) {
  if ((int)map.size() != dom.size) return false;
  for (int op = 0; op < dom.sig.num_ops(); ++op) {
    int ar = dom.sig.arity(op);
    size_t total = pow_size(dom.size, ar);
    std::vector<int> args(ar), im(ar);
    for (size_t idx = 0; idx < total; ++idx) {
      size_t rem = idx;
      for (int i = ar - 1; i >= 0; --i) {
        args[i] = (int)(rem % dom.size);
        rem /= dom.size;
      }
      for (int i = 0; i < ar; ++i) im[i] = map[args[i]];
      if (map[dom.apply(op, args)] != cod.apply(op, im)) return false;
    }
  }
  return true;
}

std::vector<int> greedy_generators(const FiniteAlgebra& a) {
  // close over constants first, then add least missing element until full
  std::vector<int> gens;
  std::vector<char> in(a.size, 0);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int op = 0; op < a.sig.num_ops(); ++op) {
        int ar = a.sig.arity(op);
        if (ar == 0) {
          int v = a.apply0(op);
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
          continue;
        }
        std::vector<int> args(ar, 0);
        size_t total = pow_size(a.size, ar);
        for (size_t idx = 0; idx < total; ++idx) {
          size_t rem = idx;
          bool all_in = true;
          for (int i = ar - 1; i >= 0; --i) {
            args[i] = (int)(rem % a.size);
            rem /= a.size;
            if (!in[args[i]]) {
              all_in = false;
            }
          }
          if (!all_in) continue;
          int v = a.apply(op, args);
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
        }
      }
    }
  };
  close();
  for (int x = 0; x < a.size; ++x) {
    if (!in[x]) {
      gens.push_back(x);
      in[x] = 1;
      close();
    }
  }
  return gens;
}

bool extend_hom(const FiniteAlgebra& dom, const std::vector<int>& gens,
                const FiniteAlgebra& cod, const std::vector<int>& images,
                std::vector<int>& out_map) {
  // close the graph of gens -> images inside dom x cod; the extension exists
  // iff the closure stays functional and covers dom
  std::vector<int> map(dom.size, -1);
  bool grew = false;
  auto set = [&](int x, int y) -> bool {
    if (map[x] == -1) {
      map[x] = y;
      grew = true;
      return true;
    }
    return map[x] == y;
  };
  for (size_t i = 0; i < gens.size(); ++i)
    if (!set(gens[i], images[i])) return false;
  // fixpoint: repeatedly apply ops to assigned tuples
  grew = true;
  while (grew) {
    grew = false;
    for (int op = 0; op < dom.sig.num_ops(); ++op) {
      int ar = dom.sig.arity(op);
      if (ar == 0) {
        if (!set(dom.apply0(op), cod.apply0(op))) return false;
        continue;
      }
      std::vector<int> args(ar), im(ar);
      size_t total = pow_size(dom.size, ar);
      for (size_t idx = 0; idx < total; ++idx) {
        size_t rem = idx;
        bool all_in = true;
        for (int i = ar - 1; i >= 0; --i) {
          args[i] = (int)(rem % dom.size);
          rem /= dom.size;
          if (map[args[i]] == -1) all_in = false;
        }
        if (!all_in) continue;
        for (int i = 0; i < ar; ++i) im[i] = map[args[i]];
        if (!set(dom.apply(op, args), cod.apply(op, im))) return false;
      }
    }
  }
  for (int x = 0; x < dom.size; ++x)
    if (map[x] == -1) return false;  // gens do not generate dom
  out_map = std::move(map);
  return true;
}

std::vector<Homomorphism> enumerate_homs(const FiniteAlgebra& dom, const FiniteAlgebra& cod,
                                         bool zero_preserving, int zero_dom, int zero_cod,
                                         long long limit) {
  if (!dom.sig.same_as(cod.sig)) throw SignatureMismatch("enumerate_homs: signature mismatch");
  std::vector<int> gens = greedy_generators(dom);
  std::vector<Homomorphism> out;
  if (gens.empty()) {
    // dom generated by constants; at most one hom
    std::vector<int> map;
    if (extend_hom(dom, gens, cod, {}, map)) {
      bool zp = !zero_preserving || map[zero_dom] == zero_cod;
      if (zp) out.push_back({map, zero_preserving});
    }
    return out;
  }
  long long total = 1;
  for (size_t i = 0; i < gens.size(); ++i) {
    total *= cod.size;
    if (total > limit) throw LimitExceeded("enumerate_homs: search space exceeds limit");
  }
  std::vector<int> images(gens.size(), 0);
  for (long long it = 0; it < total; ++it) {
    long long rem = it;
    for (int i = (int)images.size() - 1; i >= 0; --i) {
      images[i] = (int)(rem % cod.size);
      rem /= cod.size;
    }
    std::vector<int> map;
    if (extend_hom(dom, gens, cod, images, map)) {
      if (zero_preserving && map[zero_dom] != zero_cod) continue;
      if ((long long)out.size() >= limit) throw LimitExceeded("enumerate_homs: too many results");
      out.push_back({map, zero_preserving});
    }
  }
  return out;
}

bool find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::vector<int>& out_map) {
  if (a.size != b.size || !a.sig.same_as(b.sig)) return false;
  auto homs = enumerate_homs(a, b, false, 0, 0, 2000000);
  for (auto& h : homs) {
    std::vector<char> seen(b.size, 0);
    bool bij = true;
    for (int v : h.map) {
      if (seen[v]) {
        bij = false;
        break;
      }
      seen[v] = 1;
    }
    if (bij) {
      out_map = h.map;
      return true;
    }
  }
  return false;
}

// --- builders ---------------------------------------------------------------

namespace {

Signature group_signature() {
  Signature s;
  s.symbols = {{"mul", 2}, {"inv", 1}, {"e", 0}};
  return s;
}

FiniteAlgebra group_from_mul(const std::string& name, int n,
                             const std::vector<std::vector<int>>& mul) {
  FiniteAlgebra g;
  g.name = name;
  g.sig = group_signature();
  g.size = n;
  g.tables.resize(3);
  g.tables[0].resize((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.tables[0][(size_t)i * n + j] = mul[i][j];
  // identity
  int e = -1;
  for (int cand = 0; cand < n && e < 0; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (mul[cand][x] != x || mul[x][cand] != x) ok = false;
    if (ok) e = cand;
  }
  if (e < 0) throw Error("group_from_mul: no identity");
  g.tables[2] = {e};
  g.tables[1].resize(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul[x][y] == e && mul[y][x] == e) {
        g.tables[1][x] = y;
        break;
      }
    if (g.tables[1][x] < 0) throw Error("group_from_mul: no inverse for element");
  }
  return g;
}

}  // namespace

FiniteAlgebra cyclic_group(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return group_from_mul("z" + std::to_string(n), n, mul);
}

FiniteAlgebra klein_four() {
  auto p = direct_product(cyclic_group(2), cyclic_group(2));
  p.algebra.name = "z2z2";
  return p.algebra;
}

FiniteAlgebra dihedral_group4() {
  // r^i s^j, index i + 4j; s r s = r^{-1}
  int n = 8;
  auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (j & 1); };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i s^j)(r^i2 s^j2) = r^{i + (-1)^j i2} s^{j+j2}
          int ii = j ? i - i2 : i + i2;
          mul[idx(i, j)][idx(i2, j2)] = idx(ii, j + j2);
        }
  return group_from_mul("d4", n, mul);
}

FiniteAlgebra quaternion_group() {
  // 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
  auto neg = [](int x) { return x ^ 1; };
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  // base table on {1,i,j,k} with signs
  auto base = [&](int a, int b, int& sign) -> int {
    // a,b in {0:1, 1:i, 2:j, 3:k}
    static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
    sign = sgn[a][b];
    return tbl[a][b];
  };
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int a = x >> 1, b = y >> 1;
      int s;
      int c = base(a, b, s);
      int sign = ((x & 1) ? -1 : 1) * ((y & 1) ? -1 : 1) * s;
      mul[x][y] = (c << 1) | (sign < 0 ? 1 : 0);
    }
  (void)neg;
  return group_from_mul("q8", 8, mul);
}

namespace {

FiniteAlgebra perm_group(const std::string& name, int deg, bool even_only) {
  std::vector<std::array<int, 5>> perms;
  std::array<int, 5> p{};
  for (int i = 0; i < deg; ++i) p[i] = i;
  do {
    int inv_count = 0;
    for (int i = 0; i < deg; ++i)
      for (int j = i + 1; j < deg; ++j)
        if (p[i] > p[j]) ++inv_count;
    if (!even_only || inv_count % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + deg));
  int n = (int)perms.size();
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  auto find = [&](const std::array<int, 5>& q) {
    for (int i = 0; i < n; ++i)
      if (std::equal(q.begin(), q.begin() + deg, perms[i].begin())) return i;
    throw Error("perm_group: composition left the set");
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 5> q{};
      for (int k = 0; k < deg; ++k) q[k] = perms[i][perms[j][k]];
      mul[i][j] = find(q);
    }
  return group_from_mul(name, n, mul);
}

}  // namespace

FiniteAlgebra symmetric_group3() { return perm_group("s3", 3, false); }
FiniteAlgebra alternating_group5() { return perm_group("a5", 5, true); }

FiniteAlgebra expand_with_unary(const FiniteAlgebra& a, const std::string& opname,
                                const std::vector<int>& table) {
  FiniteAlgebra b = a;
  if (b.sig.index_of(opname) >= 0) throw Error("expand_with_unary: symbol exists");
  b.sig.symbols.push_back({opname, 1});
  b.tables.push_back(table);
  b.validate();
  return b;
}

Term group_difference_term(const Signature& sig) {
  int mul = sig.index_of("mul"), inv = sig.index_of("inv");
  if (mul < 0 || inv < 0) throw Error("group_difference_term: signature lacks mul/inv");
  Term x = Term::variable("x"), y = Term::variable("y"), z = Term::variable("z");
  return Term::apply(mul, {x, Term::apply(mul, {Term::apply(inv, {y}), z})});
}

}  // namespace ualg
