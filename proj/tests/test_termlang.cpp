#include "doctest.h"
#include "ualg/algebra.hpp"
#include "ualg/signature.hpp"

using namespace ualg;

TEST_SUITE_BEGIN("termlang");

TEST_CASE("parse_signature basics") {
  Signature sig = Signature::parse("mul/2, inv/1, e/0");
  CHECK(sig.num_ops() == 3);
  CHECK(sig.index_of("mul") == 0);
  CHECK(sig.arity(0) == 2);
  CHECK(sig.arity(1) == 1);
  CHECK(sig.arity(2) == 0);

  Signature m3 = Signature::parse("m/3");
  CHECK(m3.num_ops() == 1);
  CHECK(m3.arity(0) == 3);
  CHECK(m3.difference_symbol.has_value());

  CHECK_THROWS_AS(Signature::parse("mul/2, mul/1"), ParseError);
}

TEST_CASE("parse_term basics") {
  Signature sig = Signature::parse("m/3, mul/2, inv/1, e/0");
  Term t = Term::parse("m(x,x,y)", sig);
  CHECK(!t.is_variable());
  CHECK(t.symbol() == sig.index_of("m"));
  CHECK(t.children().size() == 3);
  CHECK(t.children()[0].is_variable());
  CHECK(t.children()[0].var_name() == "x");

  Term nested = Term::parse("mul(x,inv(x))", sig);
  CHECK(nested.children()[1].symbol() == sig.index_of("inv"));

  CHECK_THROWS_AS(Term::parse("m(x,y)", sig), ParseError);
  CHECK_THROWS_AS(Term::parse("zzz(x)", sig), ParseError);

  // constants may be bare or applied
  Term e1 = Term::parse("e", sig);
  Term e2 = Term::parse("e()", sig);
  CHECK(e1.equals(e2));
}

TEST_CASE("parse/print round trip") {
  Signature sig = Signature::parse("m/3, mul/2, inv/1, e/0");
  for (const char* txt : {"m(x,x,y)", "mul(x,inv(mul(y,e)))", "x", "mul(e,e)"}) {
    Term t = Term::parse(txt, sig);
    Term back = Term::parse(t.print(sig), sig);
    CHECK(back.equals(t));
  }
}

TEST_CASE("eval_term difference term on Z4") {
  FiniteAlgebra z4 = cyclic_group(4);
  Term m = group_difference_term(z4.sig);
  // x - y + z at (1,3,2) is 0
  CHECK(eval_term(m, z4, {{"x", 1}, {"y", 3}, {"z", 2}}) == 0);
  // variables evaluate to themselves
  Term x = Term::parse("x", z4.sig);
  CHECK(eval_term(x, z4, {{"x", 3}}) == 3);
  CHECK_THROWS_AS(eval_term(x, z4, {{"y", 0}}), Error);
  // idempotent element stays fixed under any term
  Term t = Term::parse("mul(x,mul(x,inv(x)))", z4.sig);
  CHECK(eval_term(t, z4, {{"x", 0}}) == 0);
}

TEST_CASE("term_operation tables") {
  FiniteAlgebra z2 = cyclic_group(2);
  FiniteAlgebra z3 = cyclic_group(3);
  // identity table
  Term x = Term::parse("x", z2.sig);
  CHECK(term_operation(x, z2, {"x"}) == std::vector<int>{0, 1});
  // doubling in Z3
  Term dbl = Term::parse("mul(x,x)", z3.sig);
  CHECK(term_operation(dbl, z3, {"x"}) == std::vector<int>{0, 2, 1});
  // m(x,y,z) = x+y+z over Z2 (inv is identity there)
  Term m = group_difference_term(z2.sig);
  std::vector<int> table = term_operation(m, z2, {"x", "y", "z"});
  REQUIRE(table.size() == 8);
  for (int x2 = 0; x2 < 2; ++x2)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) CHECK(table[x2 * 4 + y * 2 + z] == (x2 + y + z) % 2);
}

TEST_CASE("term_operation respects composition") {
  FiniteAlgebra z3 = cyclic_group(3);
  // f(g(x), y) with f = mul, g = inv
  Term comp = Term::parse("mul(inv(x),y)", z3.sig);
  std::vector<int> table = term_operation(comp, z3, {"x", "y"});
  std::vector<int> ginv = term_operation(Term::parse("inv(x)", z3.sig), z3, {"x"});
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(table[x * 3 + y] == z3.apply2(0, ginv[x], y));
}

TEST_CASE("eval invariant under consistent renaming") {
  FiniteAlgebra z4 = cyclic_group(4);
  Term t1 = Term::parse("mul(a,inv(b))", z4.sig);
  Term t2 = Term::parse("mul(u,inv(v))", z4.sig);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(eval_term(t1, z4, {{"a", a}, {"b", b}}) == eval_term(t2, z4, {{"u", a}, {"v", b}}));
}

TEST_CASE("identity parsing and satisfaction") {
  FiniteAlgebra z4 = cyclic_group(4);
  FiniteAlgebra s3 = symmetric_group3();
  Identity comm = Identity::parse("mul(x,y) = mul(y,x)", z4.sig);
  CHECK(satisfies(z4, comm));
  CHECK(!satisfies(s3, comm));
  Identity refl = Identity::parse("x = x", z4.sig);
  CHECK(satisfies(z4, refl));
  CHECK(satisfies(s3, refl));
}

TEST_SUITE_END();
