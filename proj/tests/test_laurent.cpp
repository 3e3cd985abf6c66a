#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtop/cyclotomic.hpp"
#include "qtop/io.hpp"
#include "qtop/laurent.hpp"
#include "qtop/specialization.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace qtop;

namespace {

LaurentPoly random_poly(std::mt19937& rng, const VarContext& ctx, int max_terms = 6,
                        int max_exp = 5, int max_coeff = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  LaurentPoly p(ctx);
  const int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    LaurentPoly::Exps e(ctx.arity());
    for (int& v : e) v = exp(rng);
    p.add_term(e, coeff(rng));
  }
  return p;
}

SpecializationSpec random_spec(std::mt19937& rng, int n, int l) {
  std::uniform_int_distribution<int> colour(1, 5);
  std::uniform_int_distribution<int> comp(1, l);
  SpecializationSpec s;
  for (int i = 0; i < l; ++i) s.colours.push_back(colour(rng));
  for (int i = 0; i < n; ++i) s.colouring.push_back(comp(rng));
  for (int i = 0; i < l; ++i) s.representatives.push_back(1 + i % n);
  return s;
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(1, QNum::bracket) == LaurentPoly::q_constant(1));
  CHECK(quantum_integer(2, QNum::bracket) == LaurentPoly::q_pow(1) + LaurentPoly::q_pow(-1));
  CHECK(quantum_integer(1, QNum::brace) == LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1));
  CHECK(quantum_integer(0, QNum::bracket).is_zero());
  CHECK(quantum_integer(0, QNum::brace).is_zero());
  CHECK_THROWS_AS(quantum_integer(-1, QNum::bracket), DomainError);
  // {N} = {1} * [N]
  for (long n = 0; n <= 8; ++n)
    CHECK(quantum_integer(n, QNum::brace) ==
          quantum_integer(1, QNum::brace) * quantum_integer(n, QNum::bracket));
}

TEST_CASE("canonical form and rendering") {
  LaurentPoly p(VarContext::q_ring());
  p.add_term({2}, 1);
  p.add_term({0}, 1);
  p.add_term({-2}, 1);
  CHECK(p.to_string() == "q^2 + 1 + q^-2");
  p.add_term({2}, -1);  // cancels: no zero term may remain stored
  CHECK(p.terms().size() == 2);
  CHECK(p.to_string() == "1 + q^-2");

  const VarContext ctx = VarContext::xyd(2, 1);
  LaurentPoly m = LaurentPoly::x(ctx, 1, 2) * LaurentPoly::y(ctx, 1, -1) * LaurentPoly::d(ctx, 3);
  m *= Int(-2);
  CHECK(m.to_string() == "-2*x1^2*y1^-1*d^3");
  CHECK(LaurentPoly(VarContext::q_ring()).to_string() == "0");
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(42);
  const VarContext ctx = VarContext::xyd(2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng, ctx), b = random_poly(rng, ctx), c = random_poly(rng, ctx);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("colour change of variables") {
  SpecializationSpec spec;
  spec.colours = {3};
  spec.colouring = {1, 1, 1};
  spec.representatives = {2};
  const VarContext in = VarContext::xyd(3, 1);

  SUBCASE("x3 with C(3)=1 maps to x1") {
    LaurentPoly out = apply_colouring(LaurentPoly::x(in, 3), spec);
    CHECK(out == LaurentPoly::x(VarContext::xyd(1, 1), 1));
  }
  SUBCASE("constants are fixed") {
    CHECK(apply_colouring(LaurentPoly::constant(in, 5), spec) ==
          LaurentPoly::constant(VarContext::xyd(1, 1), 5));
  }
  SUBCASE("x1*x2 with C(1)=C(2)=1 maps to x1^2") {
    LaurentPoly out = apply_colouring(LaurentPoly::x(in, 1) * LaurentPoly::x(in, 2), spec);
    CHECK(out == LaurentPoly::x(VarContext::xyd(1, 1), 1, 2));
  }
  SUBCASE("y reroutes through the representative's colour") {
    LaurentPoly out = apply_colouring(LaurentPoly::y(in, 1), spec);
    CHECK(out == LaurentPoly::y(VarContext::xyd(1, 1), 1));
  }
  SUBCASE("variable index out of range is rejected") {
    const VarContext wide = VarContext::xyd(4, 1);
    CHECK_THROWS_AS(apply_colouring(LaurentPoly::x(wide, 4), spec), DomainError);
  }
}

TEST_CASE("specialisation to one variable") {
  SpecializationSpec spec;
  spec.colours = {2};
  spec.colouring = {1};
  spec.representatives = {1};
  const VarContext ctx = VarContext::xyd(1, 1);
  CHECK(specialize_to_q(LaurentPoly::x(ctx, 1), spec) == LaurentPoly::q_pow(1));
  CHECK(specialize_to_q(LaurentPoly::d(ctx), spec) == LaurentPoly::q_pow(-2));
  CHECK(specialize_to_q(LaurentPoly::x(ctx, 1) * LaurentPoly::y(ctx, 1) * LaurentPoly::d(ctx),
                        spec) == LaurentPoly::q_pow(1));
}

TEST_CASE("both coefficient maps are ring homomorphisms") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    SpecializationSpec spec = random_spec(rng, 3, 2);
    const VarContext in = VarContext::xyd(3, 2);
    LaurentPoly p = random_poly(rng, in), r = random_poly(rng, in);
    CHECK(apply_colouring(p * r, spec) == apply_colouring(p, spec) * apply_colouring(r, spec));
    CHECK(apply_colouring(p + r, spec) == apply_colouring(p, spec) + apply_colouring(r, spec));
    const VarContext mid = VarContext::xyd(2, 2);
    LaurentPoly s = random_poly(rng, mid), t = random_poly(rng, mid);
    CHECK(specialize_to_q(s * t, spec) == specialize_to_q(s, spec) * specialize_to_q(t, spec));
    CHECK(specialize_to_q(s + t, spec) == specialize_to_q(s, spec) + specialize_to_q(t, spec));
  }
}

TEST_CASE("composition: psi(f_C(x_i)) = q^{N_{C(i)}-1}") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    SpecializationSpec spec = random_spec(rng, 4, 3);
    const VarContext in = VarContext::xyd(4, 3);
    for (int i = 1; i <= 4; ++i) {
      LaurentPoly composed = specialize_to_q(apply_colouring(LaurentPoly::x(in, i), spec), spec);
      CHECK(composed == LaurentPoly::q_pow(spec.colours[spec.colouring[i - 1] - 1] - 1));
    }
  }
}

TEST_CASE("evaluation at the root of unity") {
  SUBCASE("xi^(2N) = 1") {
    for (int level = 2; level <= 8; ++level)
      CHECK(eval_at_root(LaurentPoly::q_pow(2 * level), level) == Cyclotomic::one(level));
  }
  SUBCASE("{N} vanishes at level N since xi^N = -1") {
    for (int level = 2; level <= 8; ++level)
      CHECK(eval_at_root(quantum_integer(level, QNum::brace), level).is_zero());
  }
  SUBCASE("[2] at level 3 embeds to 1") {
    Cyclotomic v = eval_at_root(quantum_integer(2, QNum::bracket), 3);
    CHECK(std::abs(v.embed() - 1.0) < 1e-12);
  }
  SUBCASE("level below 2 is rejected") {
    CHECK_THROWS_AS(eval_at_root(LaurentPoly::q_pow(1), 1), DomainError);
  }
}

TEST_CASE("cyclotomic inverse") {
  CHECK(Cyclotomic::one(5).inverse() == Cyclotomic::one(5));
  for (int level = 2; level <= 7; ++level) {
    CHECK(Cyclotomic::xi_pow(level, 1).inverse() == Cyclotomic::xi_pow(level, -1));
    Cyclotomic two = eval_at_root(quantum_integer(2, QNum::bracket), level);
    if (!two.is_zero()) CHECK(two.inverse() * two == Cyclotomic::one(level));
  }
  CHECK_THROWS_AS(Cyclotomic::zero(4).inverse(), DomainError);
}

TEST_CASE("cyclotomic arithmetic is commutative and associative") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> expd(-15, 15);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int level = 2; level <= 6; ++level) {
    for (int trial = 0; trial < 40; ++trial) {
      auto rand_cyc = [&] {
        Cyclotomic c = Cyclotomic::zero(level);
        for (int t = 0; t < 4; ++t)
          c += Cyclotomic::xi_pow(level, expd(rng)) * Cyclotomic::from_int(level, coeff(rng));
        return c;
      };
      Cyclotomic a = rand_cyc(), b = rand_cyc(), c = rand_cyc();
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("exact evaluation tracks the complex embedding") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> level_dist(2, 12);
  std::uniform_int_distribution<int> exp(-50, 50);
  std::uniform_int_distribution<int> coeff(-99, 99);
  for (int trial = 0; trial < 120; ++trial) {
    const int level = level_dist(rng);
    LaurentPoly p(VarContext::q_ring());
    for (int t = 0; t < 8; ++t) p.add_term({exp(rng)}, coeff(rng));
    const std::complex<double> direct =
        p.eval_complex({std::polar(1.0, std::numbers::pi / level)});
    const std::complex<double> exact = eval_at_root(p, level).embed();
    CHECK(std::abs(direct - exact) < 1e-9);
  }
}

TEST_CASE("polynomial JSON round-trip in stable order") {
  std::mt19937 rng(23);
  for (const VarContext& ctx : {VarContext::q_ring(), VarContext::xyd(2, 1)}) {
    for (int trial = 0; trial < 30; ++trial) {
      LaurentPoly p = random_poly(rng, ctx);
      const Json j = laurent_to_json(p);
      CHECK(laurent_from_json(j) == p);
      CHECK(render_json(j) == render_json(laurent_to_json(laurent_from_json(j))));
    }
  }
}
