#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtop/cyclotomic.hpp"
#include "qtop/io.hpp"
#include "qtop/pairing.hpp"
#include "qtop/specialization.hpp"

#include <random>

using namespace qtop;

namespace {

LoopWord random_loop(std::mt19937& rng, const PairingParams& params, int max_letters = 5) {
  std::uniform_int_distribution<int> nletters(0, max_letters);
  std::uniform_int_distribution<int> kind_dist(0, 4);
  std::uniform_int_distribution<int> exp(-3, 3);
  LoopWord loop;
  const int k = nletters(rng);
  for (int t = 0; t < k; ++t) {
    LoopKind kind = static_cast<LoopKind>(kind_dist(rng));
    int index = 0;
    if (kind == LoopKind::sigma) {
      if (params.n == 0) continue;
      index = std::uniform_int_distribution<int>(1, params.n)(rng);
    } else if (kind != LoopKind::delta) {
      if (params.l == 0) continue;
      index = std::uniform_int_distribution<int>(1, params.l)(rng);
    }
    int e = exp(rng);
    if (e == 0) e = 1;
    loop.letters.push_back({kind, index, e});
  }
  return loop;
}

PairingData random_pairing(std::mt19937& rng) {
  std::uniform_int_distribution<int> nd(0, 4), ld(0, 3);
  PairingData data;
  data.params.n = nd(rng);
  data.params.k = data.params.n == 0 ? 0 : std::uniform_int_distribution<int>(0, data.params.n)(rng);
  data.params.l = ld(rng);
  std::uniform_int_distribution<int> npoints(0, 6), sign(0, 1);
  const int k = npoints(rng);
  for (int t = 0; t < k; ++t)
    data.points.push_back({sign(rng) ? 1 : -1, random_loop(rng, data.params)});
  return data;
}

}  // namespace

TEST_CASE("single-letter local system values") {
  const PairingParams params{3, 0, 2};
  const VarContext ctx = VarContext::xyd(3, 2);
  CHECK(local_system_eval({{{LoopKind::sigma, 1, 1}}}, params) == LaurentPoly::x(ctx, 1, 2));
  CHECK(local_system_eval({{{LoopKind::delta, 0, 1}}}, params) == -LaurentPoly::d(ctx));
  CHECK(local_system_eval({{{LoopKind::eta, 2, 1}}}, params) == LaurentPoly::y(ctx, 2));
  CHECK(local_system_eval({{{LoopKind::gamma, 1, 1}}}, params) == LaurentPoly::y(ctx, 1, 2));
  CHECK(local_system_eval({{{LoopKind::gamma_bar, 1, 1}}}, params) == LaurentPoly::y(ctx, 1, -2));
  CHECK(local_system_eval({}, params) == LaurentPoly::constant(ctx, 1));
  CHECK_THROWS_AS(local_system_eval({{{LoopKind::sigma, 4, 1}}}, params), DomainError);
  CHECK_THROWS_AS(local_system_eval({{{LoopKind::eta, 3, 1}}}, params), DomainError);
}

TEST_CASE("orientation flip on the last k punctures") {
  const PairingParams params{4, 2, 0};
  const VarContext ctx = VarContext::xyd(4, 0);
  CHECK(local_system_eval({{{LoopKind::sigma, 2, 1}}}, params) == LaurentPoly::x(ctx, 2, 2));
  CHECK(local_system_eval({{{LoopKind::sigma, 3, 1}}}, params) == LaurentPoly::x(ctx, 3, -2));
  // with k = n every sigma letter lands on a negative exponent
  const PairingParams all{4, 4, 0};
  for (int i = 1; i <= 4; ++i) {
    const LaurentPoly m = local_system_eval({{{LoopKind::sigma, i, 2}}}, all);
    CHECK(m == LaurentPoly::x(ctx, i, -4));
  }
}

TEST_CASE("delta sign bookkeeping") {
  const PairingParams params{1, 0, 0};
  const VarContext ctx = VarContext::xyd(1, 0);
  // (-d)^2 = d^2
  CHECK(local_system_eval({{{LoopKind::sigma, 1, 1}, {LoopKind::delta, 0, 2}}}, params) ==
        LaurentPoly::x(ctx, 1, 2) * LaurentPoly::d(ctx, 2));
  CHECK(local_system_eval({{{LoopKind::delta, 0, -1}}}, params) == -LaurentPoly::d(ctx, -1));
  CHECK(local_system_eval({{{LoopKind::delta, 0, 3}}}, params) == -LaurentPoly::d(ctx, 3));
}

TEST_CASE("pairing evaluation") {
  SUBCASE("empty data evaluates to zero") {
    PairingData data;
    data.params = {2, 0, 1};
    CHECK(pairing_evaluate(data).is_zero());
  }
  SUBCASE("two eta points give y - y^{-1}") {
    PairingData data;
    data.params = {0, 0, 1};
    data.points.push_back({1, {{{LoopKind::eta, 1, 1}}}});
    data.points.push_back({-1, {{{LoopKind::eta, 1, -1}}}});
    const VarContext ctx = VarContext::xyd(0, 1);
    CHECK(pairing_evaluate(data) == LaurentPoly::y(ctx, 1) - LaurentPoly::y(ctx, 1, -1));
  }
  SUBCASE("signs multiply the monomials") {
    PairingData data;
    data.params = {1, 0, 0};
    data.points.push_back({1, {{{LoopKind::sigma, 1, 1}, {LoopKind::delta, 0, 2}}}});
    const VarContext ctx = VarContext::xyd(1, 0);
    CHECK(pairing_evaluate(data) == LaurentPoly::x(ctx, 1, 2) * LaurentPoly::d(ctx, 2));
  }
}

TEST_CASE("local system is a monoid homomorphism") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 400; ++trial) {
    PairingParams params{4, 2, 3};
    LoopWord a = random_loop(rng, params), b = random_loop(rng, params);
    LoopWord ab;
    ab.letters = a.letters;
    ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
    CHECK(local_system_eval(ab, params) ==
          local_system_eval(a, params) * local_system_eval(b, params));
    // abelian: order of letters is irrelevant
    LoopWord ba;
    ba.letters = b.letters;
    ba.letters.insert(ba.letters.end(), a.letters.begin(), a.letters.end());
    CHECK(local_system_eval(ab, params) == local_system_eval(ba, params));
  }
}

TEST_CASE("pairing is additive and sign-equivariant") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 400; ++trial) {
    PairingData a = random_pairing(rng);
    PairingData b;
    b.params = a.params;
    for (int t = 0; t < 3; ++t) b.points.push_back({1, random_loop(rng, a.params)});
    PairingData joined;
    joined.params = a.params;
    joined.points = a.points;
    joined.points.insert(joined.points.end(), b.points.begin(), b.points.end());
    CHECK(pairing_evaluate(joined) == pairing_evaluate(a) + pairing_evaluate(b));

    PairingData flipped = a;
    for (PairingPoint& pt : flipped.points) pt.sign = -pt.sign;
    CHECK(pairing_evaluate(flipped) == -pairing_evaluate(a));
  }
}

TEST_CASE("Kirby circle data") {
  SUBCASE("l = 1 evaluates to y - y^{-1}") {
    const VarContext ctx = VarContext::xyd(0, 1);
    CHECK(pairing_evaluate(kirby_circle_data(1)) ==
          LaurentPoly::y(ctx, 1) - LaurentPoly::y(ctx, 1, -1));
  }
  SUBCASE("l = 2 expands to the four-term product") {
    const VarContext ctx = VarContext::xyd(0, 2);
    const LaurentPoly expect = (LaurentPoly::y(ctx, 1) - LaurentPoly::y(ctx, 1, -1)) *
                               (LaurentPoly::y(ctx, 2) - LaurentPoly::y(ctx, 2, -1));
    const PairingData data = kirby_circle_data(2);
    CHECK(data.points.size() == 4);
    CHECK(pairing_evaluate(data) == expect);
  }
  SUBCASE("product structure for every l <= 3") {
    for (int l = 1; l <= 3; ++l) {
      const VarContext ctx = VarContext::xyd(0, l);
      LaurentPoly expect = LaurentPoly::constant(ctx, 1);
      for (int k = 1; k <= l; ++k)
        expect *= LaurentPoly::y(ctx, k) - LaurentPoly::y(ctx, k, -1);
      CHECK(pairing_evaluate(kirby_circle_data(l)) == expect);
    }
  }
}

TEST_CASE("Kirby circles encode quantum integers") {
  // {1}^{-l} psi(fixture) = prod [N_i] at the root of unity
  for (int level = 2; level <= 6; ++level) {
    const Cyclotomic brace_inv = eval_at_root(quantum_integer(1, QNum::brace), level).inverse();
    for (int l = 1; l <= 3; ++l) {
      const LaurentPoly fixture = pairing_evaluate(kirby_circle_data(l));
      std::vector<int> colours(l, 1);
      while (true) {
        SpecializationSpec spec;
        spec.colours = colours;
        Cyclotomic lhs = eval_at_root(specialize_to_q(fixture, spec), level);
        for (int i = 0; i < l; ++i) lhs *= brace_inv;
        Cyclotomic rhs = Cyclotomic::one(level);
        for (int n : colours) rhs *= eval_at_root(quantum_integer(n, QNum::bracket), level);
        CHECK(lhs == rhs);
        int k = l;
        while (k > 0 && colours[k - 1] == level - 1) colours[--k] = 1;
        if (k == 0) break;
        ++colours[k - 1];
      }
    }
  }
}

TEST_CASE("pairing data JSON round-trip is bit-exact") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    PairingData data = random_pairing(rng);
    const std::string rendered = render_json(pairing_to_json(data));
    PairingData back = pairing_from_json(Json::parse(rendered));
    CHECK(back == data);
    CHECK(render_json(pairing_to_json(back)) == rendered);
  }
}
