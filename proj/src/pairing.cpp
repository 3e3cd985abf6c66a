#include "qtop/pairing.hpp"

namespace qtop {

LaurentPoly local_system_eval(const LoopWord& loop, const PairingParams& params) {
  if (params.k < 0 || params.k > params.n || params.n < 0 || params.l < 0)
    throw DomainError("bad pairing parameters");
  const VarContext ctx = VarContext::xyd(params.n, params.l);
  LaurentPoly::Exps e(ctx.arity(), 0);
  Int sign = 1;
  for (const LoopLetter& letter : loop.letters) {
    switch (letter.kind) {
      case LoopKind::sigma: {
        if (letter.index < 1 || letter.index > params.n)
          throw DomainError("sigma index out of range");
        const bool reversed = letter.index > params.n - params.k;
        e[letter.index - 1] += (reversed ? -2 : 2) * letter.exponent;
        break;
      }
      case LoopKind::gamma:
        if (letter.index < 1 || letter.index > params.l)
          throw DomainError("gamma index out of range");
        e[params.n + letter.index - 1] += 2 * letter.exponent;
        break;
      case LoopKind::gamma_bar:
        if (letter.index < 1 || letter.index > params.l)
          throw DomainError("gamma_bar index out of range");
        e[params.n + letter.index - 1] -= 2 * letter.exponent;
        break;
      case LoopKind::eta:
        if (letter.index < 1 || letter.index > params.l)
          throw DomainError("eta index out of range");
        e[params.n + letter.index - 1] += letter.exponent;
        break;
      case LoopKind::delta:
        // delta evaluates to d' = -d, so odd powers flip the sign
        e[params.n + params.l] += letter.exponent;
        if (letter.exponent % 2 != 0) sign = -sign;
        break;
    }
  }
  return LaurentPoly::monomial(ctx, std::move(e), sign);
}

LaurentPoly pairing_evaluate(const PairingData& data) {
  const VarContext ctx = VarContext::xyd(data.params.n, data.params.l);
  LaurentPoly total(ctx);
  for (const PairingPoint& pt : data.points) {
    if (pt.sign != 1 && pt.sign != -1) throw DomainError("intersection sign must be ±1");
    LaurentPoly m = local_system_eval(pt.loop, data.params);
    m *= Int(pt.sign);
    total += m;
  }
  return total;
}

PairingData kirby_circle_data(int l, int x_vars) {
  if (l < 1) throw DomainError("kirby_circle_data needs l >= 1");
  if (x_vars < 0) throw DomainError("kirby_circle_data: negative x-variable count");
  PairingData data;
  data.params = PairingParams{x_vars, 0, l};
  // product set {q_1, r_1} x ... x {q_l, r_l}
  for (int mask = 0; mask < (1 << l); ++mask) {
    PairingPoint pt;
    for (int k = 1; k <= l; ++k) {
      const bool take_r = (mask >> (k - 1)) & 1;
      if (take_r) {
        pt.sign = -pt.sign;
        pt.loop.letters.push_back({LoopKind::eta, k, -1});
      } else {
        pt.loop.letters.push_back({LoopKind::gamma, k, 1});
        pt.loop.letters.push_back({LoopKind::eta, k, -1});
      }
    }
    data.points.push_back(std::move(pt));
  }
  return data;
}

std::string to_string(LoopKind kind) {
  switch (kind) {
    case LoopKind::sigma: return "sigma";
    case LoopKind::gamma: return "gamma";
    case LoopKind::gamma_bar: return "gamma_bar";
    case LoopKind::eta: return "eta";
    case LoopKind::delta: return "delta";
  }
  throw InternalError("unreachable loop kind");
}

LoopKind loop_kind_from_string(const std::string& s) {
  if (s == "sigma") return LoopKind::sigma;
  if (s == "gamma") return LoopKind::gamma;
  if (s == "gamma_bar") return LoopKind::gamma_bar;
  if (s == "eta") return LoopKind::eta;
  if (s == "delta") return LoopKind::delta;
  throw ParseError("unknown loop letter kind '" + s + "'");
}

}  // namespace qtop
