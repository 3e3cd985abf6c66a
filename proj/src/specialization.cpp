#include "qtop/specialization.hpp"

namespace qtop {

void SpecializationSpec::validate() const {
  for (int c : colours)
    if (c < 1) throw DomainError("colours must be >= 1");
  for (int c : colouring)
    if (c < 1 || c > l()) throw DomainError("colouring value out of range");
  if (static_cast<int>(representatives.size()) != l())
    throw DomainError("need one representative strand per colour");
  for (int p : representatives)
    if (p < 1 || p > n()) throw DomainError("representative strand out of range");
}

LaurentPoly apply_colouring(const LaurentPoly& p, const SpecializationSpec& spec) {
  spec.validate();
  const VarContext& in = p.ctx();
  if (in.q_mode) throw DomainError("apply_colouring expects the multivariate ring");
  if (in.n_x > spec.n() || in.n_y > spec.l())
    throw DomainError("polynomial uses variables beyond the colouring data");
  VarContext out = VarContext::xyd(spec.l(), spec.l());
  LaurentPoly r(out);
  LaurentPoly::Exps e(out.arity());
  for (const auto& [exps, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (int i = 0; i < in.n_x; ++i) e[spec.colouring[i] - 1] += exps[i];
    for (int j = 0; j < in.n_y; ++j) {
      int target = spec.colouring[spec.representatives[j] - 1];
      e[out.n_x + target - 1] += exps[in.n_x + j];
    }
    e[out.n_x + out.n_y] = exps[in.n_x + in.n_y];
    r.add_term(e, c);
  }
  return r;
}

LaurentPoly specialize_to_q(const LaurentPoly& p, const SpecializationSpec& spec) {
  for (int c : spec.colours)
    if (c < 1) throw DomainError("colours must be >= 1");
  const VarContext& in = p.ctx();
  if (in.q_mode) throw DomainError("specialize_to_q expects the multivariate ring");
  if (in.n_x > spec.l() || in.n_y > spec.l())
    throw DomainError("polynomial has more variables than colours");
  LaurentPoly r(VarContext::q_ring());
  for (const auto& [exps, c] : p.terms()) {
    long qe = 0;
    for (int i = 0; i < in.n_x; ++i) qe += static_cast<long>(exps[i]) * (spec.colours[i] - 1);
    for (int j = 0; j < in.n_y; ++j) qe += static_cast<long>(exps[in.n_x + j]) * spec.colours[j];
    qe += -2L * exps[in.n_x + in.n_y];
    r.add_term({static_cast<int>(qe)}, c);
  }
  return r;
}

}  // namespace qtop
