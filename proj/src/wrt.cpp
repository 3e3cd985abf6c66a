#include "qtop/wrt.hpp"

#include "qtop/pairing.hpp"
#include "qtop/parallel.hpp"
#include "qtop/specialization.hpp"

#include <cmath>
#include <numbers>

namespace qtop {

namespace {

void check_level(int level) {
  if (level < 3) throw DomainError("level must be >= 3, got " + std::to_string(level));
}

// Colour tuples (N_1..N_l) with 1 <= N_i <= level-1, lexicographic.
std::vector<std::vector<int>> enumerate_colour_tuples(int level, int l) {
  std::vector<std::vector<int>> out =
      enumerate_weight_indices(std::vector<int>(l, level - 1));
  for (auto& t : out)
    for (int& v : t) ++v;
  return out;
}

LinkPresentation one_strand_unknot(int framing) {
  BraidWord b;
  b.strands = 1;
  return LinkPresentation::make(b, {framing});
}

SpecializationSpec spec_for(const LinkPresentation& p, const std::vector<int>& colours) {
  SpecializationSpec s;
  s.colours = colours;
  s.colouring.resize(p.braid.strands);
  for (int k = 0; k < p.braid.strands; ++k)
    s.colouring[k] = p.components.component_of_strand[k] + 1;
  s.representatives.resize(p.component_count());
  for (int i = 0; i < p.component_count(); ++i)
    s.representatives[i] = p.components.representatives[i] + 1;
  return s;
}

bool admissible(const std::vector<int>& idx, const std::vector<int>& per_strand) {
  for (size_t k = 0; k < idx.size(); ++k)
    if (idx[k] > per_strand[k] - 1) return false;
  return true;
}

}  // namespace

std::vector<std::pair<Cyclotomic, int>> kirby_colour(int level) {
  check_level(level);
  std::vector<std::pair<Cyclotomic, int>> out;
  for (int n = 1; n <= level - 1; ++n)
    out.emplace_back(eval_at_root(quantum_integer(n, QNum::bracket), level), n);
  return out;
}

Normalizers normalizers(int level, FramingConvention convention) {
  check_level(level);
  Normalizers norm;
  norm.level = level;
  norm.convention = convention;
  norm.delta_plus = Cyclotomic::zero(level);
  norm.delta_minus = Cyclotomic::zero(level);
  const LinkPresentation uplus = one_strand_unknot(1);
  const LinkPresentation uminus = one_strand_unknot(-1);
  for (const auto& [coeff, colour] : kirby_colour(level)) {
    norm.delta_plus +=
        coeff * eval_at_root(coloured_jones(uplus, {colour}, convention).value, level);
    norm.delta_minus +=
        coeff * eval_at_root(coloured_jones(uminus, {colour}, convention).value, level);
  }
  if (norm.delta_plus.is_zero() || norm.delta_minus.is_zero())
    throw DomainError("unusable level/convention pair: a Kirby-coloured unknot evaluates to zero");
  norm.dd = norm.delta_plus * norm.delta_minus;
  const std::complex<double> dd = norm.dd.embed();
  const double dplus_abs = std::abs(norm.delta_plus.embed());
  if (std::abs(dd.imag()) > 1e-9 * std::max(1.0, std::abs(dd.real())) || dd.real() <= 0.0)
    throw InternalError("Delta_+ Delta_- is not real positive");
  norm.d_value = std::sqrt(dd.real());
  if (std::abs(norm.d_value - dplus_abs) > 1e-9 * std::max(1.0, dplus_abs))
    throw InternalError("sqrt(Delta_+ Delta_-) does not match |Delta_+|");
  return norm;
}

std::complex<double> WrtValue::approx() const {
  return value.embed() / std::pow(norm.d_value, d_power);
}

namespace {

WrtValue assemble(const SurgeryInput& input, Cyclotomic numerator) {
  WrtValue out;
  out.norm = normalizers(input.level, input.convention);
  out.inertia = signature(input.presentation.linking_matrix());
  out.d_power = out.inertia.zero;
  Cyclotomic value = std::move(numerator);
  if (out.inertia.positive > 0) {
    const Cyclotomic inv = out.norm.delta_plus.inverse();
    for (int i = 0; i < out.inertia.positive; ++i) value *= inv;
  }
  if (out.inertia.negative > 0) {
    const Cyclotomic inv = out.norm.delta_minus.inverse();
    for (int i = 0; i < out.inertia.negative; ++i) value *= inv;
  }
  out.value = std::move(value);
  return out;
}

}  // namespace

WrtValue wrt_direct(const SurgeryInput& input) {
  check_level(input.level);
  const LinkPresentation& pres = input.presentation;
  const int l = pres.component_count();
  const auto tuples = enumerate_colour_tuples(input.level, l);
  const auto kirby = kirby_colour(input.level);

  auto parts = parallel_map<Cyclotomic>(tuples.size(), input.workers, [&](size_t t) {
    const auto& colours = tuples[t];
    Cyclotomic coeff = Cyclotomic::one(input.level);
    for (int n : colours) coeff *= kirby[n - 1].first;
    return coeff *
           eval_at_root(coloured_jones(pres, colours, input.convention).value, input.level);
  });
  Cyclotomic numerator = Cyclotomic::zero(input.level);
  for (const auto& p : parts) numerator += p;
  return assemble(input, std::move(numerator));
}

LaurentPoly lambda_prefactor(const LinkPresentation& p, FramingConvention convention) {
  const int l = p.component_count();
  const VarContext ctx = VarContext::xyd(l, l);
  LaurentPoly::Exps exps(ctx.arity(), 0);
  for (int i = 0; i < l; ++i) {
    long g = p.framings[i];
    if (convention == FramingConvention::paper_literal) {
      for (int j = 0; j < l; ++j)
        if (j != i) g -= p.lk[i][j];
    } else {
      g -= p.self_writhe[i];
    }
    exps[i] += static_cast<int>(g);
  }
  for (int k = 0; k < p.braid.strands; ++k)
    exps[p.components.component_of_strand[k]] -= 1;
  return LaurentPoly::monomial(ctx, std::move(exps), 1);
}

namespace {

// psi-specialised dressing shared by all multi-indices of one colour tuple:
// psi(prefactor * prod_i (y_i - y_i^{-1})), the y-factor read off the Kirby
// circle intersection points.
LaurentPoly colour_dressing(const LinkPresentation& p, FramingConvention convention,
                            const std::vector<int>& colours) {
  const int l = p.component_count();
  LaurentPoly dressed = lambda_prefactor(p, convention);
  dressed *= pairing_evaluate(kirby_circle_data(l, /*x_vars=*/l));
  return specialize_to_q(dressed, spec_for(p, colours));
}

}  // namespace

LaurentPoly statesum_term(const SurgeryInput& input, const std::vector<int>& idx,
                          const std::vector<int>& colours) {
  check_level(input.level);
  const LinkPresentation& p = input.presentation;
  if (static_cast<int>(idx.size()) != p.braid.strands)
    throw DomainError("multi-index needs one entry per strand");
  if (static_cast<int>(colours.size()) != p.component_count())
    throw DomainError("need one colour per component");
  for (int v : idx)
    if (v < 0 || v > input.level - 2)
      throw DomainError("multi-index entry exceeds the level bound");
  for (int n : colours)
    if (n < 1 || n > input.level - 1) throw DomainError("colour exceeds the level bound");
  const std::vector<int> per_strand = strand_colours(p, colours);
  if (!admissible(idx, per_strand))
    throw DomainError("multi-index is not admissible for the colour tuple");

  // psi(d^{-sum i_k}) * psi(prod_k x_{C(k)}^{-1}) equals the pivotal weight;
  // the x^{-1} part already sits inside the prefactor, so only the d-power
  // remains here.
  long sum_idx = 0;
  for (int v : idx) sum_idx += v;
  BraidRep rep = braid_rep(p.braid, per_strand);
  return colour_dressing(p, input.convention, colours) * LaurentPoly::q_pow(2 * sum_idx) *
         rep.diagonal_entry(idx);
}

namespace {

struct StatesumTables {
  std::map<TermKey, Cyclotomic> terms;  // {1}^{-l}-scaled, evaluated at xi
  Cyclotomic total;                     // sum of terms
};

StatesumTables statesum_tables(const SurgeryInput& input) {
  check_level(input.level);
  const LinkPresentation& p = input.presentation;
  const int l = p.component_count();
  const int n = p.braid.strands;
  const auto tuples = enumerate_colour_tuples(input.level, l);

  const Cyclotomic brace_one = eval_at_root(quantum_integer(1, QNum::brace), input.level);
  Cyclotomic scale = Cyclotomic::one(input.level);
  {
    const Cyclotomic inv = brace_one.inverse();
    for (int i = 0; i < l; ++i) scale *= inv;
  }

  // Per colour tuple: the braid representation and the colour dressing are
  // shared across all admissible multi-indices.
  using PerColour = std::map<std::vector<int>, Cyclotomic>;
  auto per_colour = parallel_map<PerColour>(tuples.size(), input.workers, [&](size_t t) {
    const auto& colours = tuples[t];
    const std::vector<int> per_strand = strand_colours(p, colours);
    const BraidRep rep = braid_rep(p.braid, per_strand);
    const LaurentPoly dressing = colour_dressing(p, input.convention, colours);
    PerColour out;
    for (const auto& idx : enumerate_weight_indices(per_strand)) {
      long sum_idx = 0;
      for (int v : idx) sum_idx += v;
      const LaurentPoly term =
          dressing * LaurentPoly::q_pow(2 * sum_idx) * rep.diagonal_entry(idx);
      out.emplace(idx, eval_at_root(term, input.level) * scale);
    }
    return out;
  });

  StatesumTables tables;
  tables.total = Cyclotomic::zero(input.level);
  // Assemble in the mandated order: multi-index outer, colour tuple inner.
  for (const auto& idx : enumerate_weight_indices(std::vector<int>(n, input.level - 1))) {
    for (size_t t = 0; t < tuples.size(); ++t) {
      if (!admissible(idx, strand_colours(p, tuples[t]))) continue;
      const auto it = per_colour[t].find(idx);
      if (it == per_colour[t].end())
        throw InternalError("admissible multi-index missing from the state-sum table");
      tables.terms.emplace(TermKey{tuples[t], idx}, it->second);
      tables.total += it->second;
    }
  }
  return tables;
}

}  // namespace

WrtValue wrt_statesum(const SurgeryInput& input) {
  return assemble(input, statesum_tables(input).total);
}

std::map<TermKey, Cyclotomic> wrt_statesum_terms(const SurgeryInput& input) {
  return statesum_tables(input).terms;
}

std::map<TermKey, Cyclotomic> wrt_direct_terms(const SurgeryInput& input) {
  check_level(input.level);
  const LinkPresentation& p = input.presentation;
  const auto tuples = enumerate_colour_tuples(input.level, p.component_count());
  const auto kirby = kirby_colour(input.level);
  std::map<TermKey, Cyclotomic> terms;
  for (const auto& colours : tuples) {
    Cyclotomic coeff = Cyclotomic::one(input.level);
    for (int n : colours) coeff *= kirby[n - 1].first;
    const ColouredJonesResult jones = coloured_jones(p, colours, input.convention);
    for (const auto& [idx, contrib] : jones.summands) {
      terms.emplace(TermKey{colours, idx},
                    coeff * eval_at_root(jones.framing_factor * contrib, input.level));
    }
  }
  return terms;
}

LinkPresentation with_distant_unknot(const LinkPresentation& p, int framing) {
  BraidWord extended = p.braid;
  extended.strands += 1;
  std::vector<int> framings = p.framings;
  framings.push_back(framing);
  return LinkPresentation::make(std::move(extended), std::move(framings));
}

StabilizationReport stabilization_check(const SurgeryInput& input) {
  StabilizationReport report;
  report.convention = input.convention;
  SurgeryInput plus = input, minus = input;
  plus.presentation = with_distant_unknot(input.presentation, 1);
  minus.presentation = with_distant_unknot(input.presentation, -1);

  report.base = wrt_direct(input);
  report.stab_plus = wrt_direct(plus);
  report.stab_minus = wrt_direct(minus);
  report.routes_agree = wrt_statesum(input).exact_equal(report.base) &&
                        wrt_statesum(plus).exact_equal(report.stab_plus) &&
                        wrt_statesum(minus).exact_equal(report.stab_minus);
  report.plus_equal = report.stab_plus.exact_equal(report.base);
  report.minus_equal = report.stab_minus.exact_equal(report.base);
  return report;
}

std::complex<double> wrt_numeric(const SurgeryInput& input) {
  check_level(input.level);
  const LinkPresentation& pres = input.presentation;
  const NumericQRing ring{std::polar(1.0, std::numbers::pi / input.level)};
  const int l = pres.component_count();

  std::complex<double> dplus = 0.0, dminus = 0.0;
  const LinkPresentation uplus = one_strand_unknot(1);
  const LinkPresentation uminus = one_strand_unknot(-1);
  for (int n = 1; n <= input.level - 1; ++n) {
    const auto qdim = ring_qint(ring, n);
    dplus += qdim * coloured_jones_value(uplus, {n}, input.convention, ring);
    dminus += qdim * coloured_jones_value(uminus, {n}, input.convention, ring);
  }

  std::complex<double> num = 0.0;
  for (const auto& colours : enumerate_colour_tuples(input.level, l)) {
    std::complex<double> coeff = 1.0;
    for (int n : colours) coeff *= ring_qint(ring, n);
    num += coeff * coloured_jones_value(pres, colours, input.convention, ring);
  }
  const Inertia inertia = signature(pres.linking_matrix());
  const double d = std::abs(dplus);
  std::complex<double> denom = std::pow(d, inertia.zero);
  for (int i = 0; i < inertia.positive; ++i) denom *= dplus;
  for (int i = 0; i < inertia.negative; ++i) denom *= dminus;
  return num / denom;
}

}  // namespace qtop
