#pragma once

#include "qtop/braid.hpp"
#include "qtop/cyclotomic.hpp"
#include "qtop/weight_rep.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace qtop {

// A surgery presentation of a closed oriented 3-manifold plus the level.
struct SurgeryInput {
  LinkPresentation presentation;
  int level = 3;  // >= 3
  FramingConvention convention = FramingConvention::paper_literal;
  int workers = 1;  // 0 = take QTOP_WORKERS / default
};

// Kirby colour at the level: list of ([N]_xi, N) for N = 1..level-1.
std::vector<std::pair<Cyclotomic, int>> kirby_colour(int level);

// Evaluations of the Kirby-coloured unknot with framing ±1; both run
// through coloured_jones. D = |Delta_+| enters only through the complex
// embedding and is otherwise kept as the exact product Delta_+ Delta_-.
struct Normalizers {
  int level = 0;
  FramingConvention convention = FramingConvention::paper_literal;
  Cyclotomic delta_plus;
  Cyclotomic delta_minus;
  Cyclotomic dd;         // Delta_+ * Delta_-, exact and real positive
  double d_value = 0.0;  // |Delta_+| under the embedding
};

Normalizers normalizers(int level, FramingConvention convention);

// tau as an exact cyclotomic number times a symbolic D^{-b}; only approx()
// collapses D to a float.
struct WrtValue {
  Cyclotomic value;  // numerator * Delta_+^{-b+} * Delta_-^{-b-}
  int d_power = 0;   // b, the zero-eigenvalue count
  Inertia inertia;
  Normalizers norm;

  std::complex<double> approx() const;
  bool exact_equal(const WrtValue& o) const { return value == o.value && d_power == o.d_power; }
};

// Classical route: Kirby-colour sum of coloured Jones evaluations.
WrtValue wrt_direct(const SurgeryInput& input);

// Regrouped route: outer sum over level-bounded multi-indices, inner sum
// over admissible colourings of one dressed diagonal term each.
WrtValue wrt_statesum(const SurgeryInput& input);

// The x-variable dressing of one state-sum term: prod_i x_i^{g_i} *
// prod_k x_{C(k)}^{-1} in the post-colouring ring, where g_i is the
// convention's framing exponent for component i.
LaurentPoly lambda_prefactor(const LinkPresentation& p, FramingConvention convention);

// One dressed, specialised state-sum term: psi(prefactor * y-circle factor *
// d^{-sum i}) times the diagonal braid entry at the multi-index. Rejects
// inadmissible (idx, colours) pairs.
LaurentPoly statesum_term(const SurgeryInput& input, const std::vector<int>& idx,
                          const std::vector<int>& colours);

// Audit tables keyed by (colours, multi-index): the two routes must produce
// identical tables term by term.
using TermKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<TermKey, Cyclotomic> wrt_direct_terms(const SurgeryInput& input);
std::map<TermKey, Cyclotomic> wrt_statesum_terms(const SurgeryInput& input);

// Kirby-move sanity harness: compares tau of L against tau of L with a
// distant ±1-framed unknot appended, by both routes.
struct StabilizationReport {
  FramingConvention convention = FramingConvention::paper_literal;
  WrtValue base, stab_plus, stab_minus;
  bool routes_agree = false;  // wrt_statesum == wrt_direct on all three inputs
  bool plus_equal = false;
  bool minus_equal = false;
};

StabilizationReport stabilization_check(const SurgeryInput& input);

// Extends the presentation by one distant strand with the given framing.
LinkPresentation with_distant_unknot(const LinkPresentation& p, int framing);

// Full pipeline recomputed in complex doubles at q = e^{i pi / level};
// an end-to-end cross-check of the exact value.
std::complex<double> wrt_numeric(const SurgeryInput& input);

}  // namespace qtop
