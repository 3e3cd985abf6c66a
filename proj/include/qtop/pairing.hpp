#pragma once

#include "qtop/laurent.hpp"

#include <string>
#include <vector>

namespace qtop {

// Letters of a loop class in first homology of the configuration space:
// sigma_i winds a puncture of the first block, gamma_j / gamma_bar_j / eta_j
// wind the auxiliary punctures of colour j, delta is the particle winding.
enum class LoopKind { sigma, gamma, gamma_bar, eta, delta };

struct LoopLetter {
  LoopKind kind;
  int index;     // 1-based; 0 for delta
  int exponent;  // any nonzero integer
  bool operator==(const LoopLetter&) const = default;
};

// Only the abelianised content of a loop matters to the local system, so a
// word is a plain letter list with no relations.
struct LoopWord {
  std::vector<LoopLetter> letters;
  bool operator==(const LoopWord&) const = default;
};

struct PairingParams {
  int n = 0;  // sigma indices range over 1..n
  int k = 0;  // the last k punctures are counted with opposite orientation
  int l = 0;  // gamma/eta indices range over 1..l
  bool operator==(const PairingParams&) const = default;
};

struct PairingPoint {
  int sign = 1;  // +1 or -1
  LoopWord loop;
  bool operator==(const PairingPoint&) const = default;
};

// One signed intersection point list; the input to the pairing evaluator.
struct PairingData {
  PairingParams params;
  std::vector<PairingPoint> points;
  bool operator==(const PairingData&) const = default;
};

// Local-system value of a loop: the monomial
//   sigma_i^e -> x_i^{+2e}  (i <= n-k)   |   x_i^{-2e}  (i > n-k)
//   gamma_j^e -> y_j^{2e},  gamma_bar_j^e -> y_j^{-2e},  eta_j^e -> y_j^{e}
//   delta^e   -> (-1)^e d^e
// in the ring with params.n x-variables and params.l y-variables.
LaurentPoly local_system_eval(const LoopWord& loop, const PairingParams& params);

// Graded intersection pairing: the signed sum of the loop monomials.
LaurentPoly pairing_evaluate(const PairingData& data);

// The 2^l intersection points contributed by l Kirby circles. Point q_k
// carries +y_k (loop gamma_k eta_k^{-1}), point r_k carries -y_k^{-1}
// (sign -1, loop eta_k^{-1}); the product set over k gives data evaluating
// to prod_k (y_k - y_k^{-1}). x_vars places the points in a ring that also
// carries that many x-variables, for folding into a dressed state sum.
PairingData kirby_circle_data(int l, int x_vars = 0);

std::string to_string(LoopKind kind);
LoopKind loop_kind_from_string(const std::string& s);

}  // namespace qtop
