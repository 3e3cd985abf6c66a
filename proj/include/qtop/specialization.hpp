#pragma once

#include "qtop/laurent.hpp"

#include <vector>

namespace qtop {

// Colouring data shared by the two coefficient maps: l colours N_1..N_l,
// a total colouring C of the n strands, and one representative strand per
// colour (used to reroute the y-variables).
struct SpecializationSpec {
  std::vector<int> colours;          // N_1..N_l, each >= 1
  std::vector<int> colouring;        // C[i] in 1..l for strand i+1
  std::vector<int> representatives;  // strand index in 1..n per colour

  int n() const { return static_cast<int>(colouring.size()); }
  int l() const { return static_cast<int>(colours.size()); }
  void validate() const;
};

// Change of variables induced by the colouring: x_i -> x_{C(i)},
// y_j -> y_{C(rep_j)}, d fixed. Ring homomorphism from the n-variable ring
// into the l-variable ring.
LaurentPoly apply_colouring(const LaurentPoly& p, const SpecializationSpec& spec);

// Specialisation to one variable: x_i -> q^{N_i - 1}, y_i -> q^{N_i},
// d -> q^{-2}. Expects a polynomial already in the post-colouring ring
// (at most l x-variables and l y-variables).
LaurentPoly specialize_to_q(const LaurentPoly& p, const SpecializationSpec& spec);

}  // namespace qtop
