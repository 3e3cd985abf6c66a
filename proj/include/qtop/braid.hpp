#pragma once

#include "qtop/numeric.hpp"

#include <string>
#include <vector>

namespace qtop {

// A braid word on n strands: letters are nonzero integers in
// ±{1..n-1}, letter k meaning the generator crossing positions k, k+1
// (positive sign = positive crossing), read bottom to top.
struct BraidWord {
  int strands = 1;
  std::vector<int> word;

  void validate() const;
  // Whitespace-separated signed integers, e.g. "1 1 1". An empty string is
  // the identity braid (needs an explicit strand count).
  static BraidWord parse(int strands, const std::string& text);
  std::string render() const;

  // Position permutation of the closure: perm[s] is the top position reached
  // by the strand entering at bottom position s (0-based).
  std::vector<int> permutation() const;
};

struct ClosureComponents {
  int count = 0;
  std::vector<int> component_of_strand;  // 0-based component id per strand
  std::vector<int> representatives;      // smallest strand (0-based) per component
};

// Components of the braid closure: cycles of the underlying permutation,
// numbered by increasing smallest strand index.
ClosureComponents closure_components(const BraidWord& braid);

// A framed oriented link presented as a braid closure, with the derived
// colouring, linking numbers and per-component self-writhes.
struct LinkPresentation {
  BraidWord braid;
  std::vector<int> framings;  // one per component

  ClosureComponents components;
  std::vector<std::vector<int>> lk;  // symmetric, zero diagonal
  std::vector<int> self_writhe;      // signed self-crossings per component

  static LinkPresentation make(BraidWord braid, std::vector<int> framings);

  int component_count() const { return components.count; }
  // Linking matrix B: diagonal = framings, off-diagonal = lk.
  std::vector<std::vector<Int>> linking_matrix() const;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Inertia&) const = default;
};

// Exact inertia of a symmetric integer matrix, computed over the rationals
// by symmetric Gaussian elimination. Rejects non-symmetric input.
Inertia signature(const std::vector<std::vector<Int>>& m);

struct LinkingMatrixReport {
  std::vector<std::vector<Int>> matrix;
  Inertia inertia;
};

LinkingMatrixReport linking_report(const LinkPresentation& p);

}  // namespace qtop
