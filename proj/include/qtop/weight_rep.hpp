#pragma once

#include "qtop/braid.hpp"
#include "qtop/laurent.hpp"

#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace qtop {

// The braid representation is generated over an abstract coefficient ring
// that only needs integer powers of q; the exact ring is Z[q^±1], the
// numeric ring is complex doubles at a fixed unit-modulus q. Running the
// same generator formulas through both gives an end-to-end float
// cross-check of the exact pipeline.
struct ExactQRing {
  using Scalar = LaurentPoly;
  Scalar zero() const { return LaurentPoly(VarContext::q_ring()); }
  Scalar one() const { return LaurentPoly::q_constant(1); }
  Scalar from_int(long v) const { return LaurentPoly::q_constant(v); }
  Scalar q_pow(long e) const { return LaurentPoly::q_pow(e); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
};

struct NumericQRing {
  std::complex<double> q;
  using Scalar = std::complex<double>;
  Scalar zero() const { return 0.0; }
  Scalar one() const { return 1.0; }
  Scalar from_int(long v) const { return static_cast<double>(v); }
  Scalar q_pow(long e) const {
    Scalar base = e < 0 ? 1.0 / q : q;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Scalar r = 1.0;
    while (k) {
      if (k & 1ul) r *= base;
      base *= base;
      k >>= 1ul;
    }
    return r;
  }
  static bool is_zero(const Scalar& s) { return s == 0.0; }
};

// [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n} in an arbitrary ring.
template <class Ring>
typename Ring::Scalar ring_qint(const Ring& ring, long n) {
  auto r = ring.zero();
  for (long i = 0; i < n; ++i) r = r + ring.q_pow(n - 1 - 2 * i);
  return r;
}

// Balanced Gaussian binomial [n; m] = [n]!/([m]![n-m]!) by the recurrence
// [n; m] = q^{n-m} [n-1; m-1] + q^{-m} [n-1; m], which stays division-free.
template <class Ring>
typename Ring::Scalar ring_qbinom(const Ring& ring, long n, long m) {
  if (m < 0 || m > n) return ring.zero();
  std::vector<typename Ring::Scalar> row(static_cast<size_t>(n) + 1, ring.zero());
  row[0] = ring.one();
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min(i, m); j >= 1; --j)
      row[j] = ring.q_pow(i - j) * row[j - 1] + ring.q_pow(-j) * row[j];
  }
  return row[m];
}

// One generator block of the braid representation: the positive block maps
// V_a ⊗ V_b -> V_b ⊗ V_a on weight bases v_0..v_{a-1}, v_0..v_{b-1} by
//
//   v_i ⊗ v_j  ->  sum_m  q^{E(i+m, j-m) + m(m-1)/2} (q - q^{-1})^m
//                         [j; m] prod_{t=0}^{m-1} [b-j+t]   v_{j-m} ⊗ v_{i+m}
//
// with E(s, t) = 2st - s(b-1) - t(a-1) and 0 <= m <= min(j, a-1-i); the
// inverse block is the exact inverse of the positive block on swapped
// colours. The normalisation keeps every entry in Z[q^±1], makes the
// one-dimensional colour act trivially, and closes the unknot to [N]_q.
template <class Ring>
struct RMatrixBlock {
  struct Entry {
    int first_out;   // index in V_b
    int second_out;  // index in V_a
    typename Ring::Scalar coeff;
  };

  int colour_first = 1;   // a
  int colour_second = 1;  // b
  bool inverse = false;
  std::vector<std::vector<Entry>> entries;  // indexed by i * colour_second + j

  const std::vector<Entry>& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * colour_second + j];
  }
};

template <class Ring>
RMatrixBlock<Ring> r_matrix(int a, int b, bool inverse, const Ring& ring) {
  if (a < 1 || b < 1) throw DomainError("r_matrix: colours must be >= 1");
  RMatrixBlock<Ring> block;
  block.colour_first = a;
  block.colour_second = b;
  block.inverse = inverse;
  block.entries.resize(static_cast<size_t>(a) * b);
  const auto brace1 = ring.q_pow(1) - ring.q_pow(-1);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      auto& out = block.entries[static_cast<size_t>(i) * b + j];
      if (!inverse) {
        auto factor = ring.one();  // (q - q^{-1})^m prod_t [b-j+t]
        const int mmax = std::min(j, a - 1 - i);
        for (int m = 0; m <= mmax; ++m) {
          if (m > 0) factor = factor * brace1 * ring_qint(ring, b - j + m - 1);
          const long s = i + m, t = j - m;
          const long e = 2 * s * t - s * (b - 1) - t * (a - 1) + static_cast<long>(m) * (m - 1) / 2;
          auto coeff = ring.q_pow(e) * ring_qbinom(ring, j, m) * factor;
          if (!Ring::is_zero(coeff)) out.push_back({static_cast<int>(t), static_cast<int>(s), coeff});
        }
      } else {
        auto factor = ring.one();  // (q - q^{-1})^m prod_t [a-i+t]
        const int mmax = std::min(i, b - 1 - j);
        const long ebar = 2L * i * j - static_cast<long>(j) * (a - 1) - static_cast<long>(i) * (b - 1);
        for (int m = 0; m <= mmax; ++m) {
          if (m > 0) factor = factor * brace1 * ring_qint(ring, a - i + m - 1);
          const long e = -ebar - static_cast<long>(m) * (m - 1) / 2;
          auto coeff = ring.q_pow(e) * ring_qbinom(ring, i, m) * factor;
          if (m % 2 == 1) coeff = coeff * ring.from_int(-1);
          if (!Ring::is_zero(coeff)) out.push_back({j + m, i - m, coeff});
        }
      }
    }
  }
  return block;
}

// Multi-indices (i_1..i_n) with 0 <= i_k <= C_k - 1, in lexicographic order.
std::vector<std::vector<int>> enumerate_weight_indices(const std::vector<int>& colours);

// The braid action on V_{C_1} ⊗ ... ⊗ V_{C_n}, applied slot-wise letter by
// letter; never materialised as a dense matrix. Immutable after
// construction, safe to share between workers.
template <class Ring>
class BraidRepT {
 public:
  using Scalar = typename Ring::Scalar;
  using MultiIndex = std::vector<int>;
  using SparseVec = std::map<MultiIndex, Scalar>;

  BraidRepT(BraidWord word, std::vector<int> colours, Ring ring)
      : word_(std::move(word)), colours_(std::move(colours)), ring_(std::move(ring)) {
    word_.validate();
    if (static_cast<int>(colours_.size()) != word_.strands)
      throw ParseError("need one colour per strand");
    for (int c : colours_)
      if (c < 1) throw ParseError("strand colours must be >= 1");
    permutation_ = word_.permutation();
    for (int s = 0; s < word_.strands; ++s)
      if (colours_[permutation_[s]] != colours_[s])
        throw ParseError("colouring is not consistent with the braid closure");
    // collect the generator blocks the word needs
    std::vector<int> cur = colours_;
    for (int letter : word_.word) {
      int k = std::abs(letter) - 1;
      key_t key{cur[k], cur[k + 1], letter < 0};
      if (!blocks_.count(key)) blocks_.emplace(key, r_matrix(cur[k], cur[k + 1], letter < 0, ring_));
      std::swap(cur[k], cur[k + 1]);
    }
  }

  const BraidWord& word() const { return word_; }
  const std::vector<int>& colours() const { return colours_; }
  const std::vector<int>& slot_permutation() const { return permutation_; }
  const Ring& ring() const { return ring_; }

  SparseVec apply(SparseVec v) const {
    std::vector<int> cur = colours_;
    for (int letter : word_.word) {
      const int k = std::abs(letter) - 1;
      const auto& block = blocks_.at(key_t{cur[k], cur[k + 1], letter < 0});
      SparseVec next;
      for (const auto& [idx, coeff] : v) {
        for (const auto& entry : block.at(idx[k], idx[k + 1])) {
          MultiIndex out = idx;
          out[k] = entry.first_out;
          out[k + 1] = entry.second_out;
          auto it = next.find(out);
          if (it == next.end())
            next.emplace(std::move(out), coeff * entry.coeff);
          else
            it->second = it->second + coeff * entry.coeff;
        }
      }
      v = std::move(next);
      std::swap(cur[k], cur[k + 1]);
    }
    return v;
  }

  Scalar diagonal_entry(const MultiIndex& idx) const {
    check_index(idx);
    SparseVec v;
    v.emplace(idx, ring_.one());
    v = apply(std::move(v));
    auto it = v.find(idx);
    return it == v.end() ? ring_.zero() : it->second;
  }

  void check_index(const MultiIndex& idx) const {
    if (idx.size() != colours_.size()) throw DomainError("multi-index arity mismatch");
    for (size_t k = 0; k < idx.size(); ++k)
      if (idx[k] < 0 || idx[k] >= colours_[k])
        throw DomainError("multi-index out of bounds for the strand colours");
  }

 private:
  using key_t = std::tuple<int, int, bool>;

  BraidWord word_;
  std::vector<int> colours_;
  Ring ring_;
  std::vector<int> permutation_;
  std::map<key_t, RMatrixBlock<Ring>> blocks_;
};

using BraidRep = BraidRepT<ExactQRing>;

BraidRep braid_rep(const BraidWord& word, std::vector<int> colours);

// Cap weight attached to a multi-index by the pivotal structure:
// prod_k q^{-((C_k-1) - 2 i_k)}.
template <class Ring>
typename Ring::Scalar pivotal_weight(const Ring& ring, const std::vector<int>& idx,
                                     const std::vector<int>& colours) {
  if (idx.size() != colours.size()) throw DomainError("multi-index arity mismatch");
  long e = 0;
  for (size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] > colours[k] - 1) throw DomainError("multi-index out of bounds");
    e += -(colours[k] - 1) + 2L * idx[k];
  }
  return ring.q_pow(e);
}

LaurentPoly pivotal_weight(const std::vector<int>& idx, const std::vector<int>& colours);

// Diagonal matrix entry of the braid action at one multi-index; the
// state-sum summand before its cap weight.
LaurentPoly state_summand(const BraidRep& rep, const std::vector<int>& idx);

enum class FramingConvention { paper_literal, ribbon };

std::string to_string(FramingConvention c);
FramingConvention framing_convention_from_string(const std::string& s);

struct ColouredJonesResult {
  LaurentPoly value;           // framing_factor * sum of weighted summands
  LaurentPoly framing_factor;  // per-component framing contribution
  FramingConvention convention = FramingConvention::paper_literal;
  // pivotal_weight(i) * diagonal summand per multi-index, lex order
  std::vector<std::pair<std::vector<int>, LaurentPoly>> summands;
};

// Framing exponent per component: (f_i - sum_{j != i} lk_ij)(N_i - 1) in the
// paper_literal convention; (f_i - w_i)(N_i - 1) in the ribbon convention,
// where w_i is the self-writhe and q^{N-1} the twist eigenvalue of the
// integer-normalised braiding.
long framing_exponent(const LinkPresentation& p, const std::vector<int>& colours,
                      FramingConvention convention);

// Unreduced coloured Jones polynomial of the framed link, colour N_i per
// component; the unknot at colour N closes to [N]_q.
ColouredJonesResult coloured_jones(const LinkPresentation& p, const std::vector<int>& colours,
                                   FramingConvention convention);

// Per-strand colours induced by per-component colours.
std::vector<int> strand_colours(const LinkPresentation& p, const std::vector<int>& colours);

// Full pipeline in an arbitrary ring; shared by coloured_jones and the
// numeric cross-check.
template <class Ring>
typename Ring::Scalar coloured_jones_value(const LinkPresentation& p,
                                           const std::vector<int>& colours,
                                           FramingConvention convention, const Ring& ring) {
  std::vector<int> per_strand = strand_colours(p, colours);
  BraidRepT<Ring> rep(p.braid, per_strand, ring);
  auto total = ring.zero();
  for (const auto& idx : enumerate_weight_indices(per_strand))
    total = total + pivotal_weight(ring, idx, per_strand) * rep.diagonal_entry(idx);
  return ring.q_pow(framing_exponent(p, colours, convention)) * total;
}

}  // namespace qtop
