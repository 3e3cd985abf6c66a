#pragma once

#include "qtop/numeric.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace qtop {

// Variable context of a Laurent polynomial: either the multivariate ring
// Z[x_1^±..x_n^±, y_1^±..y_l^±, d^±] or the single-variable ring Z[q^±].
// Exponent tuples are laid out as (x_1..x_n, y_1..y_l, d), or (q).
struct VarContext {
  int n_x = 0;
  int n_y = 0;
  bool q_mode = false;

  int arity() const { return q_mode ? 1 : n_x + n_y + 1; }

  static VarContext q_ring() { return VarContext{0, 0, true}; }
  static VarContext xyd(int n_x, int n_y) { return VarContext{n_x, n_y, false}; }

  bool operator==(const VarContext&) const = default;
  std::string describe() const;
};

// Graded lexicographic order on exponent tuples: total degree first, then
// lexicographic. Gives every polynomial one canonical term order.
struct GradedLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class LaurentPoly {
 public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, Int, GradedLexLess>;

  LaurentPoly() : ctx_(VarContext::q_ring()) {}
  explicit LaurentPoly(VarContext ctx) : ctx_(ctx) {}

  static LaurentPoly zero(VarContext ctx) { return LaurentPoly(ctx); }
  static LaurentPoly constant(VarContext ctx, Int c);
  static LaurentPoly monomial(VarContext ctx, Exps exps, Int c);

  // Generators of the multivariate ring; indices are 1-based as in x_1..x_n.
  static LaurentPoly x(VarContext ctx, int i, int exp = 1);
  static LaurentPoly y(VarContext ctx, int j, int exp = 1);
  static LaurentPoly d(VarContext ctx, int exp = 1);

  // Single-variable ring.
  static LaurentPoly q_pow(long e);
  static LaurentPoly q_constant(Int c) { return constant(VarContext::q_ring(), std::move(c)); }

  const VarContext& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Int& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Int& c) { return a *= c; }

  bool operator==(const LaurentPoly& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
  }

  LaurentPoly pow(unsigned e) const;

  // Adds c * X^exps, dropping the term if the sum cancels.
  void add_term(const Exps& exps, const Int& c);

  // Coefficient lookup; zero when absent.
  Int coeff(const Exps& exps) const;

  // Evaluation with one complex value per variable (arity many).
  std::complex<double> eval_complex(const std::vector<std::complex<double>>& values) const;

  // Rendering: terms in descending graded-lex order, e.g. "q^2 + 1 + q^-2"
  // or "2*x1^2*y1^-1 - d".
  std::string to_string() const;

 private:
  void check_same_ctx(const LaurentPoly& o) const;

  VarContext ctx_;
  TermMap terms_;
};

enum class QNum { bracket, brace };

// Quantum numbers in Z[q^±]: bracket gives [N]_q = sum_{i=0}^{N-1} q^{N-1-2i},
// brace gives {N}_q = q^N - q^{-N}. Rejects N < 0.
LaurentPoly quantum_integer(long n, QNum kind);

}  // namespace qtop
