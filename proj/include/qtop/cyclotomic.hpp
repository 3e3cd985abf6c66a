#pragma once

#include "qtop/laurent.hpp"
#include "qtop/numeric.hpp"

#include <complex>
#include <string>
#include <vector>

namespace qtop {

// Exact element of Q(xi) where xi = e^{2*pi*i/(2N)} for a level N >= 2.
// Stored as a rational-coefficient representative reduced modulo the
// 2N-th cyclotomic polynomial, so the degree is < phi(2N).
class Cyclotomic {
 public:
  Cyclotomic() : level_(0) {}

  static Cyclotomic zero(int level);
  static Cyclotomic one(int level);
  static Cyclotomic from_int(int level, Int v);
  static Cyclotomic from_rat(int level, Rat v);
  // xi^e for any integer e, reduced via xi^{2N} = 1.
  static Cyclotomic xi_pow(int level, long e);

  // phi(2N): the degree of the field extension.
  static int field_degree(int level);
  // Coefficients of the 2N-th cyclotomic polynomial, constant term first.
  static const std::vector<Int>& minimal_polynomial(int level);

  int level() const { return level_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  bool operator==(const Cyclotomic& o) const;

  // Exact inverse via the extended Euclidean algorithm against the minimal
  // polynomial. Throws DomainError on zero.
  Cyclotomic inverse() const;

  // Image under the complex embedding xi -> e^{2*pi*i/(2N)}.
  std::complex<double> embed() const;

  // Galois conjugate xi -> xi^{-1} (complex conjugation under the embedding).
  Cyclotomic bar() const;

  std::string to_string() const;

 private:
  void check_level(const Cyclotomic& o) const;
  void reduce(std::vector<Rat>& v) const;

  int level_;
  std::vector<Rat> c_;  // size phi(2N), index k holds the xi^k coefficient
};

// Image of a single-variable Laurent polynomial under q -> xi at the given
// level; exponents are first folded with xi^{2N} = 1, then the result is
// reduced modulo the cyclotomic polynomial. Requires level >= 2.
Cyclotomic eval_at_root(const LaurentPoly& p, int level);

}  // namespace qtop
