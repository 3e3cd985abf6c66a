#include "qtop/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qtop {

namespace {

// Integer polynomial division, exact: num / den with den monic-leading.
// Both are coefficient vectors, constant term first.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
  if (den.empty() || den.back() == 0) throw InternalError("exact_div: bad divisor");
  if (num.size() < den.size()) throw InternalError("exact_div: degree underflow");
  std::vector<Int> quot(num.size() - den.size() + 1, 0);
  for (size_t i = quot.size(); i-- > 0;) {
    Int q = num[i + den.size() - 1] / den.back();
    if (q * den.back() != num[i + den.size() - 1])
      throw InternalError("exact_div: inexact division");
    quot[i] = q;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw InternalError("exact_div: nonzero remainder");
  return quot;
}

// Phi_m(x) by the recursion x^m - 1 = prod_{d | m} Phi_d(x).
std::vector<Int> cyclotomic_polynomial(int m) {
  std::vector<Int> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = exact_div(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

int validate_level(int level) {
  if (level < 2) throw DomainError("cyclotomic level must be >= 2, got " + std::to_string(level));
  return level;
}

}  // namespace

const std::vector<Int>& Cyclotomic::minimal_polynomial(int level) {
  validate_level(level);
  static std::mutex mu;
  static std::map<int, std::vector<Int>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, cyclotomic_polynomial(2 * level)).first;
  return it->second;
}

int Cyclotomic::field_degree(int level) {
  return static_cast<int>(minimal_polynomial(level).size()) - 1;
}

Cyclotomic Cyclotomic::zero(int level) {
  Cyclotomic c;
  c.level_ = validate_level(level);
  c.c_.assign(field_degree(level), Rat(0));
  return c;
}

Cyclotomic Cyclotomic::from_rat(int level, Rat v) {
  Cyclotomic c = zero(level);
  c.c_[0] = std::move(v);
  return c;
}

Cyclotomic Cyclotomic::from_int(int level, Int v) { return from_rat(level, Rat(std::move(v))); }

Cyclotomic Cyclotomic::one(int level) { return from_int(level, 1); }

Cyclotomic Cyclotomic::xi_pow(int level, long e) {
  Cyclotomic c = zero(level);
  const long m = 2L * level;
  long r = ((e % m) + m) % m;
  std::vector<Rat> v(r + 1, Rat(0));
  v[r] = 1;
  c.reduce(v);
  v.resize(field_degree(level), Rat(0));
  c.c_ = std::move(v);
  return c;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

void Cyclotomic::check_level(const Cyclotomic& o) const {
  if (level_ != o.level_)
    throw InternalError("mixing cyclotomic numbers of levels " + std::to_string(level_) + " and " +
                        std::to_string(o.level_));
  if (level_ == 0) throw InternalError("uninitialised cyclotomic number");
}

// Reduces v in place modulo the minimal polynomial; afterwards v has degree
// < phi(2N) (its size may still exceed that; high entries are zero).
void Cyclotomic::reduce(std::vector<Rat>& v) const {
  const auto& mp = minimal_polynomial(level_);
  const size_t deg = mp.size() - 1;
  if (v.size() <= deg) return;
  for (size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    Rat q = v[i];  // mp is monic
    for (size_t j = 0; j < mp.size(); ++j) v[i - deg + j] -= q * Rat(mp[j]);
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  check_level(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  check_level(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  check_level(o);
  std::vector<Rat> prod(2 * c_.size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce(prod);
  prod.resize(c_.size());
  c_ = std::move(prod);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (Rat& v : r.c_) v = -v;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const { return level_ == o.level_ && c_ == o.c_; }

Cyclotomic Cyclotomic::inverse() const {
  if (level_ == 0) throw InternalError("uninitialised cyclotomic number");
  if (is_zero()) throw DomainError("division by zero in the cyclotomic field");

  // Extended Euclid over Q[X] for gcd(a, Phi) with Bezout coefficient of a.
  auto degree = [](const std::vector<Rat>& p) -> int {
    for (size_t i = p.size(); i-- > 0;)
      if (p[i] != 0) return static_cast<int>(i);
    return -1;
  };
  const auto& mp = minimal_polynomial(level_);
  std::vector<Rat> r0(mp.begin(), mp.end());
  std::vector<Rat> r1 = c_;
  std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of a (our element)

  while (degree(r1) > 0) {
    int d0 = degree(r0), d1 = degree(r1);
    std::vector<Rat> q(d0 - d1 + 1, Rat(0));
    std::vector<Rat> rem = r0;
    for (int i = d0 - d1; i >= 0; --i) {
      Rat f = rem[i + d1] / r1[d1];
      q[i] = f;
      if (f == 0) continue;
      for (int j = 0; j <= d1; ++j) rem[i + j] -= f * r1[j];
    }
    // s_next = s0 - q * s1
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    r1.resize(std::max(degree(r1) + 1, 1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  int dr = degree(r1);
  if (dr < 0) throw InternalError("cyclotomic inverse: element shares a factor with the minimal polynomial");
  Rat unit = r1[0];  // constant gcd
  Cyclotomic inv = zero(level_);
  std::vector<Rat> s = std::move(s1);
  for (Rat& v : s) v /= unit;
  reduce(s);
  for (size_t i = 0; i < inv.c_.size() && i < s.size(); ++i) inv.c_[i] = s[i];
  return inv;
}

std::complex<double> Cyclotomic::embed() const {
  if (level_ == 0) throw InternalError("uninitialised cyclotomic number");
  const std::complex<double> xi = std::polar(1.0, std::numbers::pi / level_);
  std::complex<double> acc = 0.0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * xi + static_cast<double>(c_[i]);
  return acc;
}

Cyclotomic Cyclotomic::bar() const {
  if (level_ == 0) throw InternalError("uninitialised cyclotomic number");
  Cyclotomic r = zero(level_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyclotomic t = xi_pow(level_, -static_cast<long>(i));
    for (Rat& v : t.c_) v *= c_[i];
    r += t;
  }
  return r;
}

std::string Cyclotomic::to_string() const {
  if (level_ == 0) return "<unset>";
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || i == 0) {
      os << a;
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "xi";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Cyclotomic eval_at_root(const LaurentPoly& p, int level) {
  validate_level(level);
  if (!p.ctx().q_mode) throw DomainError("eval_at_root expects a single-variable polynomial");
  Cyclotomic acc = Cyclotomic::zero(level);
  for (const auto& [exps, c] : p.terms())
    acc += Cyclotomic::xi_pow(level, exps[0]) * Cyclotomic::from_int(level, c);
  return acc;
}

}  // namespace qtop
