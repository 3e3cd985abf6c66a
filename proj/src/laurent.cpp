#include "qtop/laurent.hpp"

#include <numeric>
#include <sstream>

namespace qtop {

std::string VarContext::describe() const {
  if (q_mode) return "Z[q^±1]";
  std::ostringstream os;
  os << "Z[x1..x" << n_x << ", y1..y" << n_y << ", d]";
  return os.str();
}

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly LaurentPoly::constant(VarContext ctx, Int c) {
  LaurentPoly p(ctx);
  if (c != 0) p.terms_.emplace(Exps(ctx.arity(), 0), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::monomial(VarContext ctx, Exps exps, Int c) {
  if (static_cast<int>(exps.size()) != ctx.arity())
    throw InternalError("monomial exponent tuple has wrong arity");
  LaurentPoly p(ctx);
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::x(VarContext ctx, int i, int exp) {
  if (ctx.q_mode || i < 1 || i > ctx.n_x)
    throw DomainError("x-variable index out of range: x" + std::to_string(i));
  Exps e(ctx.arity(), 0);
  e[i - 1] = exp;
  return monomial(ctx, std::move(e), 1);
}

LaurentPoly LaurentPoly::y(VarContext ctx, int j, int exp) {
  if (ctx.q_mode || j < 1 || j > ctx.n_y)
    throw DomainError("y-variable index out of range: y" + std::to_string(j));
  Exps e(ctx.arity(), 0);
  e[ctx.n_x + j - 1] = exp;
  return monomial(ctx, std::move(e), 1);
}

LaurentPoly LaurentPoly::d(VarContext ctx, int exp) {
  if (ctx.q_mode) throw DomainError("d-variable absent from the single-variable ring");
  Exps e(ctx.arity(), 0);
  e[ctx.n_x + ctx.n_y] = exp;
  return monomial(ctx, std::move(e), 1);
}

LaurentPoly LaurentPoly::q_pow(long e) {
  return monomial(VarContext::q_ring(), {static_cast<int>(e)}, 1);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == Exps(ctx_.arity(), 0);
}

void LaurentPoly::check_same_ctx(const LaurentPoly& o) const {
  if (!(ctx_ == o.ctx_))
    throw InternalError("mixing polynomials from " + ctx_.describe() + " and " + o.ctx_.describe());
}

void LaurentPoly::add_term(const Exps& exps, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Int LaurentPoly::coeff(const Exps& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ctx(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ctx(b);
  LaurentPoly r(a.ctx_);
  const int arity = a.ctx_.arity();
  LaurentPoly::Exps e(arity);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < arity; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(ctx_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

std::complex<double> LaurentPoly::eval_complex(const std::vector<std::complex<double>>& values) const {
  if (static_cast<int>(values.size()) != ctx_.arity())
    throw InternalError("eval_complex needs one value per variable");
  auto ipow = [](std::complex<double> v, int e) {
    if (e < 0) {
      v = 1.0 / v;
      e = -e;
    }
    std::complex<double> r = 1.0;
    while (e) {
      if (e & 1) r *= v;
      v *= v;
      e >>= 1;
    }
    return r;
  };
  std::complex<double> total = 0.0;
  for (const auto& [exps, c] : terms_) {
    std::complex<double> t = static_cast<double>(c);
    for (size_t k = 0; k < values.size(); ++k) t *= ipow(values[k], exps[k]);
    total += t;
  }
  return total;
}

namespace {

void render_power(std::ostream& os, const char* name, int idx, int e, bool& first_var) {
  if (e == 0) return;
  if (!first_var) os << "*";
  first_var = false;
  os << name;
  if (idx > 0) os << idx;
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending graded-lex: highest term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    Int a = c;
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
    bool all_zero = true;
    for (int e : exps) all_zero = all_zero && e == 0;
    if (a != 1 || all_zero) {
      os << a.str();
      if (!all_zero) os << "*";
    }
    bool first_var = true;
    if (ctx_.q_mode) {
      render_power(os, "q", 0, exps[0], first_var);
    } else {
      for (int i = 0; i < ctx_.n_x; ++i) render_power(os, "x", i + 1, exps[i], first_var);
      for (int j = 0; j < ctx_.n_y; ++j) render_power(os, "y", j + 1, exps[ctx_.n_x + j], first_var);
      render_power(os, "d", 0, exps[ctx_.n_x + ctx_.n_y], first_var);
    }
  }
  return os.str();
}

LaurentPoly quantum_integer(long n, QNum kind) {
  if (n < 0) throw DomainError("quantum_integer: negative argument " + std::to_string(n));
  LaurentPoly r(VarContext::q_ring());
  if (kind == QNum::brace) {
    if (n == 0) return r;
    r.add_term({static_cast<int>(n)}, 1);
    r.add_term({static_cast<int>(-n)}, -1);
    return r;
  }
  for (long i = 0; i < n; ++i) r.add_term({static_cast<int>(n - 1 - 2 * i)}, 1);
  return r;
}

}  // namespace qtop
