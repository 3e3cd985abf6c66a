#include "qtop/braid.hpp"

#include <algorithm>
#include <sstream>

namespace qtop {

void BraidWord::validate() const {
  if (strands < 1) throw ParseError("braid needs at least one strand");
  for (int letter : word) {
    int k = std::abs(letter);
    if (k < 1 || k >= strands)
      throw ParseError("braid letter " + std::to_string(letter) + " out of range for " +
                       std::to_string(strands) + " strands");
  }
}

BraidWord BraidWord::parse(int strands, const std::string& text) {
  BraidWord b;
  b.strands = strands;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v == 0) throw std::invalid_argument(tok);
      b.word.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'");
    }
  }
  b.validate();
  return b;
}

std::string BraidWord::render() const {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << " ";
    os << word[i];
  }
  return os.str();
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> pos(strands), strand_at(strands);
  for (int s = 0; s < strands; ++s) pos[s] = strand_at[s] = s;
  for (int letter : word) {
    int k = std::abs(letter) - 1;
    int sa = strand_at[k], sb = strand_at[k + 1];
    std::swap(pos[sa], pos[sb]);
    std::swap(strand_at[k], strand_at[k + 1]);
  }
  return pos;
}

ClosureComponents closure_components(const BraidWord& braid) {
  braid.validate();
  const int n = braid.strands;
  std::vector<int> pi = braid.permutation();
  ClosureComponents out;
  out.component_of_strand.assign(n, -1);
  // The closure joins the top of position p to the bottom of position p, and
  // bottom position p carries strand p; so strand s continues as strand pi[s].
  for (int s = 0; s < n; ++s) {
    if (out.component_of_strand[s] >= 0) continue;
    int id = out.count++;
    out.representatives.push_back(s);
    int cur = s;
    while (out.component_of_strand[cur] < 0) {
      out.component_of_strand[cur] = id;
      cur = pi[cur];
    }
  }
  return out;
}

LinkPresentation LinkPresentation::make(BraidWord braid, std::vector<int> framings) {
  LinkPresentation p;
  p.braid = std::move(braid);
  p.components = closure_components(p.braid);
  const int l = p.components.count;
  if (static_cast<int>(framings.size()) != l)
    throw ParseError("expected " + std::to_string(l) + " framings, got " +
                     std::to_string(framings.size()));
  p.framings = std::move(framings);
  p.self_writhe.assign(l, 0);
  std::vector<std::vector<int>> raw(l, std::vector<int>(l, 0));

  const int n = p.braid.strands;
  std::vector<int> strand_at(n);
  for (int s = 0; s < n; ++s) strand_at[s] = s;
  for (int letter : p.braid.word) {
    int k = std::abs(letter) - 1;
    int sign = letter > 0 ? 1 : -1;
    int sa = strand_at[k], sb = strand_at[k + 1];
    int ca = p.components.component_of_strand[sa];
    int cb = p.components.component_of_strand[sb];
    if (ca == cb) {
      p.self_writhe[ca] += sign;
    } else {
      raw[ca][cb] += sign;
      raw[cb][ca] += sign;
    }
    std::swap(strand_at[k], strand_at[k + 1]);
  }
  p.lk.assign(l, std::vector<int>(l, 0));
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b) {
      if (a == b) continue;
      if (raw[a][b] % 2 != 0)
        throw InternalError("odd signed crossing count between components; strand tracking bug");
      p.lk[a][b] = raw[a][b] / 2;
    }
  return p;
}

std::vector<std::vector<Int>> LinkPresentation::linking_matrix() const {
  const int l = component_count();
  std::vector<std::vector<Int>> b(l, std::vector<Int>(l, 0));
  for (int i = 0; i < l; ++i) {
    b[i][i] = framings[i];
    for (int j = 0; j < l; ++j)
      if (i != j) b[i][j] = lk[i][j];
  }
  return b;
}

Inertia signature(const std::vector<std::vector<Int>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("signature: matrix not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) throw DomainError("signature: matrix not symmetric");

  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);

  Inertia out;
  std::vector<bool> done(n, false);
  size_t remaining = n;
  while (remaining > 0) {
    size_t pivot = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && a[i][i] != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) {
      // No nonzero diagonal entry; look for an off-diagonal one and make a
      // diagonal pivot by the congruence row_i += row_j, col_i += col_j.
      size_t oi = n, oj = n;
      for (size_t i = 0; i < n && oi == n; ++i) {
        if (done[i]) continue;
        for (size_t j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          if (a[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
        }
      }
      if (oi == n) {
        out.zero += static_cast<int>(remaining);
        break;
      }
      for (size_t k = 0; k < n; ++k)
        if (!done[k]) a[oi][k] += a[oj][k];
      for (size_t k = 0; k < n; ++k)
        if (!done[k]) a[k][oi] += a[k][oj];
      continue;
    }
    const Rat piv = a[pivot][pivot];
    if (piv > 0)
      ++out.positive;
    else
      ++out.negative;
    done[pivot] = true;
    --remaining;
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][pivot] == 0) continue;
      const Rat f = a[i][pivot] / piv;
      for (size_t j = 0; j < n; ++j)
        if (!done[j]) a[i][j] -= f * a[pivot][j];
      a[i][pivot] = 0;
    }
    for (size_t j = 0; j < n; ++j)
      if (!done[j]) a[pivot][j] = 0;
  }
  return out;
}

LinkingMatrixReport linking_report(const LinkPresentation& p) {
  LinkingMatrixReport r;
  r.matrix = p.linking_matrix();
  r.inertia = signature(r.matrix);
  return r;
}

}  // namespace qtop
