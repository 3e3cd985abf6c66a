#include "qtop/weight_rep.hpp"

namespace qtop {

std::vector<std::vector<int>> enumerate_weight_indices(const std::vector<int>& colours) {
  for (int c : colours)
    if (c < 1) throw DomainError("colours must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> idx(colours.size(), 0);
  while (true) {
    out.push_back(idx);
    size_t k = idx.size();
    while (k > 0 && idx[k - 1] == colours[k - 1] - 1) idx[--k] = 0;
    if (k == 0) break;
    ++idx[k - 1];
  }
  return out;
}

BraidRep braid_rep(const BraidWord& word, std::vector<int> colours) {
  return BraidRep(word, std::move(colours), ExactQRing{});
}

LaurentPoly pivotal_weight(const std::vector<int>& idx, const std::vector<int>& colours) {
  return pivotal_weight(ExactQRing{}, idx, colours);
}

LaurentPoly state_summand(const BraidRep& rep, const std::vector<int>& idx) {
  return rep.diagonal_entry(idx);
}

std::string to_string(FramingConvention c) {
  return c == FramingConvention::paper_literal ? "paper-literal" : "ribbon";
}

FramingConvention framing_convention_from_string(const std::string& s) {
  if (s == "paper-literal" || s == "paper") return FramingConvention::paper_literal;
  if (s == "ribbon") return FramingConvention::ribbon;
  throw ParseError("unknown framing convention '" + s + "'");
}

long framing_exponent(const LinkPresentation& p, const std::vector<int>& colours,
                      FramingConvention convention) {
  const int l = p.component_count();
  if (static_cast<int>(colours.size()) != l) throw ParseError("need one colour per component");
  long e = 0;
  for (int i = 0; i < l; ++i) {
    long base = p.framings[i];
    if (convention == FramingConvention::paper_literal) {
      for (int j = 0; j < l; ++j)
        if (j != i) base -= p.lk[i][j];
    } else {
      base -= p.self_writhe[i];
    }
    e += base * (colours[i] - 1);
  }
  return e;
}

std::vector<int> strand_colours(const LinkPresentation& p, const std::vector<int>& colours) {
  if (static_cast<int>(colours.size()) != p.component_count())
    throw ParseError("need one colour per component");
  std::vector<int> per_strand(p.braid.strands);
  for (int s = 0; s < p.braid.strands; ++s)
    per_strand[s] = colours[p.components.component_of_strand[s]];
  return per_strand;
}

ColouredJonesResult coloured_jones(const LinkPresentation& p, const std::vector<int>& colours,
                                   FramingConvention convention) {
  for (int c : colours)
    if (c < 1) throw DomainError("colours must be >= 1");
  ColouredJonesResult out;
  out.convention = convention;
  out.framing_factor = LaurentPoly::q_pow(framing_exponent(p, colours, convention));

  std::vector<int> per_strand = strand_colours(p, colours);
  BraidRep rep = braid_rep(p.braid, per_strand);
  LaurentPoly total(VarContext::q_ring());
  for (const auto& idx : enumerate_weight_indices(per_strand)) {
    LaurentPoly term = pivotal_weight(idx, per_strand) * rep.diagonal_entry(idx);
    total += term;
    out.summands.emplace_back(idx, std::move(term));
  }
  out.value = out.framing_factor * total;
  return out;
}

}  // namespace qtop
