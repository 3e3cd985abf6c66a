#include "qtop/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qtop {

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json complex_to_json(std::complex<double> z) {
  return Json{{"re", format_double(z.real())}, {"im", format_double(z.imag())}};
}

Json laurent_to_json(const LaurentPoly& p) {
  Json ctx;
  if (p.ctx().q_mode) {
    ctx = Json{{"variables", "q"}};
  } else {
    ctx = Json{{"variables", "xyd"}, {"x_count", p.ctx().n_x}, {"y_count", p.ctx().n_y}};
  }
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms()) {
    terms.push_back(Json{{"exponents", exps}, {"coeff", coeff.str()}});
  }
  return Json{{"context", ctx}, {"terms", terms}, {"text", p.to_string()}};
}

LaurentPoly laurent_from_json(const Json& j) {
  VarContext ctx;
  const Json& jc = j.at("context");
  if (jc.at("variables") == "q") {
    ctx = VarContext::q_ring();
  } else if (jc.at("variables") == "xyd") {
    ctx = VarContext::xyd(jc.at("x_count").get<int>(), jc.at("y_count").get<int>());
  } else {
    throw ParseError("unknown polynomial context");
  }
  LaurentPoly p(ctx);
  for (const Json& t : j.at("terms")) {
    auto exps = t.at("exponents").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != ctx.arity())
      throw ParseError("polynomial term has wrong exponent arity");
    p.add_term(exps, Int(t.at("coeff").get<std::string>()));
  }
  return p;
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const Rat& r : c.coeffs()) {
    std::ostringstream os;
    os << r;
    coeffs.push_back(os.str());
  }
  return Json{{"level", c.level()},
              {"coeffs", coeffs},
              {"text", c.to_string()},
              {"complex", complex_to_json(c.embed())}};
}

Json pairing_to_json(const PairingData& d) {
  Json points = Json::array();
  for (const PairingPoint& pt : d.points) {
    Json loop = Json::array();
    for (const LoopLetter& letter : pt.loop.letters)
      loop.push_back(Json::array({to_string(letter.kind), letter.index, letter.exponent}));
    points.push_back(Json{{"sign", pt.sign}, {"loop", loop}});
  }
  return Json{
      {"params", Json{{"n", d.params.n}, {"k", d.params.k}, {"l", d.params.l}}},
      {"points", points}};
}

PairingData pairing_from_json(const Json& j) {
  PairingData d;
  const Json& params = j.at("params");
  d.params.n = params.at("n").get<int>();
  d.params.k = params.at("k").get<int>();
  d.params.l = params.at("l").get<int>();
  for (const Json& jp : j.at("points")) {
    PairingPoint pt;
    pt.sign = jp.at("sign").get<int>();
    for (const Json& jl : jp.at("loop")) {
      if (!jl.is_array() || jl.size() != 3) throw ParseError("loop letter must be [kind, index, exponent]");
      pt.loop.letters.push_back({loop_kind_from_string(jl[0].get<std::string>()),
                                 jl[1].get<int>(), jl[2].get<int>()});
    }
    d.points.push_back(std::move(pt));
  }
  return d;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace qtop
