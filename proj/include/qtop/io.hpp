#pragma once

#include "qtop/cyclotomic.hpp"
#include "qtop/laurent.hpp"
#include "qtop/pairing.hpp"

#include <json.hpp>

#include <complex>
#include <string>

namespace qtop {

// Ordered JSON keeps key insertion order, which `render_json` turns into a
// stable byte-for-byte document.
using Json = nlohmann::ordered_json;

std::string render_json(const Json& j);

// Deterministic float rendering used everywhere a complex number leaves the
// engine.
std::string format_double(double v);
Json complex_to_json(std::complex<double> z);

// Polynomials: {"context": ..., "terms": [{"exponents": [...], "coeff": "..."}]},
// terms in ascending graded-lex order, coefficients as decimal strings.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json cyclotomic_to_json(const Cyclotomic& c);

// PairingData files: {"params": {"n","k","l"}, "points": [{"sign", "loop":
// [[kind, index, exponent], ...]}, ...]}. Round-trips bit-exactly.
Json pairing_to_json(const PairingData& d);
PairingData pairing_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qtop
