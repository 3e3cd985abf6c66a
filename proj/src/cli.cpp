#include "qtop/cli.hpp"

#include "qtop/pairing.hpp"
#include "qtop/specialization.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <sstream>

namespace qtop {

namespace {

// Unit-modulus sample point for the Jones float cross-check; one radian, so
// never a root of unity.
const std::complex<double> kJonesCrosscheckQ = std::polar(1.0, 1.0);

double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

std::string complex_text(std::complex<double> z) {
  std::string s = format_double(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  s += format_double(std::abs(z.imag()));
  s += "i";
  return s;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

Json wrt_value_json(const WrtValue& v) {
  Json j;
  j["numerator"] = cyclotomic_to_json(v.value);
  j["d_power"] = v.d_power;
  j["b_plus"] = v.inertia.positive;
  j["b_minus"] = v.inertia.negative;
  j["b_zero"] = v.inertia.zero;
  j["delta_plus"] = cyclotomic_to_json(v.norm.delta_plus);
  j["delta_minus"] = cyclotomic_to_json(v.norm.delta_minus);
  j["d_value"] = format_double(v.norm.d_value);
  j["complex"] = complex_to_json(v.approx());
  return j;
}

std::string index_text(const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

int run_jones(const JobSpec& job, std::ostringstream& text, Json& doc) {
  Timer timer;
  LinkPresentation pres = presentation_from_job(job);
  std::vector<int> colours = job.colours;
  if (colours.empty()) throw ParseError("jones needs --colours");
  if (colours.size() == 1 && pres.component_count() > 1)
    colours.assign(pres.component_count(), colours[0]);
  ColouredJonesResult jones = coloured_jones(pres, colours, job.convention);

  doc["command"] = "jones";
  doc["braid"] = Json{{"strands", pres.braid.strands}, {"word", pres.braid.render()}};
  doc["framings"] = pres.framings;
  doc["colours"] = colours;
  doc["convention"] = to_string(job.convention);
  doc["framing_factor"] = jones.framing_factor.to_string();
  doc["value"] = laurent_to_json(jones.value);

  text << "J_" << index_text(colours) << " = " << jones.value.to_string() << "\n";
  text << "framing factor: " << jones.framing_factor.to_string() << " (" << to_string(job.convention)
       << ")\n";

  if (job.include_summands) {
    Json table = Json::array();
    text << "summands (index -> pivotal weight * diagonal entry):\n";
    for (const auto& [idx, contrib] : jones.summands) {
      table.push_back(Json{{"index", idx}, {"contribution", laurent_to_json(contrib)}});
      text << "  " << index_text(idx) << " -> " << contrib.to_string() << "\n";
    }
    doc["summands"] = std::move(table);
  }

  int status = 0;
  if (job.mode == JobSpec::Mode::exact_float_crosscheck) {
    const NumericQRing ring{kJonesCrosscheckQ};
    const std::complex<double> direct =
        coloured_jones_value(pres, colours, job.convention, ring);
    const std::complex<double> from_exact =
        jones.value.eval_complex({kJonesCrosscheckQ});
    const double err = rel_err(from_exact, direct);
    const bool ok = err < 1e-6;
    doc["crosscheck"] =
        Json{{"q", complex_to_json(kJonesCrosscheckQ)}, {"relative_error", format_double(err)},
             {"ok", ok}};
    text << "float cross-check at q = e^i: relative error " << format_double(err)
         << (ok ? " (ok)\n" : " (MISMATCH)\n");
    if (!ok) status = 4;
  }
  if (job.include_timing) {
    doc["timing_ms"] = timer.ms();
    text << "timing: " << format_double(timer.ms()) << " ms\n";
  }
  return status;
}

int run_wrt(const JobSpec& job, std::ostringstream& text, Json& doc) {
  Timer timer;
  if (job.level_lo != job.level_hi) throw ParseError("wrt needs a single --level");
  SurgeryInput input{presentation_from_job(job), job.level_lo, job.convention, job.workers};

  WrtValue direct = wrt_direct(input);
  WrtValue regrouped = wrt_statesum(input);
  const bool agree = direct.exact_equal(regrouped);

  doc["command"] = "wrt";
  doc["braid"] =
      Json{{"strands", input.presentation.braid.strands}, {"word", input.presentation.braid.render()}};
  doc["framings"] = input.presentation.framings;
  doc["level"] = input.level;
  doc["convention"] = to_string(job.convention);
  doc["tau"] = wrt_value_json(direct);
  doc["routes_agree"] = agree;

  text << "tau_" << input.level << " = " << direct.value.to_string();
  if (direct.d_power != 0) text << "  (times D^-" << direct.d_power << ")";
  text << "\n";
  text << "  complex = " << complex_text(direct.approx()) << "\n";
  text << "  inertia: b+=" << direct.inertia.positive << " b-=" << direct.inertia.negative
       << " b0=" << direct.inertia.zero << "\n";
  text << "  Delta+ = " << direct.norm.delta_plus.to_string()
       << ", Delta- = " << direct.norm.delta_minus.to_string()
       << ", D = " << format_double(direct.norm.d_value) << "\n";
  text << "  state-sum route agrees exactly: " << (agree ? "yes" : "NO") << "\n";

  if (job.include_summands) {
    Json table = Json::array();
    text << "state-sum terms ({1}^-l scaled, (colours | index) -> value):\n";
    for (const auto& [key, val] : wrt_statesum_terms(input)) {
      table.push_back(Json{{"colours", key.first},
                           {"index", key.second},
                           {"value", cyclotomic_to_json(val)}});
      text << "  " << index_text(key.first) << " | " << index_text(key.second) << " -> "
           << val.to_string() << "\n";
    }
    doc["summands"] = std::move(table);
  }

  int status = agree ? 0 : 4;
  if (job.mode == JobSpec::Mode::exact_float_crosscheck) {
    const std::complex<double> numeric = wrt_numeric(input);
    const double err = rel_err(direct.approx(), numeric);
    const bool ok = err < 1e-6;
    doc["crosscheck"] = Json{{"relative_error", format_double(err)}, {"ok", ok}};
    text << "float cross-check: relative error " << format_double(err)
         << (ok ? " (ok)\n" : " (MISMATCH)\n");
    if (!ok) status = std::max(status, 4);
  }
  if (job.include_timing) {
    doc["timing_ms"] = timer.ms();
    text << "timing: " << format_double(timer.ms()) << " ms\n";
  }
  return status;
}

int run_pairing_eval(const JobSpec& job, std::ostringstream& text, Json& doc) {
  if (job.input_path.empty()) throw ParseError("pairing-eval needs --input <file>");
  PairingData data = pairing_from_json(load_json_file(job.input_path));
  LaurentPoly value = pairing_evaluate(data);

  doc["command"] = "pairing-eval";
  doc["params"] = Json{{"n", data.params.n}, {"k", data.params.k}, {"l", data.params.l}};
  doc["points"] = data.points.size();
  doc["value"] = laurent_to_json(value);
  text << "pairing value = " << value.to_string() << "\n";

  if (!job.colours.empty()) {
    SpecializationSpec spec;
    spec.colours = job.colours;
    LaurentPoly specialized = specialize_to_q(value, spec);
    doc["specialized"] = laurent_to_json(specialized);
    text << "psi-specialised = " << specialized.to_string() << "\n";
    if (job.level_lo >= 2) {
      Cyclotomic at_root = eval_at_root(specialized, job.level_lo);
      doc["at_root"] = cyclotomic_to_json(at_root);
      text << "at level " << job.level_lo << ": " << at_root.to_string() << " = "
           << complex_text(at_root.embed()) << "\n";
    }
  }
  return 0;
}

std::vector<CorpusEntry> corpus_for_job(const JobSpec& job) {
  if (!job.input_path.empty()) return load_corpus_file(job.input_path);
  return builtin_corpus();
}

int run_verify(const JobSpec& job, std::ostringstream& text, Json& doc) {
  const int lo = job.level_lo >= 3 ? job.level_lo : 3;
  const int hi = job.level_hi >= lo ? job.level_hi : 5;
  const bool all = job.suite == "all";
  if (!all && job.suite != "regrouping" && job.suite != "stabilization" && job.suite != "kirby")
    throw ParseError("unknown suite '" + job.suite + "'");
  std::vector<CorpusEntry> entries = corpus_for_job(job);

  int failures = 0;
  Json results = Json::array();
  auto record = [&](const std::string& suite, const std::string& subject, int level, bool pass,
                    const std::string& detail) {
    if (!pass) ++failures;
    results.push_back(Json{{"suite", suite},
                           {"subject", subject},
                           {"level", level},
                           {"pass", pass},
                           {"detail", detail}});
    text << (pass ? "PASS" : "FAIL") << "  " << suite << "  " << subject << "  level=" << level;
    if (!detail.empty()) text << "  " << detail;
    text << "\n";
  };

  if (all || job.suite == "regrouping") {
    for (const CorpusEntry& e : entries) {
      for (int level = lo; level <= hi; ++level) {
        SurgeryInput input{e.presentation(), level, job.convention, job.workers};
        WrtValue direct = wrt_direct(input);
        WrtValue regrouped = wrt_statesum(input);
        const bool pass = direct.exact_equal(regrouped);
        record("regrouping", e.name, level,
               pass, pass ? "" : "state-sum and Kirby-sum routes differ");
      }
    }
  }
  if (all || job.suite == "stabilization") {
    for (const CorpusEntry& e : entries) {
      for (int level = lo; level <= hi; ++level) {
        SurgeryInput input{e.presentation(), level, job.convention, job.workers};
        StabilizationReport rep = stabilization_check(input);
        const bool pass = rep.plus_equal && rep.minus_equal && rep.routes_agree;
        std::string detail;
        if (!rep.plus_equal) detail += "U(+1) changed tau; ";
        if (!rep.minus_equal) detail += "U(-1) changed tau; ";
        if (!rep.routes_agree) detail += "routes disagree; ";
        record("stabilization", e.name, level, pass, detail);
      }
    }
  }
  if (all || job.suite == "kirby") {
    for (int level = std::max(lo, 3); level <= hi; ++level) {
      const Cyclotomic brace_inv =
          eval_at_root(quantum_integer(1, QNum::brace), level).inverse();
      for (int l = 1; l <= 3; ++l) {
        bool pass = true;
        const PairingData fixture = kirby_circle_data(l);
        const LaurentPoly fixture_value = pairing_evaluate(fixture);
        for (const auto& tuple0 : enumerate_weight_indices(std::vector<int>(l, level - 1))) {
          std::vector<int> colours(tuple0);
          for (int& v : colours) ++v;
          SpecializationSpec spec;
          spec.colours = colours;
          Cyclotomic lhs = eval_at_root(specialize_to_q(fixture_value, spec), level);
          for (int i = 0; i < l; ++i) lhs *= brace_inv;
          Cyclotomic rhs = Cyclotomic::one(level);
          for (int n : colours) rhs *= eval_at_root(quantum_integer(n, QNum::bracket), level);
          if (!(lhs == rhs)) pass = false;
        }
        record("kirby", "circles l=" + std::to_string(l), level, pass,
               pass ? "" : "fixture does not reproduce the quantum integers");
      }
    }
  }

  doc["command"] = "verify";
  doc["convention"] = to_string(job.convention);
  doc["results"] = std::move(results);
  doc["failures"] = failures;
  text << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
       << " [convention: " << to_string(job.convention) << "]\n";
  return failures == 0 ? 0 : 1;
}

int run_corpus(const JobSpec& job, std::ostringstream& text, Json& doc) {
  const int lo = job.level_lo >= 3 ? job.level_lo : 3;
  const int hi = job.level_hi >= lo ? job.level_hi : 5;
  std::vector<CorpusEntry> entries = corpus_for_job(job);

  int mismatches = 0;
  Json results = Json::array();
  for (const CorpusEntry& e : entries) {
    for (int level = lo; level <= hi; ++level) {
      Timer timer;
      SurgeryInput input{e.presentation(), level, job.convention, job.workers};
      WrtValue direct = wrt_direct(input);
      WrtValue regrouped = wrt_statesum(input);
      if (!direct.exact_equal(regrouped))
        throw InternalError("state-sum route disagrees with the Kirby-colour route on " + e.name);

      Json r{{"name", e.name},
             {"level", level},
             {"convention", to_string(job.convention)},
             {"tau", wrt_value_json(direct)}};
      if (job.include_timing) r["timing_ms"] = timer.ms();
      text << e.name << "  level=" << level << "  tau = " << complex_text(direct.approx());

      const CorpusExpectation* exp = nullptr;
      for (const CorpusExpectation& x : e.expected)
        if (x.level == level) exp = &x;
      if (exp) {
        const double err = std::abs(direct.approx() - exp->value);
        const bool ok = err <= exp->tolerance;
        if (!ok) ++mismatches;
        r["expected"] = Json{{"value", complex_to_json(exp->value)},
                             {"tolerance", exp->tolerance},
                             {"provenance", exp->provenance},
                             {"abs_error", format_double(err)},
                             {"ok", ok}};
        text << "  expected " << complex_text(exp->value) << " [" << exp->provenance << "]: "
             << (ok ? "ok" : "MISMATCH (|err| = " + format_double(err) + ")");
        if (!ok && !e.note.empty()) text << "\n    note: " << e.note;
      }
      text << "\n";
      results.push_back(std::move(r));
    }
  }
  doc["command"] = "corpus";
  doc["results"] = std::move(results);
  doc["expectation_mismatches"] = mismatches;
  text << (mismatches == 0 ? "all expectations hold"
                           : std::to_string(mismatches) + " expectation(s) missed")
       << "\n";
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream is(cleaned);
  std::vector<int> out;
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_level_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParseError("bad level range '" + text + "' (expected e.g. \"4\" or \"3..5\")");
  }
}

LinkPresentation presentation_from_job(const JobSpec& job) {
  int strands = job.strands;
  if (strands == 0) {
    for (int v : parse_int_list(job.braid_text)) strands = std::max(strands, std::abs(v) + 1);
    if (strands == 0)
      throw ParseError("an empty braid word needs an explicit --strands count");
  }
  BraidWord braid = BraidWord::parse(strands, job.braid_text);
  std::vector<int> framings = job.framings;
  const int l = closure_components(braid).count;
  if (framings.empty()) framings.assign(l, 0);
  return LinkPresentation::make(std::move(braid), std::move(framings));
}

RunResult run_job(const JobSpec& job) {
  std::ostringstream text;
  Json doc;
  int status = 0;
  try {
    switch (job.command) {
      case JobSpec::Command::jones: status = run_jones(job, text, doc); break;
      case JobSpec::Command::wrt: status = run_wrt(job, text, doc); break;
      case JobSpec::Command::pairing_eval: status = run_pairing_eval(job, text, doc); break;
      case JobSpec::Command::verify: status = run_verify(job, text, doc); break;
      case JobSpec::Command::corpus: status = run_corpus(job, text, doc); break;
    }
  } catch (const ParseError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {3, std::string("math error: ") + e.what() + "\n"};
  } catch (const InternalError& e) {
    return {4, std::string("internal invariant violation: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {4, std::string("internal error: ") + e.what() + "\n"};
  }
  if (job.format == JobSpec::Format::structured) {
    doc["status"] = status;
    return {status, render_json(doc)};
  }
  return {status, text.str()};
}

}  // namespace qtop
