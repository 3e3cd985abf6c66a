// Command-line front end: coloured Jones polynomials and level-N
// Witten-Reshetikhin-Turaev invariants from braid words.

#include "qtop/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* cmd, qtop::JobSpec& job, std::string& convention, std::string& format) {
  cmd->add_option("--convention", convention, "framing convention: paper-literal | ribbon")
      ->default_val("paper-literal");
  cmd->add_option("--format", format, "output format: text | json")->default_val("text");
  cmd->add_option("--jobs", job.workers, "worker threads (0 = QTOP_WORKERS env or 1)");
  cmd->add_flag("--timing", job.include_timing, "include wall-clock timing in the output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coloured Jones / WRT invariant engine for braid closures"};
  app.require_subcommand(1);

  qtop::JobSpec job;
  std::string braid, framings, colours, level = "", convention = "paper-literal", format = "text";
  bool crosscheck = false;

  CLI::App* jones = app.add_subcommand("jones", "coloured Jones polynomial of a framed braid closure");
  jones->add_option("--braid", braid, "braid word, e.g. \"1 1 1\"")->required();
  jones->add_option("--strands", job.strands, "strand count (needed for an empty word)");
  jones->add_option("--framings", framings, "framing per component, e.g. \"0 1\"");
  jones->add_option("--colours", colours, "colour per component (a single value broadcasts)")
      ->required();
  jones->add_flag("--summands", job.include_summands, "include the per-index summand table");
  jones->add_flag("--crosscheck", crosscheck, "recompute in complex doubles and compare");
  add_common(jones, job, convention, format);

  CLI::App* wrt = app.add_subcommand("wrt", "level-N WRT invariant of surgery on a braid closure");
  wrt->add_option("--braid", braid, "braid word (may be empty)")->required();
  wrt->add_option("--strands", job.strands, "strand count (needed for an empty word)");
  wrt->add_option("--framings", framings, "framing per component")->required();
  wrt->add_option("--level", level, "level N >= 3")->required();
  wrt->add_flag("--summands", job.include_summands, "include the state-sum term table");
  wrt->add_flag("--crosscheck", crosscheck, "recompute in complex doubles and compare");
  add_common(wrt, job, convention, format);

  CLI::App* pairing = app.add_subcommand("pairing-eval", "evaluate a pairing-data file");
  pairing->add_option("--input", job.input_path, "PairingData JSON file")->required();
  pairing->add_option("--colours", colours, "colours for the psi specialisation");
  pairing->add_option("--level", level, "evaluate the specialisation at the level's root");
  add_common(pairing, job, convention, format);

  CLI::App* verify = app.add_subcommand("verify", "run identity suites over the corpus");
  verify->add_option("--suite", job.suite, "regrouping | stabilization | kirby | all")
      ->default_val("regrouping");
  verify->add_option("--level", level, "level or range, e.g. 3..5")->default_val("3..5");
  verify->add_option("--corpus", job.input_path, "corpus file (default: built-in corpus)");
  add_common(verify, job, convention, format);

  CLI::App* corpus = app.add_subcommand("corpus", "compute tau over the corpus, check expectations");
  corpus->add_option("--level", level, "level or range, e.g. 3..5")->default_val("3..5");
  corpus->add_option("--corpus", job.input_path, "corpus file (default: built-in corpus)");
  add_common(corpus, job, convention, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (jones->parsed()) job.command = qtop::JobSpec::Command::jones;
    if (wrt->parsed()) job.command = qtop::JobSpec::Command::wrt;
    if (pairing->parsed()) job.command = qtop::JobSpec::Command::pairing_eval;
    if (verify->parsed()) job.command = qtop::JobSpec::Command::verify;
    if (corpus->parsed()) job.command = qtop::JobSpec::Command::corpus;

    job.braid_text = braid;
    if (!framings.empty()) job.framings = qtop::parse_int_list(framings);
    if (!colours.empty()) job.colours = qtop::parse_int_list(colours);
    if (!level.empty()) {
      auto [lo, hi] = qtop::parse_level_range(level);
      job.level_lo = lo;
      job.level_hi = hi;
    }
    job.convention = qtop::framing_convention_from_string(convention);
    if (format == "json" || format == "structured")
      job.format = qtop::JobSpec::Format::structured;
    else if (format != "text")
      throw qtop::ParseError("unknown format '" + format + "'");
    job.mode = crosscheck ? qtop::JobSpec::Mode::exact_float_crosscheck
                          : qtop::JobSpec::Mode::exact;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  qtop::RunResult result = qtop::run_job(job);
  std::cout << result.output;
  return result.status;
}
