#pragma once

#include "qtop/corpus.hpp"
#include "qtop/wrt.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qtop {

// One fully-parsed invocation. Kept separate from the flag parser so the
// runner is callable (and testable) as a library.
struct JobSpec {
  enum class Command { jones, wrt, pairing_eval, verify, corpus };
  enum class Format { text, structured };
  enum class Mode { exact, exact_float_crosscheck };

  Command command = Command::jones;
  std::string braid_text;
  int strands = 0;  // 0 = infer from the largest letter
  std::vector<int> framings;
  std::vector<int> colours;
  int level_lo = 0;
  int level_hi = 0;
  FramingConvention convention = FramingConvention::paper_literal;
  std::string input_path;  // pairing-eval input; corpus file override
  std::string suite = "regrouping";
  Format format = Format::text;
  Mode mode = Mode::exact;
  int workers = 0;  // 0 = QTOP_WORKERS or 1
  bool include_summands = false;
  bool include_timing = false;
};

struct RunResult {
  // 0 ok, 1 failed checks/expectations, 2 parse error, 3 math-domain error,
  // 4 internal invariant violation
  int status = 0;
  std::string output;
};

RunResult run_job(const JobSpec& job);

// "0 1 -2" or "0,1,-2" -> {0, 1, -2}
std::vector<int> parse_int_list(const std::string& text);
// "3..5" -> {3,5}; "4" -> {4,4}
std::pair<int, int> parse_level_range(const std::string& text);

// Builds the presentation a job describes, inferring the strand count from
// the word when none is given.
LinkPresentation presentation_from_job(const JobSpec& job);

}  // namespace qtop
