#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace dkp::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kNumerical = 3, kNoFold = 4 };

/// %.14e, 15 significant digits.
std::string format_number(double x);

// Data go to cfg.output_path (or `data` when it is empty); resonances and
// summaries go to `console`. Return values are ExitCode.
int cmd_transmission(const RunConfig& cfg, std::ostream& data, std::ostream& console);
int cmd_spectrum(const RunConfig& cfg, std::ostream& data, std::ostream& console);
int cmd_verify(const RunConfig& cfg, std::ostream& console);

/// Maps errors to exit codes and prints the message on `err`.
int run(const RunConfig& cfg, std::ostream& data, std::ostream& console, std::ostream& err);

}  // namespace dkp::cli
