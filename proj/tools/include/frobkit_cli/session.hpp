#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "frobkit/error.hpp"

namespace frobkit::cli {

enum ExitCode : int { kOk = 0, kCommandError = 1, kInputError = 2 };

/// Loads a session document, runs its commands in order and writes one JSON
/// object per command to `out`. Timings and a summary go to `log`.
int run_session(const std::string& text, std::ostream& out, std::ostream& log, const Budget& budget = {});

/// The acceptance battery as a single JSON report.
int run_verify_suite(std::uint64_t seed, bool quick, std::ostream& out, std::ostream& log);

}  // namespace frobkit::cli
