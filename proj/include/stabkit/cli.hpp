#pragma once

// The `stabkit` command line. run() is the whole program minus process setup,
// so tests can drive it with in-memory streams.

#include <ostream>
#include <span>
#include <string>

namespace stabkit {

enum ExitCode : int {
  exit_ok = 0,         // answer produced / PASS
  exit_negative = 1,   // negative verdict / FAIL
  exit_input = 2,      // malformed input or violated precondition
  exit_budget = 3,     // budget exceeded or certificate unavailable
};

/// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace stabkit
