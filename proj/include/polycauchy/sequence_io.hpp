#pragma once

#include "polycauchy/rational.hpp"

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycauchy {

/// Raised when stdin/file sequence input fails to parse; carries the
/// 1-based line number for the CLI's exit-code-3 diagnostics.
struct SequenceParseError : std::runtime_error {
  SequenceParseError(int line_number, const std::string& what)
      : std::runtime_error(what), line(line_number) {}
  int line;
};

/// Reads comma- or newline-separated canonical rationals; '#' starts a
/// comment that runs to end of line.
std::vector<Rational> parse_sequence(std::istream& in);

}  // namespace polycauchy
