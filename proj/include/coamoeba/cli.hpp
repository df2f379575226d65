#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coamoeba/lattice.hpp"
#include "coamoeba/line_model.hpp"

namespace coamoeba::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kInternalError = 3 };

/// Either a configuration or explicit forms, never both.
struct InputDocument {
  std::optional<std::vector<Vec2>> b;
  std::optional<std::vector<AffineForm>> forms;
  std::optional<std::size_t> pivot;  ///< 1-based
  bool normalize = true;
};

/// Plain text ("x y" per line, '#' comments) or a JSON object with "b" or
/// "forms" and optional "pivot", "normalize". Unknown JSON keys are ignored.
/// Throws Error(ParseError) with line and column in the message.
InputDocument parse_input(std::string_view text);

/// Entry point behind the coamoeba binary. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace coamoeba::cli
