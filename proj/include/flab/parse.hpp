#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flab/presentation.hpp"

namespace flab {

// Presentation file format, one block per presentation, blocks separated by
// blank lines, '#' to end of line is a comment:
//
//   name: v3396
//   gens: a b c
//   rel: aBca2bC
//   cusp: Ab | B3a5B2
//   flags: 3manifold hyperbolic
//
// Parse errors carry "line L, column C" in the message.
[[nodiscard]] Presentation parse_presentation(std::string_view text);

// One entry per block. A block that fails to parse yields an error record
// instead of aborting the whole file.
struct ParsedBlock {
  int first_line = 0;
  bool ok = false;
  Presentation presentation;
  std::string error;
};
[[nodiscard]] std::vector<ParsedBlock> parse_presentation_blocks(
    std::string_view text);

// All blocks; throws on the first malformed block.
[[nodiscard]] std::vector<Presentation> parse_presentations(
    std::string_view text);

[[nodiscard]] std::string read_file(const std::string& path);

}  // namespace flab
