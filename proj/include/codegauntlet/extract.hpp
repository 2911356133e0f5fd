#ifndef CODEGAUNTLET_EXTRACT_HPP
#define CODEGAUNTLET_EXTRACT_HPP

#include <string>

namespace cg {

// Pulls source code out of a model response. Priority:
//   1. first fenced block whose label matches language_tag (case-insensitive),
//   2. first fenced block with any or no label,
//   3. the whole response verbatim when no fence opens.
// A fence opens at a line starting with ``` (remainder of the line is the
// label, trimmed) and closes at the next line that is exactly ``` after
// trimming; an unclosed fence runs to the end of the response. The result is
// always a contiguous slice of the input.
std::string extract_code(const std::string& raw_response, const std::string& language_tag);

}  // namespace cg

#endif
