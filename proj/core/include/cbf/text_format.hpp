#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cbf/code.hpp"

namespace cbf {

/// Digit string for q <= 10 (`0010001`), comma-separated decimals otherwise (`0,0,11,1`).
[[nodiscard]] std::string format_word(const Word& w, int q);

/// Inverse of format_word; also accepts the comma form for q <= 10. Throws ParseError.
[[nodiscard]] Word parse_word(std::string_view text, int q);

/**
 * Code file: one word per line, `#` comment lines, blank lines ignored, and
 * an optional first non-comment header `q=<int> n=<int> I=<comma-list>`.
 *
 * Without a header the alphabet is `default_q` and no bipartition is
 * attached. Throws ParseError on malformed input or a file with no words.
 */
[[nodiscard]] Code parse_code_file(std::string_view text, int default_q);

/// Header line (when requested) followed by one word per line.
[[nodiscard]] std::string format_code_file(const Code& code, bool with_header = true);

/// `q=.. n=.. I=..` (I omitted when the code carries no bipartition).
[[nodiscard]] std::string format_header(const Code& code);

/// JSON object with q, n, I, J, words, verified, non_expandable.
[[nodiscard]] std::string code_to_json(const Code& code, bool verified, std::optional<bool> non_expandable);

} // namespace cbf
