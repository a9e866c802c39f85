#pragma once

#include <charconv>
#include <string_view>
#include <system_error>

namespace allipoly::detail {

// Strict decimal integer parse: the whole token must be consumed.
inline bool parse_int(std::string_view tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace allipoly::detail
