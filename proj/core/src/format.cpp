#include "nrd/format.hpp"

#include <charconv>
#include <system_error>

namespace nrd {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace nrd
