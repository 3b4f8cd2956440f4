#include "rflight/csv.hpp"

#include <array>
#include <charconv>

namespace rflight::csv {

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
  return std::string(buffer.data(), result.ptr);
}

void write_row(std::ostream& out, std::initializer_list<std::string_view> cells) {
  bool first = true;
  for (auto cell : cells) {
    if (!first) out << ',';
    out << cell;
    first = false;
  }
  out << '\n';
}

}  // namespace rflight::csv
