#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace rflight::csv {

/// 17 significant digits, '.' as decimal separator, locale independent.
std::string format_double(double value);

/// Writes cells joined by ',' and terminated by '\n'.
void write_row(std::ostream& out, std::initializer_list<std::string_view> cells);

}  // namespace rflight::csv
