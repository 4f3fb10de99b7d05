#pragma once

#include <string>
#include <string_view>

#include "folty/types.hpp"

namespace folty {

/// "<int>[s|m|h|d|w]"; a bare integer is seconds. Throws ParameterError.
Duration parse_duration(std::string_view text);

/// Largest exact suffix form, e.g. 2419200 -> "4w".
std::string format_duration(Duration seconds);

}  // namespace folty
