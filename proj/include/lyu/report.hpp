// report.hpp
//
// Rendering of script results. JSON and CSV output is byte-identical for
// identical input; entries that were not computed are left out of both.

#pragma once

#include <string>

#include "lyu/script.hpp"

namespace lyu {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; InputError otherwise.
Format parse_format(const std::string& s);

inline constexpr int kSchemaVersion = 1;

std::string emit(const Report& r, Format f);

}  // namespace lyu
