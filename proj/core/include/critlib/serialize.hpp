#pragma once

#include <string>
#include <string_view>

#include "critlib/chipfire.hpp"
#include "critlib/intlinalg.hpp"

namespace critlib {

// {"rows": r, "cols": c, "entries": [["1","-2"], ...]}; entries may also be JSON integers on input.
std::string matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(std::string_view text);

// {"matrix": {...}, "config": ["3","0"]}
std::string config_to_json(const IntMatrix& m, const ChipConfig& v);
std::pair<IntMatrix, ChipConfig> config_from_json(std::string_view text);

// {"sequence": [1,2,...], "counts": ["1","0"]}; sequence is 1-based.
std::string firing_record_to_json(const FiringRecord& r);
FiringRecord firing_record_from_json(std::string_view text);

// Whitespace/comma separated integers, rows separated by ';' or newlines.
IntMatrix matrix_from_text(std::string_view text);
IntVector vector_from_text(std::string_view text);

}  // namespace critlib
