#pragma once

#include <string>
#include <string_view>

#include "snb/graded_algebra.hpp"

namespace snb {

/// Strict "p" or "p/q" form (optional leading '-', q > 0). Throws SpecError.
Rational parse_rational(std::string_view text);

}  // namespace snb
