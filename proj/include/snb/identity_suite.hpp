#pragma once

#include <optional>
#include <vector>

#include "snb/bracket.hpp"
#include "snb/check_report.hpp"
#include "snb/identities.hpp"

namespace snb {

NaryBracket<Supernumber> as_function(const BracketSpec& spec);

/// Slots 2..n. The slot-1 swap is measured (details.slot1_swap_held) but
/// never asserted.
CheckReport check_skew(const BracketSpec& spec, const CheckParams& params);
CheckReport check_leibniz_first(const BracketSpec& spec, const CheckParams& params);
CheckReport check_leibniz_inner(const BracketSpec& spec, const CheckParams& params);
CheckReport check_cyclic(const BracketSpec& spec, const CheckParams& params);
CheckReport check_fi(const BracketSpec& spec, const CheckParams& params);
/// Ternary brackets; other arities report zero trials and a note.
CheckReport check_generalized_skew(const BracketSpec& spec, const CheckParams& params);

/// Searches for an FI violation of the p-ary bracket obtained by freezing
/// the trailing n-p slots to `fixed_tail`. Report-only: the first witness is
/// stored in `failures`, an empty list means none was found.
CheckReport find_restricted_fi_failure(const BracketSpec& spec, std::span<const Supernumber> fixed_tail,
                                       const CheckParams& params);

}  // namespace snb
