#pragma once

#include <vector>

#include "psr/rules.hpp"

namespace psr {

/// Parliament seats per party. Counts sum exactly to house_size.
struct SeatAllocation {
  std::vector<int> seats;  // indexed by party
  int house_size = 0;
};

/// D'Hondt highest-averages apportionment: each seat goes to the party
/// maximizing score/(seats_won+1). Quotients are compared exactly; ties are
/// broken by priority order (lower index first). Requires at least one
/// positive score.
SeatAllocation dhondt(const std::vector<Rational>& scores, int house_size);

/// D'Hondt applied to a rule result's supporter scores. The outcome must be
/// non-empty.
SeatAllocation seats_for_result(const RuleResult& result, int house_size);

}  // namespace psr
