#pragma once

#include <compare>
#include <vector>

#include "psr/rules.hpp"

namespace psr {

/// Per-position coverage counts: entry k is the total weight of voters whose
/// best selected party sits at rank <= k+1 of their ballot. Entries are
/// non-decreasing and bounded by the profile's total weight.
struct ObjectiveVector {
  std::vector<Rational> coverage;

  bool operator==(const ObjectiveVector&) const = default;
  std::strong_ordering operator<=>(const ObjectiveVector& o) const;
};

ObjectiveVector objective_vector(const Profile& profile, const Outcome& outcome);

/// Total weight of voters ranking at least one member of the outcome.
Rational ranked_any_weight(const Profile& profile, const Outcome& outcome);

/// Every feasible subset of the roster, by subset enumeration with
/// subset-closure pruning. Guarded at 12 parties.
std::vector<Outcome> enumerate_feasible(const Profile& profile, const Threshold& tau);

/// Exact branch-and-bound optimizers over the feasible outcomes. Ties are
/// broken toward the lexicographically maximal party set in priority order.
/// Guarded at 16 parties.
RuleResult run_maxp(const Profile& profile, const Threshold& tau);
RuleResult run_maxr(const Profile& profile, const Threshold& tau);

}  // namespace psr
