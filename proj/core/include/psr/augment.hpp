#pragma once

#include "psr/rules.hpp"

namespace psr {

/// Local-search augmentation: while some unselected party is ranked by
/// unrepresented voters of weight >= tau, add the one with the most such
/// support (residual ties by priority) and drop any incumbent whose retained
/// support falls below tau. Returns the fixed point, which is feasible and
/// leaves no tau-strong group of unrepresented voters behind.
///
/// `start` must be feasible for (profile, tau).
RuleResult augment(const Profile& profile, const Threshold& tau, const Outcome& start);

/// DO+/STV+/GP+: augmentation applied to the base rule's outcome.
RuleResult run_augmented(RuleId rule, const Profile& profile, const Threshold& tau);

}  // namespace psr
