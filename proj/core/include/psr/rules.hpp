#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "psr/core.hpp"

namespace psr {

/// The party selection rules this library implements.
enum class RuleId {
  Do,          // direct winners only
  Stv,         // iterative plurality-loser elimination until feasible
  Gp,          // greedy addition in plurality order subject to feasibility
  Uninominal,  // single-vote baseline: DO outcome, first-choice representation
  MaxP,        // exact optimizer: lexicographic first-choice coverage
  MaxR,        // exact optimizer: any-rank coverage
  DoPlus,      // DO followed by the unrepresented-voter augmentation
  StvPlus,
  GpPlus,
};

std::string_view rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);

/// One step of a rule's execution, replayable against the procedure.
struct TraceEvent {
  enum class Action { Selected, Eliminated, Skipped };
  int party;
  Action action;
  int step;
  Rational score;  // plurality / supporter weight at decision time
};

/// One step of the unrepresented-voter augmentation: party `added` drew at
/// least tau unrepresented supporters; `removed` lost the required retained
/// support and left the outcome.
struct AugmentStep {
  int added;
  Rational unrepresented_support;
  Outcome removed;
  Outcome result;
};

struct AugmentTrace {
  std::vector<AugmentStep> steps;
};

/// A rule's outcome together with the induced assignment and execution trace.
struct RuleResult {
  Outcome outcome;
  Assignment assignment;
  std::vector<TraceEvent> trace;
  std::optional<AugmentTrace> augment;
};

// All rule evaluations are pure functions of (profile, tau) and safe to call
// concurrently; profiles are immutable and share their roster across copies.
RuleResult run_do(const Profile& profile, const Threshold& tau);
RuleResult run_stv(const Profile& profile, const Threshold& tau);
RuleResult run_gp(const Profile& profile, const Threshold& tau);
RuleResult run_uninominal(const Profile& profile, const Threshold& tau);

/// Dispatches any RuleId, including the optimizers and augmented variants.
RuleResult run_rule(RuleId rule, const Profile& profile, const Threshold& tau);

using RuleFn = std::function<RuleResult(const Profile&, const Threshold&)>;
RuleFn rule_fn(RuleId rule);

/// All outcomes reachable under some resolution of the score ties encountered
/// by STV or GP. Deduplicated and sorted. Guarded at 12 parties.
std::vector<Outcome> run_parallel_universe(RuleId rule, const Profile& profile,
                                           const Threshold& tau);

}  // namespace psr
