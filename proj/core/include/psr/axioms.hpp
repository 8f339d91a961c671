#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psr/rules.hpp"
#include "psr/sampling.hpp"

namespace psr {

enum class AxiomId {
  SetMaximality,
  WeakEfficiency,
  DirectWinners,
  SolidCoalitions,
  LocalStability,
  Unrepresented,
  ThresholdMonotonicity,
  Idlp,  // independence of definitely losing parties
  CloneIndependence,
  Reinforcement,
  Monotonicity,
  RepSpOneRisky,      // representative-strategyproofness, at most one risky party
  ShareSpSafeTop2,    // share-strategyproofness, safe party in everyone's top two
  ShareSpPromote,     // share-strategyproofness, representative promoted to first
  CoalitionInsurance,
};

std::string_view axiom_name(AxiomId axiom);
std::optional<AxiomId> axiom_from_name(std::string_view name);

/// A party's prospects from one voter's perspective, all other ballots fixed:
/// selected under every report of the voter (Safe), under none (Out), or
/// depending on the report (Risky).
enum class PartyStatus { Safe, Risky, Out };

/// A reproducible witness that a rule fails an axiom. Profiles are stored as
/// profile documents so the witness can be re-parsed and replayed.
struct Violation {
  AxiomId axiom;
  std::optional<RuleId> rule;
  std::vector<std::string> profiles;
  std::vector<Rational> taus;
  std::optional<int> voter;
  std::optional<std::string> misreport;  // rendered "a>b>c"; "" = empty ballot
  std::optional<std::string> party;
  std::optional<std::pair<std::string, std::string>> clone_pair;
  std::string narrative;
};

using CheckResult = std::optional<Violation>;

// ---- Axiom checkers. A null result means the axiom holds on the instance.

/// No feasible strict superset of the outcome exists (single-party extensions
/// suffice by subset closure).
CheckResult check_set_maximality(RuleId rule, const Profile& profile, const Threshold& tau);

/// The outcome is non-empty whenever some non-empty feasible outcome exists.
CheckResult check_weak_efficiency(RuleId rule, const Profile& profile, const Threshold& tau);

/// Every party ranked first by weight >= tau is selected.
CheckResult check_direct_winners(RuleId rule, const Profile& profile, const Threshold& tau);
CheckResult check_direct_winners(const RuleFn& rule, const Profile& profile, const Threshold& tau);

/// Every party set ranked as a common top segment by weight >= tau
/// intersects the outcome.
CheckResult check_solid_coalitions(RuleId rule, const Profile& profile, const Threshold& tau);

/// No party outside the outcome is preferred to the whole outcome by weight
/// >= tau. (Unsatisfiable in general; checked against a given outcome.)
CheckResult check_local_stability(const Profile& profile, const Threshold& tau,
                                  const Outcome& outcome);

/// No party outside the outcome is ranked by unrepresented voters of weight
/// >= tau.
CheckResult check_unrepresented(const Profile& profile, const Threshold& tau,
                                const Outcome& outcome);

/// tau <= tau' implies f(P, tau) ⊇ f(P, tau').
CheckResult check_threshold_monotonicity(RuleId rule, const Profile& profile,
                                         const Threshold& tau, const Threshold& tau_prime);

/// With S = f(P, tau) and tau <= tau': f(P, tau') = f(P|_S, tau').
CheckResult check_idlp(RuleId rule, const Profile& profile, const Threshold& tau,
                       const Threshold& tau_prime);

/// All unordered pairs ranked consecutively by every voter.
std::vector<std::pair<int, int>> find_clones(const Profile& profile);

/// Removing clone `pair.second` keeps the outcome equivalent: the surviving
/// clone is selected iff the pair intersected the outcome, and every other
/// party's selection is unchanged.
CheckResult check_clone_independence(RuleId rule, const Profile& profile, const Threshold& tau,
                                     std::pair<int, int> pair);

/// c ∈ f(P1,t1) ∩ f(P2,t2) implies c ∈ f(P1+P2, t1+t2).
CheckResult check_reinforcement(RuleId rule, const Profile& p1, const Threshold& t1,
                                const Profile& p2, const Threshold& t2);

/// Lifting a selected party in one ballot (other parties' relative order
/// unchanged) keeps it selected. Enumerates every lift of `lifted_party` in
/// ballot `voter`.
CheckResult check_monotonicity(RuleId rule, const Profile& profile, const Threshold& tau,
                               int voter, int lifted_party);

/// Safe/Risky/Out by exhaustive enumeration of the voter's possible reports
/// (all truncated rankings incl. the empty one). Guarded at 6 parties.
PartyStatus classify_party(RuleId rule, const Profile& profile, const Threshold& tau, int voter,
                           int party);
std::vector<PartyStatus> classify_parties(RuleId rule, const Profile& profile,
                                          const Threshold& tau, int voter);

/// No misreport of `voter` yields a selected party they truthfully prefer to
/// their current representative. Exhaustive over reports; guarded at 6 parties.
CheckResult check_representative_sp(RuleId rule, const Profile& profile, const Threshold& tau,
                                    int voter);

enum class SpRestriction {
  None,
  SafeTop2,               // precondition: every voter's top-2 contains a safe party
  PromoteRepresentative,  // misreports must rank the truthful representative first
};

/// No admissible misreport improves the voter's representative or strictly
/// raises the truthful representative's share. SafeTop2 checks its profile
/// precondition first and passes vacuously when it fails.
CheckResult check_share_sp(RuleId rule, const Profile& profile, const Threshold& tau, int voter,
                           SpRestriction restriction);

/// Replays the coalition-insurance scenario: a supporter of a safe party
/// switches to an allied at-risk party, pushing it over the threshold and
/// growing the liked share of parliament. Applies to any rule that includes
/// direct winners.
Violation coalition_insurance_fixture(RuleId rule);

/// The Condorcet-cycle construction showing local stability unsatisfiable:
/// for tau = n-1 a pure cycle over n parties, otherwise a tau+1 cycle padded
/// with voters ranking only a dummy party. Requires 2 <= tau <= n-1.
Profile condorcet_cycle_family(int n, int tau);

// ---- Randomized counterexample search.

struct SearchBounds {
  int max_parties = 5;
  int max_voters = 10;
  int tau_min = 0;
  int tau_max = -1;  // -1: up to the sampled voter count
};

struct SearchReport {
  std::optional<Violation> violation;
  long trials = 0;   // instances checked
  long vacuous = 0;  // trials whose precondition could not be met
};

/// Seeded random search for a violation; deterministic for a given seed.
/// Cells with a stated precondition (generic profiles for STV under Idlp and
/// CloneIndependence, the strategyproofness restrictions) only test instances
/// satisfying it.
SearchReport random_search(AxiomId axiom, RuleId rule, long trials, const SearchBounds& bounds,
                           uint64_t seed);

/// Re-runs the stored witness through its checker.
bool replay(const Violation& violation);

// ---- The published satisfied/failed matrix and its stored counterexamples.

struct TableCell {
  AxiomId axiom;
  RuleId rule;
  bool satisfied;
};

/// The eleven-axiom matrix for DO, STV and GP.
const std::vector<TableCell>& table_one();

struct StoredFixture {
  std::string name;
  AxiomId axiom;
  RuleId rule;
  std::function<CheckResult()> run;  // expected to return a violation
};

/// Stored fixtures witnessing every failed cell (plus the optimizer and
/// augmentation counterexamples).
const std::vector<StoredFixture>& stored_fixtures();

}  // namespace psr
