#include "psr/augment.hpp"

#include <unordered_set>

namespace psr {

RuleResult augment(const Profile& profile, const Threshold& tau, const Outcome& start) {
  check_threshold(profile, tau);
  if (!is_feasible(profile, start, tau))
    throw InputError("augment: starting outcome is not feasible");

  int m = profile.party_count();
  Outcome s = start;
  AugmentTrace trace;
  std::unordered_set<uint64_t> visited;  // the termination proof excludes cycles
  visited.insert(s.mask());

  for (;;) {
    // support from currently unrepresented voters, per unselected party
    std::vector<Rational> unrep(static_cast<size_t>(m), Rational(0));
    for (const Ballot& b : profile.ballots()) {
      bool represented = false;
      for (int p : b.ranking)
        if (s.contains(p)) {
          represented = true;
          break;
        }
      if (represented) continue;
      for (int p : b.ranking) unrep[static_cast<size_t>(p)] += b.weight;
    }
    int added = -1;
    for (int p = 0; p < m; ++p) {
      if (s.contains(p) || unrep[static_cast<size_t>(p)] < tau.value) continue;
      if (added < 0 || unrep[static_cast<size_t>(added)] < unrep[static_cast<size_t>(p)])
        added = p;  // most unrepresented supporters; residual ties by priority
    }
    if (added < 0) break;

    // incumbents whose support ranked above the newcomer falls below tau
    std::vector<Rational> retained(static_cast<size_t>(m), Rational(0));
    for (const Ballot& b : profile.ballots()) {
      for (int p : b.ranking) {
        if (s.contains(p)) {
          if (prefers(b, p, added)) retained[static_cast<size_t>(p)] += b.weight;
          break;
        }
      }
    }
    Outcome removed;
    for (int p : s.members())
      if (retained[static_cast<size_t>(p)] < tau.value) removed = removed.with(p);

    Outcome next = s.with(added);
    for (int p : removed.members()) next = next.without(p);
    trace.steps.push_back({added, unrep[static_cast<size_t>(added)], removed, next});
    s = next;
    if (!is_feasible(profile, s, tau))
      throw std::logic_error("augment: intermediate outcome lost feasibility");
    if (!visited.insert(s.mask()).second)
      throw std::logic_error("augment: revisited an outcome; cycle detector tripped");
  }

  RuleResult result;
  result.outcome = s;
  result.assignment = best_assignment(profile, s);
  int step = 0;
  for (int p : s.members())
    result.trace.push_back({p, TraceEvent::Action::Selected, step++,
                            result.assignment.scores[static_cast<size_t>(p)]});
  result.augment = std::move(trace);
  return result;
}

RuleResult run_augmented(RuleId rule, const Profile& profile, const Threshold& tau) {
  RuleId base;
  switch (rule) {
    case RuleId::DoPlus: base = RuleId::Do; break;
    case RuleId::StvPlus: base = RuleId::Stv; break;
    case RuleId::GpPlus: base = RuleId::Gp; break;
    default: throw InputError("run_augmented expects do+, stv+ or gp+");
  }
  RuleResult base_result = run_rule(base, profile, tau);
  RuleResult result = augment(profile, tau, base_result.outcome);
  // keep the base rule's decisions in front of the augmentation's selections
  std::vector<TraceEvent> trace = std::move(base_result.trace);
  trace.insert(trace.end(), result.trace.begin(), result.trace.end());
  result.trace = std::move(trace);
  return result;
}

}  // namespace psr
