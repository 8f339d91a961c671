#include "psr/rules.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "psr/augment.hpp"
#include "psr/optrules.hpp"

namespace psr {

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::Do: return "do";
    case RuleId::Stv: return "stv";
    case RuleId::Gp: return "gp";
    case RuleId::Uninominal: return "uninominal";
    case RuleId::MaxP: return "maxp";
    case RuleId::MaxR: return "maxr";
    case RuleId::DoPlus: return "do+";
    case RuleId::StvPlus: return "stv+";
    case RuleId::GpPlus: return "gp+";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (RuleId r : {RuleId::Do, RuleId::Stv, RuleId::Gp, RuleId::Uninominal, RuleId::MaxP,
                   RuleId::MaxR, RuleId::DoPlus, RuleId::StvPlus, RuleId::GpPlus})
    if (rule_name(r) == name) return r;
  return std::nullopt;
}

RuleResult run_do(const Profile& profile, const Threshold& tau) {
  check_threshold(profile, tau);
  std::vector<Rational> fp = first_place_weights(profile);
  RuleResult result;
  for (int p = 0; p < profile.party_count(); ++p) {
    bool in = !(fp[static_cast<size_t>(p)] < tau.value);
    if (in) result.outcome = result.outcome.with(p);
    result.trace.push_back({p, in ? TraceEvent::Action::Selected : TraceEvent::Action::Skipped, p,
                            fp[static_cast<size_t>(p)]});
  }
  result.assignment = best_assignment(profile, result.outcome);
  return result;
}

RuleResult run_stv(const Profile& profile, const Threshold& tau) {
  check_threshold(profile, tau);
  RuleResult result;
  Outcome s = profile.full_outcome();
  int step = 0;
  while (!s.empty()) {
    std::vector<Rational> scores = supporter_scores(profile, s);
    // plurality loser among the remaining parties; ties eliminate the
    // lowest-priority (largest index) party
    int loser = -1;
    bool feasible = true;
    for (int p : s.members()) {
      const Rational& sc = scores[static_cast<size_t>(p)];
      if (sc < tau.value) feasible = false;
      if (loser < 0 || sc < scores[static_cast<size_t>(loser)] ||
          sc == scores[static_cast<size_t>(loser)])
        loser = p;  // members() ascends, so equal scores land on the larger index
    }
    if (feasible) break;
    result.trace.push_back({loser, TraceEvent::Action::Eliminated, step++,
                            scores[static_cast<size_t>(loser)]});
    s = s.without(loser);
  }
  result.outcome = s;
  result.assignment = best_assignment(profile, s);
  for (int p : s.members())
    result.trace.push_back({p, TraceEvent::Action::Selected, step,
                            result.assignment.scores[static_cast<size_t>(p)]});
  return result;
}

namespace {

// GP consideration order: descending full-profile plurality, ties by priority.
std::vector<int> gp_order(const Profile& profile, const std::vector<Rational>& fp) {
  std::vector<int> order(static_cast<size_t>(profile.party_count()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return fp[static_cast<size_t>(b)] < fp[static_cast<size_t>(a)];
  });
  return order;
}

}  // namespace

RuleResult run_gp(const Profile& profile, const Threshold& tau) {
  check_threshold(profile, tau);
  std::vector<Rational> fp = first_place_weights(profile);
  RuleResult result;
  int step = 0;
  for (int p : gp_order(profile, fp)) {
    Outcome grown = result.outcome.with(p);
    if (is_feasible(profile, grown, tau)) {
      result.outcome = grown;
      result.trace.push_back(
          {p, TraceEvent::Action::Selected, step++, fp[static_cast<size_t>(p)]});
    } else {
      result.trace.push_back(
          {p, TraceEvent::Action::Skipped, step++, fp[static_cast<size_t>(p)]});
    }
  }
  result.assignment = best_assignment(profile, result.outcome);
  return result;
}

RuleResult run_uninominal(const Profile& profile, const Threshold& tau) {
  check_threshold(profile, tau);
  std::vector<Rational> fp = first_place_weights(profile);
  RuleResult result;
  int m = profile.party_count();
  for (int p = 0; p < m; ++p) {
    bool in = !(fp[static_cast<size_t>(p)] < tau.value);
    if (in) result.outcome = result.outcome.with(p);
    result.trace.push_back({p, in ? TraceEvent::Action::Selected : TraceEvent::Action::Skipped, p,
                            fp[static_cast<size_t>(p)]});
  }
  // a voter counts only toward their first-ranked party
  Assignment& a = result.assignment;
  a.scores.assign(static_cast<size_t>(m), Rational(0));
  a.shares.assign(static_cast<size_t>(m), Rational(0));
  for (const Ballot& b : profile.ballots()) {
    int rep = -1;
    if (!b.ranking.empty() && result.outcome.contains(b.ranking.front())) rep = b.ranking.front();
    a.representative.push_back(rep);
    a.rep_rank.push_back(rep >= 0 ? 1 : 0);
    if (rep >= 0) {
      a.scores[static_cast<size_t>(rep)] += b.weight;
      a.represented_weight += b.weight;
    } else {
      a.unrepresented_weight += b.weight;
    }
  }
  if (!a.represented_weight.is_zero())
    for (int p = 0; p < m; ++p)
      a.shares[static_cast<size_t>(p)] = a.scores[static_cast<size_t>(p)] / a.represented_weight;
  return result;
}

RuleResult run_rule(RuleId rule, const Profile& profile, const Threshold& tau) {
  switch (rule) {
    case RuleId::Do: return run_do(profile, tau);
    case RuleId::Stv: return run_stv(profile, tau);
    case RuleId::Gp: return run_gp(profile, tau);
    case RuleId::Uninominal: return run_uninominal(profile, tau);
    case RuleId::MaxP: return run_maxp(profile, tau);
    case RuleId::MaxR: return run_maxr(profile, tau);
    case RuleId::DoPlus:
    case RuleId::StvPlus:
    case RuleId::GpPlus: return run_augmented(rule, profile, tau);
  }
  throw InputError("unknown rule");
}

RuleFn rule_fn(RuleId rule) {
  return [rule](const Profile& p, const Threshold& t) { return run_rule(rule, p, t); };
}

namespace {

void universe_stv(const Profile& profile, const Threshold& tau, const Outcome& s,
                  std::unordered_set<uint64_t>& seen, std::set<uint64_t>& outcomes) {
  if (!seen.insert(s.mask()).second) return;
  if (s.empty()) {
    outcomes.insert(s.mask());
    return;
  }
  std::vector<Rational> scores = supporter_scores(profile, s);
  bool feasible = true;
  const Rational* min_score = nullptr;
  for (int p : s.members()) {
    const Rational& sc = scores[static_cast<size_t>(p)];
    if (sc < tau.value) feasible = false;
    if (!min_score || sc < *min_score) min_score = &scores[static_cast<size_t>(p)];
  }
  if (feasible) {
    outcomes.insert(s.mask());
    return;
  }
  for (int p : s.members())
    if (scores[static_cast<size_t>(p)] == *min_score)
      universe_stv(profile, tau, s.without(p), seen, outcomes);
}

struct GpState {
  uint64_t considered;
  uint64_t selected;
  bool operator==(const GpState&) const = default;
};
struct GpStateHash {
  size_t operator()(const GpState& s) const {
    return std::hash<uint64_t>()(s.considered * 0x9e3779b97f4a7c15ull ^ s.selected);
  }
};

void universe_gp(const Profile& profile, const Threshold& tau, const std::vector<Rational>& fp,
                 GpState state, std::unordered_set<GpState, GpStateHash>& seen,
                 std::set<uint64_t>& outcomes) {
  if (!seen.insert(state).second) return;
  int m = profile.party_count();
  const Rational* max_fp = nullptr;
  for (int p = 0; p < m; ++p)
    if (!((state.considered >> p) & 1u))
      if (!max_fp || *max_fp < fp[static_cast<size_t>(p)]) max_fp = &fp[static_cast<size_t>(p)];
  if (!max_fp) {
    outcomes.insert(state.selected);
    return;
  }
  for (int p = 0; p < m; ++p) {
    if ((state.considered >> p) & 1u) continue;
    if (!(fp[static_cast<size_t>(p)] == *max_fp)) continue;
    Outcome grown = Outcome::from_mask(state.selected).with(p);
    uint64_t next_sel =
        is_feasible(profile, grown, tau) ? grown.mask() : state.selected;
    universe_gp(profile, tau, fp, {state.considered | (1ull << p), next_sel}, seen, outcomes);
  }
}

}  // namespace

std::vector<Outcome> run_parallel_universe(RuleId rule, const Profile& profile,
                                           const Threshold& tau) {
  if (profile.party_count() > 12)
    throw GuardError("parallel-universe evaluation: too many parties (guard: 12)");
  check_threshold(profile, tau);
  std::set<uint64_t> outcomes;
  if (rule == RuleId::Stv) {
    std::unordered_set<uint64_t> seen;
    universe_stv(profile, tau, profile.full_outcome(), seen, outcomes);
  } else if (rule == RuleId::Gp) {
    std::unordered_set<GpState, GpStateHash> seen;
    universe_gp(profile, tau, first_place_weights(profile), {0, 0}, seen, outcomes);
  } else {
    throw InputError("parallel-universe evaluation applies to stv and gp only");
  }
  std::vector<Outcome> result;
  result.reserve(outcomes.size());
  for (uint64_t mask : outcomes) result.push_back(Outcome::from_mask(mask));
  return result;
}

}  // namespace psr
