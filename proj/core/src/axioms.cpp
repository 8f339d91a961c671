#include "psr/axioms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "psr/io.hpp"
#include "psr/optrules.hpp"

namespace psr {

std::string_view axiom_name(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::SetMaximality: return "set_maximality";
    case AxiomId::WeakEfficiency: return "weak_efficiency";
    case AxiomId::DirectWinners: return "direct_winners";
    case AxiomId::SolidCoalitions: return "solid_coalitions";
    case AxiomId::LocalStability: return "local_stability";
    case AxiomId::Unrepresented: return "unrepresented";
    case AxiomId::ThresholdMonotonicity: return "threshold_monotonicity";
    case AxiomId::Idlp: return "idlp";
    case AxiomId::CloneIndependence: return "clone_independence";
    case AxiomId::Reinforcement: return "reinforcement";
    case AxiomId::Monotonicity: return "monotonicity";
    case AxiomId::RepSpOneRisky: return "rep_sp_one_risky";
    case AxiomId::ShareSpSafeTop2: return "share_sp_safe_top2";
    case AxiomId::ShareSpPromote: return "share_sp_promote";
    case AxiomId::CoalitionInsurance: return "coalition_insurance";
  }
  return "?";
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  for (AxiomId a :
       {AxiomId::SetMaximality, AxiomId::WeakEfficiency, AxiomId::DirectWinners,
        AxiomId::SolidCoalitions, AxiomId::LocalStability, AxiomId::Unrepresented,
        AxiomId::ThresholdMonotonicity, AxiomId::Idlp, AxiomId::CloneIndependence,
        AxiomId::Reinforcement, AxiomId::Monotonicity, AxiomId::RepSpOneRisky,
        AxiomId::ShareSpSafeTop2, AxiomId::ShareSpPromote, AxiomId::CoalitionInsurance})
    if (axiom_name(a) == name) return a;
  return std::nullopt;
}

namespace {

std::string id_list(const Profile& profile, const Outcome& s) {
  std::string out = "{";
  bool first = true;
  for (int p : s.members()) {
    if (!first) out += ",";
    out += profile.roster().id(p);
    first = false;
  }
  return out + "}";
}

std::string render_ranking(const Profile& profile, const std::vector<int>& ranking) {
  std::string out;
  for (size_t i = 0; i < ranking.size(); ++i) {
    if (i) out += ">";
    out += profile.roster().id(ranking[i]);
  }
  return out;
}

Violation make_violation(AxiomId axiom, std::optional<RuleId> rule,
                         std::vector<const Profile*> profiles, std::vector<Rational> taus,
                         std::string narrative) {
  Violation v;
  v.axiom = axiom;
  v.rule = rule;
  for (const Profile* p : profiles) v.profiles.push_back(write_profile(*p));
  v.taus = std::move(taus);
  v.narrative = std::move(narrative);
  return v;
}

// First entry of `ballot` (the voter's truthful ranking) lying in `s`.
int best_in(const Ballot& ballot, const Outcome& s) {
  for (int p : ballot.ranking)
    if (s.contains(p)) return p;
  return -1;
}

// The new representative strictly improves on the old one w.r.t. the voter's
// truthful ballot. A party the voter never truthfully ranked improves on
// nothing; any truthfully ranked representative beats none.
bool improves(const Ballot& truthful, int best, int best_prime) {
  if (best_prime < 0) return false;
  int pos_prime = rank_position(truthful, best_prime);
  if (pos_prime < 0) return false;
  if (best < 0) return true;
  return pos_prime < rank_position(truthful, best);
}

// All truncated rankings over m parties (every prefix of every permutation,
// including the empty ranking).
const std::vector<std::vector<int>>& reports_for(int m) {
  static const auto tables = [] {
    std::vector<std::vector<std::vector<int>>> t(7);
    for (int m = 0; m <= 6; ++m) {
      std::vector<int> cur;
      std::vector<bool> used(static_cast<size_t>(m), false);
      std::function<void()> rec = [&] {
        t[static_cast<size_t>(m)].push_back(cur);
        for (int p = 0; p < m; ++p) {
          if (used[static_cast<size_t>(p)]) continue;
          used[static_cast<size_t>(p)] = true;
          cur.push_back(p);
          rec();
          cur.pop_back();
          used[static_cast<size_t>(p)] = false;
        }
      };
      rec();
    }
    return t;
  }();
  if (m < 0 || m > 6)
    throw GuardError("misreport enumeration: too many parties (guard: 6)");
  return tables[static_cast<size_t>(m)];
}

}  // namespace

CheckResult check_set_maximality(RuleId rule, const Profile& profile, const Threshold& tau) {
  Outcome s = run_rule(rule, profile, tau).outcome;
  // by subset closure a feasible strict superset exists iff some single-party
  // extension is feasible
  for (int p = 0; p < profile.party_count(); ++p) {
    if (s.contains(p)) continue;
    if (is_feasible(profile, s.with(p), tau)) {
      Violation v = make_violation(
          AxiomId::SetMaximality, rule, {&profile}, {tau.value},
          "outcome " + id_list(profile, s) + " admits the feasible strict superset " +
              id_list(profile, s.with(p)));
      v.party = profile.roster().id(p);
      return v;
    }
  }
  return std::nullopt;
}

CheckResult check_weak_efficiency(RuleId rule, const Profile& profile, const Threshold& tau) {
  Outcome s = run_rule(rule, profile, tau).outcome;
  if (!s.empty()) return std::nullopt;
  for (int p = 0; p < profile.party_count(); ++p) {
    if (is_feasible(profile, Outcome::of({p}), tau)) {
      Violation v = make_violation(AxiomId::WeakEfficiency, rule, {&profile}, {tau.value},
                                   "outcome is empty although {" + profile.roster().id(p) +
                                       "} is feasible");
      v.party = profile.roster().id(p);
      return v;
    }
  }
  return std::nullopt;
}

namespace {

CheckResult direct_winners_impl(const RuleFn& fn, std::optional<RuleId> rule,
                                const Profile& profile, const Threshold& tau) {
  Outcome s = fn(profile, tau).outcome;
  std::vector<Rational> fp = first_place_weights(profile);
  for (int p = 0; p < profile.party_count(); ++p) {
    if (fp[static_cast<size_t>(p)] < tau.value || s.contains(p)) continue;
    Violation v = make_violation(AxiomId::DirectWinners, rule, {&profile}, {tau.value},
                                 "direct winner " + profile.roster().id(p) + " (first-place weight " +
                                     fp[static_cast<size_t>(p)].str() + ") missing from outcome " +
                                     id_list(profile, s));
    v.party = profile.roster().id(p);
    return v;
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_direct_winners(RuleId rule, const Profile& profile, const Threshold& tau) {
  return direct_winners_impl(rule_fn(rule), rule, profile, tau);
}

CheckResult check_direct_winners(const RuleFn& rule, const Profile& profile,
                                 const Threshold& tau) {
  return direct_winners_impl(rule, std::nullopt, profile, tau);
}

CheckResult check_solid_coalitions(RuleId rule, const Profile& profile, const Threshold& tau) {
  Outcome s = run_rule(rule, profile, tau).outcome;
  int m = profile.party_count();
  // voters committed to T rank exactly T as their top segment, so for tau > 0
  // only ballot prefix sets can gather tau committed weight
  std::set<uint64_t> candidates;
  if (tau.value > Rational(0)) {
    for (const Ballot& b : profile.ballots()) {
      Outcome prefix;
      for (int p : b.ranking) {
        prefix = prefix.with(p);
        candidates.insert(prefix.mask());
      }
    }
  } else {
    if (m > 12)
      throw GuardError("solid coalitions at tau=0: full subset enumeration guarded at 12");
    for (uint64_t mask = 1; mask < (1ull << m); ++mask) candidates.insert(mask);
  }
  for (uint64_t mask : candidates) {
    Outcome t = Outcome::from_mask(mask);
    if ((mask & s.mask()) != 0) continue;
    Rational committed;
    size_t size = static_cast<size_t>(t.count());
    for (const Ballot& b : profile.ballots()) {
      if (b.ranking.size() < size) continue;
      Outcome head;
      for (size_t i = 0; i < size; ++i) head = head.with(b.ranking[i]);
      if (head == t) committed += b.weight;
    }
    if (!(committed < tau.value)) {
      Violation v = make_violation(AxiomId::SolidCoalitions, rule, {&profile}, {tau.value},
                                   "solid coalition of weight " + committed.str() + " for " +
                                       id_list(profile, t) + " is unrepresented in " +
                                       id_list(profile, s));
      v.party = profile.roster().id(t.members().front());
      return v;
    }
  }
  return std::nullopt;
}

CheckResult check_local_stability(const Profile& profile, const Threshold& tau,
                                  const Outcome& outcome) {
  for (int c = 0; c < profile.party_count(); ++c) {
    if (outcome.contains(c)) continue;
    Rational weight;
    for (const Ballot& b : profile.ballots())
      if (prefers_over_set(b, c, outcome)) weight += b.weight;
    if (!(weight < tau.value)) {
      Violation v = make_violation(AxiomId::LocalStability, std::nullopt, {&profile}, {tau.value},
                                   "party " + profile.roster().id(c) + " is preferred to " +
                                       id_list(profile, outcome) + " by weight " + weight.str());
      v.party = profile.roster().id(c);
      return v;
    }
  }
  return std::nullopt;
}

CheckResult check_unrepresented(const Profile& profile, const Threshold& tau,
                                const Outcome& outcome) {
  int m = profile.party_count();
  std::vector<Rational> unrep(static_cast<size_t>(m), Rational(0));
  for (const Ballot& b : profile.ballots()) {
    if (best_in(b, outcome) >= 0) continue;
    for (int p : b.ranking) unrep[static_cast<size_t>(p)] += b.weight;
  }
  for (int c = 0; c < m; ++c) {
    if (outcome.contains(c)) continue;
    if (!(unrep[static_cast<size_t>(c)] < tau.value)) {
      Violation v = make_violation(AxiomId::Unrepresented, std::nullopt, {&profile}, {tau.value},
                                   "unrepresented voters of weight " +
                                       unrep[static_cast<size_t>(c)].str() + " all rank " +
                                       profile.roster().id(c) + ", outside " +
                                       id_list(profile, outcome));
      v.party = profile.roster().id(c);
      return v;
    }
  }
  return std::nullopt;
}

CheckResult check_threshold_monotonicity(RuleId rule, const Profile& profile,
                                         const Threshold& tau, const Threshold& tau_prime) {
  const Threshold& lo = tau.value <= tau_prime.value ? tau : tau_prime;
  const Threshold& hi = tau.value <= tau_prime.value ? tau_prime : tau;
  Outcome s_lo = run_rule(rule, profile, lo).outcome;
  Outcome s_hi = run_rule(rule, profile, hi).outcome;
  if (s_hi.subset_of(s_lo)) return std::nullopt;
  Violation v = make_violation(AxiomId::ThresholdMonotonicity, rule, {&profile},
                               {lo.value, hi.value},
                               "raising the threshold from " + lo.value.str() + " to " +
                                   hi.value.str() + " turned " + id_list(profile, s_lo) +
                                   " into the non-subset " + id_list(profile, s_hi));
  return v;
}

CheckResult check_idlp(RuleId rule, const Profile& profile, const Threshold& tau,
                       const Threshold& tau_prime) {
  const Threshold& lo = tau.value <= tau_prime.value ? tau : tau_prime;
  const Threshold& hi = tau.value <= tau_prime.value ? tau_prime : tau;
  Outcome s = run_rule(rule, profile, lo).outcome;
  Outcome lhs = run_rule(rule, profile, hi).outcome;
  Profile restricted = restrict_to(profile, s);
  Outcome rhs_local = run_rule(rule, restricted, hi).outcome;
  Outcome rhs;  // map back into the original roster
  for (int p : rhs_local.members())
    rhs = rhs.with(profile.roster().require(restricted.roster().id(p)));
  if (lhs == rhs) return std::nullopt;
  return make_violation(AxiomId::Idlp, rule, {&profile}, {lo.value, hi.value},
                        "with definitely losing parties removed (keeping " + id_list(profile, s) +
                            "), the outcome at threshold " + hi.value.str() + " changes from " +
                            id_list(profile, lhs) + " to " + id_list(profile, rhs));
}

std::vector<std::pair<int, int>> find_clones(const Profile& profile) {
  int m = profile.party_count();
  std::vector<std::pair<int, int>> clones;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      bool ok = true;
      for (const Ballot& ballot : profile.ballots()) {
        for (int x = 0; x < m && ok; ++x) {
          if (x == a || x == b) continue;
          if (prefers(ballot, a, x) != prefers(ballot, b, x) ||
              prefers(ballot, x, a) != prefers(ballot, x, b))
            ok = false;
        }
        if (!ok) break;
      }
      if (ok) clones.emplace_back(a, b);
    }
  }
  return clones;
}

CheckResult check_clone_independence(RuleId rule, const Profile& profile, const Threshold& tau,
                                     std::pair<int, int> pair) {
  int kept = pair.first, removed = pair.second;
  Outcome s = run_rule(rule, profile, tau).outcome;
  Profile reduced = restrict_to(profile, profile.full_outcome().without(removed));
  Outcome s_reduced = run_rule(rule, reduced, tau).outcome;
  Outcome s_prime;  // back in original indices
  for (int p : s_reduced.members())
    s_prime = s_prime.with(profile.roster().require(reduced.roster().id(p)));

  bool pair_selected = s.contains(kept) || s.contains(removed);
  std::string reason;
  if (pair_selected != s_prime.contains(kept)) {
    reason = "clone presence changed: pair " + std::string(pair_selected ? "in" : "out") +
             " before, survivor " + (s_prime.contains(kept) ? "in" : "out") + " after";
  } else {
    for (int x = 0; x < profile.party_count() && reason.empty(); ++x) {
      if (x == kept || x == removed) continue;
      if (s.contains(x) != s_prime.contains(x))
        reason = "party " + profile.roster().id(x) + " flipped when the clone was removed";
    }
  }
  if (reason.empty()) return std::nullopt;
  Violation v = make_violation(AxiomId::CloneIndependence, rule, {&profile}, {tau.value},
                               reason + " (outcomes " + id_list(profile, s) + " vs " +
                                   id_list(profile, s_prime) + ")");
  v.clone_pair = {profile.roster().id(kept), profile.roster().id(removed)};
  return v;
}

CheckResult check_reinforcement(RuleId rule, const Profile& p1, const Threshold& t1,
                                const Profile& p2, const Threshold& t2) {
  Outcome s1 = run_rule(rule, p1, t1).outcome;
  Outcome s2 = run_rule(rule, p2, t2).outcome;
  Profile joint = concat(p1, p2);
  Threshold tsum(t1.value + t2.value);
  Outcome s = run_rule(rule, joint, tsum).outcome;
  for (int p : s1.members()) {
    if (!s2.contains(p) || s.contains(p)) continue;
    Violation v = make_violation(AxiomId::Reinforcement, rule, {&p1, &p2}, {t1.value, t2.value},
                                 "party " + p1.roster().id(p) +
                                     " wins both profiles but not their concatenation " +
                                     id_list(p1, s));
    v.party = p1.roster().id(p);
    return v;
  }
  return std::nullopt;
}

CheckResult check_monotonicity(RuleId rule, const Profile& profile, const Threshold& tau,
                               int voter, int lifted_party) {
  Outcome s = run_rule(rule, profile, tau).outcome;
  if (!s.contains(lifted_party)) return std::nullopt;
  const Ballot& ballot = profile.ballots()[static_cast<size_t>(voter)];
  int pos = rank_position(ballot, lifted_party);
  if (pos <= 0) return std::nullopt;  // unranked or already on top
  for (int target = 0; target < pos; ++target) {
    std::vector<int> lifted = ballot.ranking;
    lifted.erase(lifted.begin() + pos);
    lifted.insert(lifted.begin() + target, lifted_party);
    Profile p_prime = profile.with_ballot(voter, lifted);
    Outcome s_prime = run_rule(rule, p_prime, tau).outcome;
    if (!s_prime.contains(lifted_party)) {
      Violation v = make_violation(
          AxiomId::Monotonicity, rule, {&profile}, {tau.value},
          "lifting " + profile.roster().id(lifted_party) + " in ballot " + std::to_string(voter) +
              " to position " + std::to_string(target + 1) + " removes it from the outcome (" +
              id_list(profile, s) + " -> " + id_list(profile, s_prime) + ")");
      v.voter = voter;
      v.party = profile.roster().id(lifted_party);
      v.misreport = render_ranking(profile, lifted);
      return v;
    }
  }
  return std::nullopt;
}

std::vector<PartyStatus> classify_parties(RuleId rule, const Profile& profile,
                                          const Threshold& tau, int voter) {
  int m = profile.party_count();
  const auto& reports = reports_for(m);
  std::vector<int> in_count(static_cast<size_t>(m), 0);
  for (const auto& report : reports) {
    Outcome s = run_rule(rule, profile.with_ballot(voter, report), tau).outcome;
    for (int p : s.members()) ++in_count[static_cast<size_t>(p)];
  }
  std::vector<PartyStatus> statuses;
  for (int p = 0; p < m; ++p) {
    int c = in_count[static_cast<size_t>(p)];
    statuses.push_back(c == 0                                    ? PartyStatus::Out
                       : c == static_cast<int>(reports.size())   ? PartyStatus::Safe
                                                                 : PartyStatus::Risky);
  }
  return statuses;
}

PartyStatus classify_party(RuleId rule, const Profile& profile, const Threshold& tau, int voter,
                           int party) {
  return classify_parties(rule, profile, tau, voter)[static_cast<size_t>(party)];
}

CheckResult check_representative_sp(RuleId rule, const Profile& profile, const Threshold& tau,
                                    int voter) {
  const Ballot& truthful = profile.ballots()[static_cast<size_t>(voter)];
  RuleResult truth = run_rule(rule, profile, tau);
  int best = truth.assignment.representative[static_cast<size_t>(voter)];
  for (const auto& report : reports_for(profile.party_count())) {
    RuleResult moved = run_rule(rule, profile.with_ballot(voter, report), tau);
    // the manipulated election assigns the voter by their cast ballot; the
    // comparison against the truthful representative uses true preferences
    int best_prime = moved.assignment.representative[static_cast<size_t>(voter)];
    if (improves(truthful, best, best_prime)) {
      Violation v = make_violation(
          AxiomId::RepSpOneRisky, rule, {&profile}, {tau.value},
          "voter " + std::to_string(voter) + " improves their representative from " +
              (best < 0 ? std::string("none") : profile.roster().id(best)) + " to " +
              profile.roster().id(best_prime) + " by reporting \"" +
              render_ranking(profile, report) + "\"");
      v.voter = voter;
      v.misreport = render_ranking(profile, report);
      v.party = profile.roster().id(best_prime);
      return v;
    }
  }
  return std::nullopt;
}

namespace {

bool safe_top2_precondition(RuleId rule, const Profile& profile, const Threshold& tau) {
  for (size_t j = 0; j < profile.ballots().size(); ++j) {
    const Ballot& b = profile.ballots()[j];
    if (b.ranking.empty()) continue;
    std::vector<PartyStatus> st = classify_parties(rule, profile, tau, static_cast<int>(j));
    bool ok = st[static_cast<size_t>(b.ranking[0])] == PartyStatus::Safe ||
              (b.ranking.size() >= 2 && st[static_cast<size_t>(b.ranking[1])] == PartyStatus::Safe);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

CheckResult check_share_sp(RuleId rule, const Profile& profile, const Threshold& tau, int voter,
                           SpRestriction restriction) {
  if (restriction == SpRestriction::SafeTop2 && !safe_top2_precondition(rule, profile, tau))
    return std::nullopt;  // precondition unmet: not a counterexample instance

  const Ballot& truthful = profile.ballots()[static_cast<size_t>(voter)];
  RuleResult truth = run_rule(rule, profile, tau);
  int rep = truth.assignment.representative[static_cast<size_t>(voter)];
  Rational share =
      rep >= 0 ? truth.assignment.shares[static_cast<size_t>(rep)] : Rational(0);

  for (const auto& report : reports_for(profile.party_count())) {
    if (restriction == SpRestriction::PromoteRepresentative &&
        (rep < 0 || report.empty() || report.front() != rep))
      continue;
    RuleResult moved = run_rule(rule, profile.with_ballot(voter, report), tau);
    int best_prime = moved.assignment.representative[static_cast<size_t>(voter)];
    Rational share_prime =
        rep >= 0 ? moved.assignment.shares[static_cast<size_t>(rep)] : Rational(0);
    bool better_rep = improves(truthful, rep, best_prime);
    bool better_share = rep >= 0 && share < share_prime;
    if (better_rep || better_share) {
      AxiomId axiom = restriction == SpRestriction::PromoteRepresentative
                          ? AxiomId::ShareSpPromote
                          : AxiomId::ShareSpSafeTop2;
      std::ostringstream what;
      what << "voter " << voter << " reporting \"" << render_ranking(profile, report) << "\" ";
      if (better_share)
        what << "raises the share of " << profile.roster().id(rep) << " from " << share.str()
             << " to " << share_prime.str();
      else
        what << "improves their representative to " << profile.roster().id(best_prime);
      Violation v = make_violation(axiom, rule, {&profile}, {tau.value}, what.str());
      v.voter = voter;
      v.misreport = render_ranking(profile, report);
      if (rep >= 0) v.party = profile.roster().id(rep);
      return v;
    }
  }
  return std::nullopt;
}

Violation coalition_insurance_fixture(RuleId rule) {
  ParsedProfile doc = parse_profile(
      "#! parties: a,b,c,d\n"
      "3: a\n3: b\n4: c\n2: d\n1: c>d\n");
  Threshold tau{Rational(3)};
  const Profile& profile = doc.profile;

  RuleResult truth = run_rule(rule, profile, tau);
  Profile switched = profile.with_ballot(4, {3, 2});  // the c>d voter reports d>c
  RuleResult moved = run_rule(rule, switched, tau);

  Outcome expected_before = outcome_of_ids(profile, {"a", "b", "c"});
  Outcome expected_after = outcome_of_ids(profile, {"a", "b", "c", "d"});
  if (truth.outcome != expected_before || moved.outcome != expected_after)
    throw std::logic_error("coalition insurance fixture requires a rule that includes direct "
                           "winners");

  // liked share: combined share of the parties the voter actually ranks
  auto liked_share = [&](const RuleResult& r) {
    Rational total;
    for (int p : {2, 3})
      if (r.outcome.contains(p)) total += r.assignment.shares[static_cast<size_t>(p)];
    return total;
  };
  Rational before = liked_share(truth);
  Rational after = liked_share(moved);
  if (!(before == Rational(5, 11) && after == Rational(7, 13)))
    throw std::logic_error("coalition insurance fixture: unexpected liked shares");

  Violation v = make_violation(
      AxiomId::CoalitionInsurance, rule, {&profile}, {tau.value},
      "switching the last ballot from c>d to d>c pushes d over the threshold: outcome " +
          id_list(profile, truth.outcome) + " -> " + id_list(profile, moved.outcome) +
          ", liked share 5/11 -> 7/13");
  v.voter = 4;
  v.misreport = "d>c";
  v.party = "d";
  return v;
}

Profile condorcet_cycle_family(int n, int tau) {
  if (n < 3 || tau < 2 || tau > n - 1)
    throw InputError("condorcet family requires n >= 3 and 2 <= tau <= n-1");
  auto cycle_ballots = [](int parties) {
    // voter i ranks everyone but party i, starting just after it cyclically
    std::vector<std::vector<int>> rankings;
    for (int i = 0; i < parties; ++i) {
      std::vector<int> r;
      for (int k = 1; k < parties; ++k) r.push_back((i + k) % parties);
      rankings.push_back(std::move(r));
    }
    return rankings;
  };
  std::vector<std::string> ids;
  std::vector<Ballot> ballots;
  if (tau == n - 1) {
    for (int i = 0; i < n; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
    for (auto& r : cycle_ballots(n)) ballots.push_back({std::move(r), Rational(1)});
  } else {
    int cycle = tau + 1;
    for (int i = 0; i < cycle; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
    ids.push_back("d0");  // dummy absorbing the remaining voters
    for (auto& r : cycle_ballots(cycle)) ballots.push_back({std::move(r), Rational(1)});
    for (int i = 0; i < n - cycle; ++i) ballots.push_back({{cycle}, Rational(1)});
  }
  return Profile(Roster::from_ids(ids), std::move(ballots));
}

// ---------------------------------------------------------------------------
// randomized search

namespace {

struct TrialContext {
  CounterRng rng;
  const SearchBounds& bounds;
};

Rational sample_tau(CounterRng& rng, const SearchBounds& bounds, const Profile& profile) {
  int n = static_cast<int>(profile.ballots().size());  // unit weights
  int hi = bounds.tau_max >= 0 ? std::min(bounds.tau_max, n) : n;
  int lo = std::min(bounds.tau_min, hi);
  return Rational(rng.uniform_int(lo, hi));
}

// Cached rule evaluations of every possible report of one voter.
struct VoterScan {
  const std::vector<std::vector<int>>* reports;
  std::vector<RuleResult> results;
};

VoterScan scan_voter(RuleId rule, const Profile& profile, const Threshold& tau, int voter) {
  VoterScan scan;
  scan.reports = &reports_for(profile.party_count());
  scan.results.reserve(scan.reports->size());
  for (const auto& report : *scan.reports)
    scan.results.push_back(run_rule(rule, profile.with_ballot(voter, report), tau));
  return scan;
}

int risky_count(const VoterScan& scan, int m) {
  std::vector<int> in_count(static_cast<size_t>(m), 0);
  for (const RuleResult& r : scan.results)
    for (int p : r.outcome.members()) ++in_count[static_cast<size_t>(p)];
  int risky = 0;
  for (int p = 0; p < m; ++p)
    if (in_count[static_cast<size_t>(p)] != 0 &&
        in_count[static_cast<size_t>(p)] != static_cast<int>(scan.results.size()))
      ++risky;
  return risky;
}

bool voter_has_safe_top2(const VoterScan& scan, const Ballot& ballot, int m) {
  if (ballot.ranking.empty()) return true;
  std::vector<int> in_count(static_cast<size_t>(m), 0);
  for (const RuleResult& r : scan.results)
    for (int p : r.outcome.members()) ++in_count[static_cast<size_t>(p)];
  auto safe = [&](int p) {
    return in_count[static_cast<size_t>(p)] == static_cast<int>(scan.results.size());
  };
  return safe(ballot.ranking[0]) || (ballot.ranking.size() >= 2 && safe(ballot.ranking[1]));
}

// Searches one voter's cached scan for a representative or share manipulation.
CheckResult scan_for_manipulation(AxiomId axiom, RuleId rule, const Profile& profile,
                                  const Threshold& tau, int voter, const VoterScan& scan,
                                  const RuleResult& truth, bool share_matters,
                                  bool promote_only) {
  const Ballot& truthful = profile.ballots()[static_cast<size_t>(voter)];
  int rep = truth.assignment.representative[static_cast<size_t>(voter)];
  Rational share = rep >= 0 ? truth.assignment.shares[static_cast<size_t>(rep)] : Rational(0);
  for (size_t k = 0; k < scan.results.size(); ++k) {
    const std::vector<int>& report = (*scan.reports)[k];
    if (promote_only && (rep < 0 || report.empty() || report.front() != rep)) continue;
    const RuleResult& moved = scan.results[k];
    int best_prime = moved.assignment.representative[static_cast<size_t>(voter)];
    bool better_rep = improves(truthful, rep, best_prime);
    bool better_share =
        share_matters && rep >= 0 &&
        share < moved.assignment.shares[static_cast<size_t>(rep)];
    if (!better_rep && !better_share) continue;
    Violation v = make_violation(
        axiom, rule, {&profile}, {tau.value},
        "voter " + std::to_string(voter) + " gains by reporting \"" +
            render_ranking(profile, report) + "\"" +
            (better_share ? " (share of " + profile.roster().id(rep) + " rises)" : ""));
    v.voter = voter;
    v.misreport = render_ranking(profile, report);
    if (rep >= 0) v.party = profile.roster().id(rep);
    return v;
  }
  return std::nullopt;
}

enum class SpKind { OneRisky, SafeTop2, Promote };

// Strategyproofness trial: sample an instance meeting the precondition, then
// look for a manipulation by any voter (reusing the qualification scans).
CheckResult sp_trial(SpKind kind, AxiomId axiom, RuleId rule, CounterRng& rng,
                     const SearchBounds& bounds, bool& qualified) {
  constexpr int kAttempts = 100;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Profile profile = random_profile(rng, std::min(bounds.max_parties, 6), bounds.max_voters);
    Threshold tau{sample_tau(rng, bounds, profile)};
    int n = static_cast<int>(profile.ballots().size());
    int m = profile.party_count();

    std::vector<VoterScan> scans;
    scans.reserve(static_cast<size_t>(n));
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      scans.push_back(scan_voter(rule, profile, tau, j));
      if (kind == SpKind::OneRisky)
        ok = risky_count(scans.back(), m) <= 1;
      else if (kind == SpKind::SafeTop2)
        ok = voter_has_safe_top2(scans.back(), profile.ballots()[static_cast<size_t>(j)], m);
    }
    if (!ok) continue;

    qualified = true;
    RuleResult truth = run_rule(rule, profile, tau);
    bool share_matters = kind != SpKind::OneRisky;
    bool promote_only = kind == SpKind::Promote;
    for (int j = 0; j < n; ++j) {
      CheckResult found = scan_for_manipulation(axiom, rule, profile, tau, j,
                                                scans[static_cast<size_t>(j)], truth,
                                                share_matters, promote_only);
      if (found) return found;
    }
    return std::nullopt;
  }
  qualified = false;
  return std::nullopt;
}

}  // namespace

SearchReport random_search(AxiomId axiom, RuleId rule, long trials, const SearchBounds& bounds,
                           uint64_t seed) {
  SearchReport report;
  constexpr int kAttempts = 100;
  for (long t = 0; t < trials; ++t) {
    CounterRng rng(mix64(seed, static_cast<uint64_t>(t)));
    CheckResult found;
    bool qualified = true;
    switch (axiom) {
      case AxiomId::SetMaximality:
      case AxiomId::WeakEfficiency:
      case AxiomId::DirectWinners:
      case AxiomId::SolidCoalitions:
      case AxiomId::LocalStability:
      case AxiomId::Unrepresented: {
        Profile p = random_profile(rng, bounds.max_parties, bounds.max_voters);
        Threshold tau{sample_tau(rng, bounds, p)};
        if (axiom == AxiomId::SetMaximality) found = check_set_maximality(rule, p, tau);
        else if (axiom == AxiomId::WeakEfficiency) found = check_weak_efficiency(rule, p, tau);
        else if (axiom == AxiomId::DirectWinners) found = check_direct_winners(rule, p, tau);
        else if (axiom == AxiomId::SolidCoalitions) found = check_solid_coalitions(rule, p, tau);
        else {
          Outcome s = run_rule(rule, p, tau).outcome;
          found = axiom == AxiomId::LocalStability ? check_local_stability(p, tau, s)
                                                   : check_unrepresented(p, tau, s);
          if (found) found->rule = rule;
        }
        break;
      }
      case AxiomId::ThresholdMonotonicity:
      case AxiomId::Idlp: {
        qualified = false;
        for (int a = 0; a < kAttempts && !qualified; ++a) {
          Profile p = random_profile(rng, bounds.max_parties, bounds.max_voters);
          if (axiom == AxiomId::Idlp && rule == RuleId::Stv && !is_generic(p)) continue;
          qualified = true;
          Threshold t1{sample_tau(rng, bounds, p)};
          Threshold t2{sample_tau(rng, bounds, p)};
          found = axiom == AxiomId::Idlp ? check_idlp(rule, p, t1, t2)
                                         : check_threshold_monotonicity(rule, p, t1, t2);
        }
        break;
      }
      case AxiomId::CloneIndependence: {
        qualified = false;
        for (int a = 0; a < kAttempts && !qualified; ++a) {
          CloneInstance inst =
              random_clone_profile(rng, bounds.max_parties, bounds.max_voters);
          if (rule == RuleId::Stv && !is_generic(inst.profile)) continue;
          qualified = true;
          Threshold tau{sample_tau(rng, bounds, inst.profile)};
          found = check_clone_independence(rule, inst.profile, tau,
                                           {inst.clone_a, inst.clone_b});
          if (!found)
            found = check_clone_independence(rule, inst.profile, tau,
                                             {inst.clone_b, inst.clone_a});
        }
        break;
      }
      case AxiomId::Reinforcement: {
        Profile p1 = random_profile(rng, bounds.max_parties, bounds.max_voters);
        Profile p2 = random_profile_over(rng, p1.roster_ptr(), bounds.max_voters);
        Threshold t1{sample_tau(rng, bounds, p1)};
        Threshold t2{sample_tau(rng, bounds, p2)};
        found = check_reinforcement(rule, p1, t1, p2, t2);
        break;
      }
      case AxiomId::Monotonicity: {
        Profile p = random_profile(rng, bounds.max_parties, bounds.max_voters);
        Threshold tau{sample_tau(rng, bounds, p)};
        Outcome s = run_rule(rule, p, tau).outcome;
        for (size_t j = 0; j < p.ballots().size() && !found; ++j)
          for (int c : s.members()) {
            found = check_monotonicity(rule, p, tau, static_cast<int>(j), c);
            if (found) break;
          }
        break;
      }
      case AxiomId::RepSpOneRisky:
        found = sp_trial(SpKind::OneRisky, axiom, rule, rng, bounds, qualified);
        break;
      case AxiomId::ShareSpSafeTop2:
        found = sp_trial(SpKind::SafeTop2, axiom, rule, rng, bounds, qualified);
        break;
      case AxiomId::ShareSpPromote:
        found = sp_trial(SpKind::Promote, axiom, rule, rng, bounds, qualified);
        break;
      case AxiomId::CoalitionInsurance:
        throw InputError("coalition insurance is a stored scenario, not a searchable axiom");
    }
    ++report.trials;
    if (!qualified) ++report.vacuous;
    if (found) {
      found->rule = rule;
      report.violation = std::move(found);
      return report;
    }
  }
  return report;
}

bool replay(const Violation& violation) {
  std::vector<Profile> profiles;
  for (const std::string& doc : violation.profiles)
    profiles.push_back(parse_profile(doc).profile);
  if (profiles.empty()) return false;
  const Profile& p = profiles.front();
  Threshold tau{violation.taus.at(0)};
  RuleId rule = violation.rule.value_or(RuleId::Do);
  switch (violation.axiom) {
    case AxiomId::SetMaximality: return check_set_maximality(rule, p, tau).has_value();
    case AxiomId::WeakEfficiency: return check_weak_efficiency(rule, p, tau).has_value();
    case AxiomId::DirectWinners: return check_direct_winners(rule, p, tau).has_value();
    case AxiomId::SolidCoalitions: return check_solid_coalitions(rule, p, tau).has_value();
    case AxiomId::LocalStability:
      return check_local_stability(p, tau, run_rule(rule, p, tau).outcome).has_value();
    case AxiomId::Unrepresented:
      return check_unrepresented(p, tau, run_rule(rule, p, tau).outcome).has_value();
    case AxiomId::ThresholdMonotonicity:
      return check_threshold_monotonicity(rule, p, tau, Threshold{violation.taus.at(1)})
          .has_value();
    case AxiomId::Idlp:
      return check_idlp(rule, p, tau, Threshold{violation.taus.at(1)}).has_value();
    case AxiomId::CloneIndependence: {
      if (!violation.clone_pair) return false;
      int kept = p.roster().require(violation.clone_pair->first);
      int removed = p.roster().require(violation.clone_pair->second);
      return check_clone_independence(rule, p, tau, {kept, removed}).has_value();
    }
    case AxiomId::Reinforcement:
      return check_reinforcement(rule, p, tau, profiles.at(1), Threshold{violation.taus.at(1)})
          .has_value();
    case AxiomId::Monotonicity: {
      if (!violation.voter || !violation.party) return false;
      int c = p.roster().require(*violation.party);
      return check_monotonicity(rule, p, tau, *violation.voter, c).has_value();
    }
    case AxiomId::RepSpOneRisky:
      return violation.voter && check_representative_sp(rule, p, tau, *violation.voter)
          .has_value();
    case AxiomId::ShareSpSafeTop2:
      return violation.voter &&
             check_share_sp(rule, p, tau, *violation.voter, SpRestriction::SafeTop2).has_value();
    case AxiomId::ShareSpPromote:
      return violation.voter &&
             check_share_sp(rule, p, tau, *violation.voter, SpRestriction::PromoteRepresentative)
                 .has_value();
    case AxiomId::CoalitionInsurance:
      coalition_insurance_fixture(rule);
      return true;
  }
  return false;
}

}  // namespace psr
