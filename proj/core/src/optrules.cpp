#include "psr/optrules.hpp"

#include <algorithm>

namespace psr {

std::strong_ordering ObjectiveVector::operator<=>(const ObjectiveVector& o) const {
  size_t n = std::min(coverage.size(), o.coverage.size());
  for (size_t i = 0; i < n; ++i) {
    auto c = coverage[i] <=> o.coverage[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return coverage.size() <=> o.coverage.size();
}

ObjectiveVector objective_vector(const Profile& profile, const Outcome& outcome) {
  size_t len = 0;
  for (const Ballot& b : profile.ballots()) len = std::max(len, b.ranking.size());
  ObjectiveVector v;
  v.coverage.assign(len, Rational(0));
  for (const Ballot& b : profile.ballots()) {
    for (size_t i = 0; i < b.ranking.size(); ++i) {
      if (outcome.contains(b.ranking[i])) {
        v.coverage[i] += b.weight;
        break;
      }
    }
  }
  for (size_t i = 1; i < len; ++i) v.coverage[i] += v.coverage[i - 1];
  return v;
}

Rational ranked_any_weight(const Profile& profile, const Outcome& outcome) {
  Rational w;
  for (const Ballot& b : profile.ballots())
    for (int p : b.ranking)
      if (outcome.contains(p)) {
        w += b.weight;
        break;
      }
  return w;
}

std::vector<Outcome> enumerate_feasible(const Profile& profile, const Threshold& tau) {
  int m = profile.party_count();
  if (m > 12) throw GuardError("enumerate_feasible: too many parties (guard: 12)");
  check_threshold(profile, tau);
  std::vector<Outcome> feasible;
  std::vector<char> infeasible(static_cast<size_t>(1) << m, 0);
  for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
    bool inf = false;
    // a superset of an infeasible set is infeasible
    for (uint64_t rest = mask; rest != 0 && !inf; rest &= rest - 1)
      inf = infeasible[mask & ~(rest & -rest)];
    if (!inf) inf = !is_feasible(profile, Outcome::from_mask(mask), tau);
    infeasible[mask] = inf ? 1 : 0;
    if (!inf) feasible.push_back(Outcome::from_mask(mask));
  }
  return feasible;
}

namespace {

// True iff at the highest-priority party where the sets differ, `a` contains it.
bool set_lex_greater(uint64_t a, uint64_t b) {
  uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a >> __builtin_ctzll(diff)) & 1u;
}

struct Optimizer {
  const Profile& profile;
  const Threshold& tau;
  bool lexicographic;  // MaxP: full per-rank vector; MaxR: represented weight only
  std::vector<int> order;

  ObjectiveVector best_vec;
  uint64_t best_mask = 0;
  bool has_incumbent = false;

  ObjectiveVector objective(uint64_t mask) const {
    if (lexicographic) return objective_vector(profile, Outcome::from_mask(mask));
    ObjectiveVector v;
    v.coverage.push_back(ranked_any_weight(profile, Outcome::from_mask(mask)));
    return v;
  }

  void consider(uint64_t mask) {
    ObjectiveVector v = objective(mask);
    if (!has_incumbent || best_vec < v || (v == best_vec && set_lex_greater(mask, best_mask))) {
      best_vec = std::move(v);
      best_mask = mask;
      has_incumbent = true;
    }
  }

  void search(size_t idx, uint64_t included) {
    if (idx == order.size()) {
      consider(included);
      return;
    }
    if (has_incumbent) {
      uint64_t rest = 0;
      for (size_t i = idx; i < order.size(); ++i) rest |= 1ull << order[i];
      ObjectiveVector optimistic = objective(included | rest);
      auto cmp = optimistic <=> best_vec;
      if (cmp == std::strong_ordering::less) return;
      if (cmp == std::strong_ordering::equal && !set_lex_greater(included | rest, best_mask))
        return;
    }
    uint64_t with = included | (1ull << order[idx]);
    if (is_feasible(profile, Outcome::from_mask(with), tau)) search(idx + 1, with);
    search(idx + 1, included);
  }
};

RuleResult run_optimizer(const Profile& profile, const Threshold& tau, bool lexicographic) {
  if (profile.party_count() > 16)
    throw GuardError("optimizer rules: too many parties (guard: 16)");
  check_threshold(profile, tau);
  std::vector<Rational> fp = first_place_weights(profile);
  Optimizer opt{profile, tau, lexicographic, {}, {}};
  opt.order.resize(static_cast<size_t>(profile.party_count()));
  for (size_t i = 0; i < opt.order.size(); ++i) opt.order[i] = static_cast<int>(i);
  std::stable_sort(opt.order.begin(), opt.order.end(), [&](int a, int b) {
    return fp[static_cast<size_t>(b)] < fp[static_cast<size_t>(a)];
  });
  opt.search(0, 0);

  RuleResult result;
  result.outcome = Outcome::from_mask(opt.best_mask);
  result.assignment = best_assignment(profile, result.outcome);
  int step = 0;
  for (int p : result.outcome.members())
    result.trace.push_back({p, TraceEvent::Action::Selected, step++,
                            result.assignment.scores[static_cast<size_t>(p)]});
  return result;
}

}  // namespace

RuleResult run_maxp(const Profile& profile, const Threshold& tau) {
  return run_optimizer(profile, tau, true);
}

RuleResult run_maxr(const Profile& profile, const Threshold& tau) {
  return run_optimizer(profile, tau, false);
}

}  // namespace psr
