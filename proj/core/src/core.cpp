#include "psr/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace psr {

Roster::Roster(std::vector<Party> parties) : parties_(std::move(parties)) {
  std::sort(parties_.begin(), parties_.end(),
            [](const Party& a, const Party& b) { return a.priority < b.priority; });
  std::unordered_set<std::string> seen;
  for (size_t i = 0; i < parties_.size(); ++i) {
    if (parties_[i].priority != static_cast<int>(i))
      throw InputError("roster priorities must form a permutation of 0.." +
                       std::to_string(parties_.size() - 1));
    if (!seen.insert(parties_[i].id).second)
      throw InputError("duplicate party id in roster: " + parties_[i].id);
  }
  if (parties_.size() > 64) throw InputError("at most 64 parties are supported");
}

Roster Roster::from_ids(const std::vector<std::string>& ids) {
  std::vector<Party> parties;
  parties.reserve(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) parties.push_back({ids[i], static_cast<int>(i)});
  return Roster(std::move(parties));
}

int Roster::find(std::string_view id) const {
  for (size_t i = 0; i < parties_.size(); ++i)
    if (parties_[i].id == id) return static_cast<int>(i);
  return -1;
}

int Roster::require(std::string_view id) const {
  int p = find(id);
  if (p < 0) throw RosterMismatchError("unknown party: " + std::string(id));
  return p;
}

bool Roster::operator==(const Roster& o) const {
  if (parties_.size() != o.parties_.size()) return false;
  for (size_t i = 0; i < parties_.size(); ++i)
    if (parties_[i].id != o.parties_[i].id) return false;
  return true;
}

Outcome Outcome::of(std::initializer_list<int> parties) {
  uint64_t mask = 0;
  for (int p : parties) mask |= 1ull << p;
  return Outcome(mask);
}

std::vector<int> Outcome::members() const {
  std::vector<int> out;
  for (uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(__builtin_ctzll(m));
  return out;
}

Profile::Profile(Roster roster, std::vector<Ballot> ballots)
    : Profile(std::make_shared<const Roster>(std::move(roster)), std::move(ballots)) {}

Profile::Profile(std::shared_ptr<const Roster> roster, std::vector<Ballot> ballots)
    : roster_(std::move(roster)), ballots_(std::move(ballots)) {
  validate();
  for (const Ballot& b : ballots_) total_ += b.weight;
}

void Profile::validate() const {
  int m = roster_->size();
  for (const Ballot& b : ballots_) {
    if (b.weight.is_negative()) throw InputError("negative ballot weight");
    uint64_t seen = 0;
    for (int p : b.ranking) {
      if (p < 0 || p >= m) throw RosterMismatchError("ballot references party outside roster");
      if ((seen >> p) & 1u) throw InputError("duplicate party in ballot: " + roster_->id(p));
      seen |= 1ull << p;
    }
  }
}

Profile Profile::with_ballot(int index, std::vector<int> ranking) const {
  std::vector<Ballot> ballots = ballots_;
  ballots[static_cast<size_t>(index)].ranking = std::move(ranking);
  return Profile(roster_, std::move(ballots));
}

Threshold::Threshold(Rational v) : value(std::move(v)) {
  if (value.is_negative()) throw InputError("threshold must be non-negative");
}

Threshold Threshold::percent(const Rational& pct, const Rational& total) {
  if (pct.is_negative() || Rational(100) < pct)
    throw InputError("percent threshold must lie in [0, 100]");
  return Threshold(pct / Rational(100) * total);
}

namespace {

void check_outcome(const Profile& profile, const Outcome& outcome) {
  int m = profile.party_count();
  if (m < 64 && (outcome.mask() >> m) != 0)
    throw RosterMismatchError("outcome references parties outside the roster");
}

}  // namespace

int rank_position(const Ballot& ballot, int party) {
  for (size_t i = 0; i < ballot.ranking.size(); ++i)
    if (ballot.ranking[i] == party) return static_cast<int>(i);
  return -1;
}

bool prefers(const Ballot& ballot, int a, int b) {
  int pa = rank_position(ballot, a);
  if (pa < 0) return false;
  int pb = rank_position(ballot, b);
  return pb < 0 || pa < pb;
}

bool prefers_over_set(const Ballot& ballot, int c, const Outcome& s) {
  int pc = rank_position(ballot, c);
  if (pc < 0) return false;
  for (int x : s.members()) {
    if (x == c) continue;
    int px = rank_position(ballot, x);
    if (px >= 0 && px < pc) return false;
  }
  return true;
}

Assignment best_assignment(const Profile& profile, const Outcome& outcome) {
  check_outcome(profile, outcome);
  int m = profile.party_count();
  Assignment a;
  a.representative.reserve(profile.ballots().size());
  a.rep_rank.reserve(profile.ballots().size());
  a.scores.assign(static_cast<size_t>(m), Rational(0));
  a.shares.assign(static_cast<size_t>(m), Rational(0));
  for (const Ballot& b : profile.ballots()) {
    int rep = -1, rank = 0;
    for (size_t i = 0; i < b.ranking.size(); ++i) {
      if (outcome.contains(b.ranking[i])) {
        rep = b.ranking[i];
        rank = static_cast<int>(i) + 1;
        break;
      }
    }
    a.representative.push_back(rep);
    a.rep_rank.push_back(rank);
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
  return a;
}

std::vector<Rational> supporter_scores(const Profile& profile, const Outcome& outcome) {
  check_outcome(profile, outcome);
  std::vector<Rational> scores(static_cast<size_t>(profile.party_count()), Rational(0));
  for (const Ballot& b : profile.ballots()) {
    for (int p : b.ranking) {
      if (outcome.contains(p)) {
        scores[static_cast<size_t>(p)] += b.weight;
        break;
      }
    }
  }
  return scores;
}

bool is_feasible(const Profile& profile, const Outcome& outcome, const Threshold& tau) {
  check_outcome(profile, outcome);
  if (outcome.empty()) return true;
  std::vector<Rational> scores = supporter_scores(profile, outcome);
  for (int p : outcome.members())
    if (scores[static_cast<size_t>(p)] < tau.value) return false;
  return true;
}

Profile restrict_to(const Profile& profile, const Outcome& keep) {
  check_outcome(profile, keep);
  std::vector<int> old_to_new(static_cast<size_t>(profile.party_count()), -1);
  std::vector<std::string> ids;
  for (int p : keep.members()) {
    old_to_new[static_cast<size_t>(p)] = static_cast<int>(ids.size());
    ids.push_back(profile.roster().id(p));
  }
  std::vector<Ballot> ballots;
  ballots.reserve(profile.ballots().size());
  for (const Ballot& b : profile.ballots()) {
    Ballot nb;
    nb.weight = b.weight;
    for (int p : b.ranking)
      if (old_to_new[static_cast<size_t>(p)] >= 0)
        nb.ranking.push_back(old_to_new[static_cast<size_t>(p)]);
    ballots.push_back(std::move(nb));
  }
  return Profile(Roster::from_ids(ids), std::move(ballots));
}

Profile truncate(const Profile& profile, int k) {
  if (k < 1) throw InputError("truncation length must be at least 1");
  std::vector<Ballot> ballots = profile.ballots();
  for (Ballot& b : ballots)
    if (static_cast<int>(b.ranking.size()) > k) b.ranking.resize(static_cast<size_t>(k));
  return Profile(profile.roster_ptr(), std::move(ballots));
}

Profile concat(const Profile& p1, const Profile& p2) {
  if (!(p1.roster() == p2.roster()))
    throw RosterMismatchError("cannot concatenate profiles over different rosters");
  std::vector<Ballot> ballots = p1.ballots();
  ballots.insert(ballots.end(), p2.ballots().begin(), p2.ballots().end());
  return Profile(p1.roster_ptr(), std::move(ballots));
}

bool is_generic(const Profile& profile) {
  int m = profile.party_count();
  if (m > 20) throw GuardError("is_generic: roster too large (guard: 20 parties)");
  for (uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::vector<Rational> score(static_cast<size_t>(m), Rational(0));
    for (const Ballot& b : profile.ballots()) {
      for (int p : b.ranking) {
        if ((mask >> p) & 1u) {
          score[static_cast<size_t>(p)] += b.weight;
          break;
        }
      }
    }
    int argmin = -1;
    bool tied = false;
    for (uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      int p = __builtin_ctzll(rest);
      if (argmin < 0 || score[static_cast<size_t>(p)] < score[static_cast<size_t>(argmin)]) {
        argmin = p;
        tied = false;
      } else if (score[static_cast<size_t>(p)] == score[static_cast<size_t>(argmin)]) {
        tied = true;
      }
    }
    if (tied) return false;
  }
  return true;
}

std::vector<Rational> first_place_weights(const Profile& profile) {
  std::vector<Rational> fp(static_cast<size_t>(profile.party_count()), Rational(0));
  for (const Ballot& b : profile.ballots())
    if (!b.ranking.empty()) fp[static_cast<size_t>(b.ranking.front())] += b.weight;
  return fp;
}

Outcome outcome_of_ids(const Profile& profile, const std::vector<std::string>& ids) {
  Outcome s;
  for (const std::string& id : ids) s = s.with(profile.roster().require(id));
  return s;
}

std::vector<std::string> ids_of(const Profile& profile, const Outcome& outcome) {
  std::vector<std::string> ids;
  for (int p : outcome.members()) ids.push_back(profile.roster().id(p));
  return ids;
}

void check_threshold(const Profile& profile, const Threshold& tau) {
  if (tau.value.is_negative() || profile.total_weight() < tau.value)
    throw InputError("threshold " + tau.value.str() + " outside [0, total weight " +
                     profile.total_weight().str() + "]");
}

}  // namespace psr
