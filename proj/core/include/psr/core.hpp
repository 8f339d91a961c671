#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "psr/errors.hpp"
#include "psr/rational.hpp"

namespace psr {

/// A competing party list. `priority` is the party's rank in the fixed
/// tie-breaking order (0 = broken first in favour of).
struct Party {
  std::string id;
  int priority = 0;
};

/// The parties of an election, stored in priority order so that a party's
/// index equals its priority.
class Roster {
 public:
  Roster() = default;
  explicit Roster(std::vector<Party> parties);
  static Roster from_ids(const std::vector<std::string>& ids_in_priority_order);

  int size() const { return static_cast<int>(parties_.size()); }
  const Party& party(int index) const { return parties_[static_cast<size_t>(index)]; }
  const std::string& id(int index) const { return parties_[static_cast<size_t>(index)].id; }
  int find(std::string_view id) const;     // -1 if unknown
  int require(std::string_view id) const;  // throws RosterMismatchError
  bool operator==(const Roster& o) const;

 private:
  std::vector<Party> parties_;
};

/// One weighted truncated ranking. `ranking` holds distinct roster indices in
/// preference order; unranked parties sit strictly below all ranked ones and
/// are mutually incomparable. Weight 1 corresponds to one physical voter.
struct Ballot {
  std::vector<int> ranking;
  Rational weight = Rational(1);
};

/// A subset of roster indices, packed as a bitmask (at most 64 parties).
class Outcome {
 public:
  Outcome() = default;
  static Outcome all(int m) { return Outcome(m >= 64 ? ~0ull : (1ull << m) - 1); }
  static Outcome of(std::initializer_list<int> parties);
  static Outcome from_mask(uint64_t mask) { return Outcome(mask); }

  bool contains(int p) const { return (mask_ >> p) & 1u; }
  Outcome with(int p) const { return Outcome(mask_ | (1ull << p)); }
  Outcome without(int p) const { return Outcome(mask_ & ~(1ull << p)); }
  bool empty() const { return mask_ == 0; }
  int count() const { return __builtin_popcountll(mask_); }
  bool subset_of(const Outcome& o) const { return (mask_ & ~o.mask_) == 0; }
  std::vector<int> members() const;
  uint64_t mask() const { return mask_; }

  bool operator==(const Outcome&) const = default;
  auto operator<=>(const Outcome&) const = default;

 private:
  explicit Outcome(uint64_t mask) : mask_(mask) {}
  uint64_t mask_ = 0;
};

/// A preference profile: a roster plus a sequence of weighted ballots.
/// Immutable after construction; copies share the roster.
class Profile {
 public:
  Profile() : roster_(std::make_shared<const Roster>()) {}
  Profile(Roster roster, std::vector<Ballot> ballots);
  Profile(std::shared_ptr<const Roster> roster, std::vector<Ballot> ballots);

  const Roster& roster() const { return *roster_; }
  const std::shared_ptr<const Roster>& roster_ptr() const { return roster_; }
  int party_count() const { return roster_->size(); }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  const Rational& total_weight() const { return total_; }
  Outcome full_outcome() const { return Outcome::all(party_count()); }

  /// Same profile with ballot `index` replaced by a new ranking (weight kept).
  Profile with_ballot(int index, std::vector<int> ranking) const;

 private:
  void validate() const;

  std::shared_ptr<const Roster> roster_;
  std::vector<Ballot> ballots_;
  Rational total_;
};

/// Minimum supporter weight a party needs; an absolute quantity in units of
/// ballot weight. Relative thresholds are converted once, at entry.
struct Threshold {
  Rational value;

  Threshold() = default;
  explicit Threshold(Rational v);
  /// `pct` percent of `total`, e.g. percent(5, total) for a 5% threshold.
  static Threshold percent(const Rational& pct, const Rational& total);
};

/// The voter-to-representative mapping induced by an outcome, with per-party
/// supporter weights (scores) and representation shares.
struct Assignment {
  std::vector<int> representative;  // per ballot; -1 = unrepresented
  std::vector<int> rep_rank;        // 1-based rank of the representative; 0 if none
  std::vector<Rational> scores;     // per party (zero outside the outcome)
  std::vector<Rational> shares;     // per party; sums to 1 when anyone is represented
  Rational represented_weight;
  Rational unrepresented_weight;
};

/// Assigns every voter to their most-preferred selected party.
Assignment best_assignment(const Profile& profile, const Outcome& outcome);

/// True iff every selected party's supporter weight reaches tau.
bool is_feasible(const Profile& profile, const Outcome& outcome, const Threshold& tau);

/// Deletes all parties outside `keep`; ballot order and weights are preserved,
/// and the new roster inherits the induced priority order.
Profile restrict_to(const Profile& profile, const Outcome& keep);

/// Cuts every ranking to its first k entries (k >= 1).
Profile truncate(const Profile& profile, int k);

/// Concatenates two profiles over identical rosters.
Profile concat(const Profile& p1, const Profile& p2);

/// True iff every restriction of the profile has a unique plurality-score
/// minimizer. Exhaustive over subsets; guarded at 20 parties.
bool is_generic(const Profile& profile);

/// 0-based position of `party` in the ballot, or -1 if unranked.
int rank_position(const Ballot& ballot, int party);

/// a ≻ b under truncation semantics (ranked beats unranked; two unranked
/// parties are incomparable).
bool prefers(const Ballot& ballot, int a, int b);

/// c is ranked and preferred to every member of S (vacuously over S = ∅).
bool prefers_over_set(const Ballot& ballot, int c, const Outcome& s);

/// Weight of first-place votes per party.
std::vector<Rational> first_place_weights(const Profile& profile);

/// Per-party supporter weights under an outcome (the scores of
/// best_assignment without the rest of the bookkeeping).
std::vector<Rational> supporter_scores(const Profile& profile, const Outcome& outcome);

Outcome outcome_of_ids(const Profile& profile, const std::vector<std::string>& ids);
std::vector<std::string> ids_of(const Profile& profile, const Outcome& outcome);

/// Validates 0 <= tau <= total weight for this profile.
void check_threshold(const Profile& profile, const Threshold& tau);

}  // namespace psr
