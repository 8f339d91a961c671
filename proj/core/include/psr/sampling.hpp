#pragma once

#include <cstdint>

#include "psr/core.hpp"

namespace psr {

/// Stateless 64-bit mixing (splitmix64 finalizer over a combined key).
/// Everything random in this library derives from these counters, so runs are
/// reproducible for a given seed regardless of evaluation order.
uint64_t mix64(uint64_t a, uint64_t b);
uint64_t mix64(uint64_t a, uint64_t b, uint64_t c);
uint64_t mix64(uint64_t a, uint64_t b, uint64_t c, uint64_t d);

/// A keyed counter stream of draws.
class CounterRng {
 public:
  explicit CounterRng(uint64_t key) : key_(key) {}

  uint64_t next() { return mix64(key_, ctr_++); }
  /// Uniform draw from (0, 1].
  double unit();
  /// Standard normal via Box-Muller.
  double gauss();
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  uint64_t key_;
  uint64_t ctr_ = 0;
};

/// One standard-normal draw keyed by (seed, a, b); independent of call order.
double gauss_at(uint64_t seed, uint64_t a, uint64_t b);

/// Unit-weight profile with m ~ U[1..max_parties], n ~ U[1..max_voters],
/// uniform ranking lengths and uniform orders. Party ids are "a", "b", ...
Profile random_profile(CounterRng& rng, int max_parties, int max_voters);

/// Random ballots over an existing roster (for reinforcement instances).
Profile random_profile_over(CounterRng& rng, std::shared_ptr<const Roster> roster,
                            int max_voters);

/// Like random_profile but with a designated clone pair: one party is split
/// into two parties ranked adjacently (per-ballot order random) by every
/// voter that ranks it.
struct CloneInstance {
  Profile profile;
  int clone_a;
  int clone_b;
};
CloneInstance random_clone_profile(CounterRng& rng, int max_parties, int max_voters);

}  // namespace psr
