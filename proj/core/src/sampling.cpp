#include "psr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace psr {
namespace {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string party_id(int index) {
  if (index < 26) return std::string(1, static_cast<char>('a' + index));
  return "p" + std::to_string(index);
}

}  // namespace

uint64_t mix64(uint64_t a, uint64_t b) { return splitmix(splitmix(a) + b); }
uint64_t mix64(uint64_t a, uint64_t b, uint64_t c) { return splitmix(mix64(a, b) + c); }
uint64_t mix64(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
  return splitmix(mix64(a, b, c) + d);
}

double CounterRng::unit() {
  return static_cast<double>((next() >> 11) + 1) * (1.0 / 9007199254740992.0);
}

double CounterRng::gauss() {
  double u1 = unit();
  double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

int CounterRng::uniform_int(int lo, int hi) {
  uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>((static_cast<unsigned __int128>(next()) * range) >> 64);
}

double gauss_at(uint64_t seed, uint64_t a, uint64_t b) {
  CounterRng rng(mix64(seed, a, b));
  return rng.gauss();
}

namespace {

std::vector<int> random_ranking(CounterRng& rng, int m, int length) {
  std::vector<int> pool(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) pool[static_cast<size_t>(i)] = i;
  for (int i = 0; i < length; ++i) {
    int j = rng.uniform_int(i, m - 1);
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
  }
  pool.resize(static_cast<size_t>(length));
  return pool;
}

}  // namespace

Profile random_profile(CounterRng& rng, int max_parties, int max_voters) {
  int m = rng.uniform_int(1, max_parties);
  std::vector<std::string> ids;
  for (int i = 0; i < m; ++i) ids.push_back(party_id(i));
  return random_profile_over(rng, std::make_shared<const Roster>(Roster::from_ids(ids)),
                             max_voters);
}

Profile random_profile_over(CounterRng& rng, std::shared_ptr<const Roster> roster,
                            int max_voters) {
  int m = roster->size();
  int n = rng.uniform_int(1, max_voters);
  std::vector<Ballot> ballots;
  ballots.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Ballot b;
    b.ranking = random_ranking(rng, m, rng.uniform_int(0, m));
    ballots.push_back(std::move(b));
  }
  return Profile(std::move(roster), std::move(ballots));
}

CloneInstance random_clone_profile(CounterRng& rng, int max_parties, int max_voters) {
  int m = rng.uniform_int(2, std::max(2, max_parties));
  Profile base = random_profile(rng, m - 1, max_voters);
  // regenerate the roster deterministically at the full size
  int base_m = base.party_count();
  int target = rng.uniform_int(0, base_m - 1);
  int clone = base_m;
  std::vector<std::string> ids;
  for (int i = 0; i < base_m; ++i) ids.push_back(base.roster().id(i));
  ids.push_back(ids[static_cast<size_t>(target)] + "2");
  std::vector<Ballot> ballots;
  for (const Ballot& b : base.ballots()) {
    Ballot nb;
    nb.weight = b.weight;
    for (int p : b.ranking) {
      if (p == target) {
        if (rng.uniform_int(0, 1) == 0) {
          nb.ranking.push_back(target);
          nb.ranking.push_back(clone);
        } else {
          nb.ranking.push_back(clone);
          nb.ranking.push_back(target);
        }
      } else {
        nb.ranking.push_back(p);
      }
    }
    ballots.push_back(std::move(nb));
  }
  return {Profile(Roster::from_ids(ids), std::move(ballots)), target, clone};
}

}  // namespace psr
