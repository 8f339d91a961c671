#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "psr/apportion.hpp"
#include "psr/sampling.hpp"

using namespace psr;
using test::load;
using test::tau;

TEST_CASE("ten seats for the five-party comparison") {
  // DO supporter scores
  SeatAllocation a = dhondt({Rational(36), Rational(29), Rational(35)}, 10);
  CHECK(a.seats == std::vector<int>{4, 3, 3});
  // uninominal first-choice scores
  SeatAllocation b = dhondt({Rational(15), Rational(25), Rational(35)}, 10);
  CHECK(b.seats == std::vector<int>{2, 3, 5});
  // STV/GP scores, including the exact 20-20 tie
  SeatAllocation c = dhondt({Rational(20), Rational(20), Rational(25), Rational(35)}, 10);
  CHECK(c.seats == std::vector<int>{2, 2, 2, 4});
}

TEST_CASE("zero scores never get a seat") {
  SeatAllocation a = dhondt({Rational(0), Rational(7)}, 5);
  CHECK(a.seats == std::vector<int>{0, 5});
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(dhondt({Rational(0), Rational(0)}, 3), InputError);
  CHECK_THROWS_AS(dhondt({Rational(1)}, 0), InputError);
  CHECK_THROWS_AS(dhondt({Rational(-1), Rational(2)}, 1), InputError);
}

TEST_CASE("seat allocation properties (property)") {
  for (int trial = 0; trial < 300; ++trial) {
    CounterRng rng(mix64(1789, trial));
    int m = rng.uniform_int(1, 6);
    std::vector<Rational> scores;
    bool positive = false;
    for (int i = 0; i < m; ++i) {
      int v = rng.uniform_int(0, 40);
      positive = positive || v > 0;
      scores.push_back(Rational(v));
    }
    if (!positive) scores[0] = Rational(1);
    int house = rng.uniform_int(1, 25);

    SeatAllocation a = dhondt(scores, house);
    CHECK(std::accumulate(a.seats.begin(), a.seats.end(), 0) == house);

    // scaling all scores leaves the allocation unchanged
    std::vector<Rational> scaled = scores;
    Rational factor(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    for (Rational& s : scaled) s *= factor;
    CHECK(dhondt(scaled, house).seats == a.seats);

    // one extra seat goes to exactly one party
    SeatAllocation bigger = dhondt(scores, house + 1);
    int diff_total = 0;
    for (size_t i = 0; i < scores.size(); ++i) {
      CHECK(bigger.seats[i] >= a.seats[i]);
      diff_total += bigger.seats[i] - a.seats[i];
    }
    CHECK(diff_total == 1);
  }
}

TEST_CASE("seats from a rule result") {
  Profile p = load(test::kExample1);
  RuleResult r = run_stv(p, tau(5));
  SeatAllocation seats = seats_for_result(r, 10);
  // scores are b=9, d=6
  CHECK(seats.seats[p.roster().require("b")] == 6);
  CHECK(seats.seats[p.roster().require("d")] == 4);

  RuleResult single = run_do(p, tau(5));
  SeatAllocation all = seats_for_result(single, 7);
  CHECK(all.seats[p.roster().require("d")] == 7);

  RuleResult empty = run_do(p, tau(15));
  CHECK(empty.outcome.empty());
  CHECK_THROWS_AS(seats_for_result(empty, 10), InputError);
}
