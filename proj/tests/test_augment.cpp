#include <doctest.h>

#include "helpers.hpp"
#include "psr/augment.hpp"
#include "psr/axioms.hpp"
#include "psr/sampling.hpp"

using namespace psr;
using test::ids;
using test::load;
using test::tau;

TEST_CASE("augmentation adds the party of the unrepresented block") {
  Profile p = load("#! parties: a,b,c\n3: a\n2: b>c\n1: c\n");
  RuleResult base = run_do(p, tau(3));
  CHECK(base.outcome == ids(p, {"a"}));
  RuleResult r = augment(p, tau(3), base.outcome);
  CHECK(r.outcome == ids(p, {"a", "c"}));
  REQUIRE(r.augment);
  REQUIRE(r.augment->steps.size() == 1);
  CHECK(r.augment->steps[0].added == p.roster().require("c"));
  CHECK(r.augment->steps[0].unrepresented_support == Rational(3));
  CHECK(r.augment->steps[0].removed.empty());  // a keeps its three loyal supporters
  CHECK(run_augmented(RuleId::DoPlus, p, tau(3)).outcome == ids(p, {"a", "c"}));
}

TEST_CASE("augmentation may evict an incumbent") {
  Profile p = load("#! parties: a,b,c,d\n3: a\n2: b>a\n2: c>b\n2: d>b\n");
  CHECK(run_gp(p, tau(4)).outcome == ids(p, {"a"}));
  RuleResult r = run_augmented(RuleId::GpPlus, p, tau(4));
  CHECK(r.outcome == ids(p, {"b"}));
  REQUIRE(r.augment);
  REQUIRE(r.augment->steps.size() == 1);
  CHECK(r.augment->steps[0].added == p.roster().require("b"));
  CHECK(r.augment->steps[0].unrepresented_support == Rational(4));
  CHECK(r.augment->steps[0].removed == ids(p, {"a"}));
}

TEST_CASE("fixed points come back unchanged") {
  Profile p = load(test::kExample1);
  Outcome start = ids(p, {"d", "b"});  // nobody is unrepresented under {d,b}
  RuleResult r = augment(p, tau(5), start);
  CHECK(r.outcome == start);
  CHECK(r.augment->steps.empty());
}

TEST_CASE("infeasible starting outcomes are rejected") {
  Profile p = load(test::kExample1);
  CHECK_THROWS_AS(augment(p, tau(5), ids(p, {"a", "b", "d"})), InputError);
}

TEST_CASE("augmented rules keep direct winners and fix unrepresentation (property)") {
  for (int trial = 0; trial < 1500; ++trial) {
    CounterRng rng(mix64(60721, trial));
    Profile p = random_profile(rng, 6, 12);
    int n = static_cast<int>(p.ballots().size());
    Threshold t{Rational(rng.uniform_int(0, n))};
    std::vector<Rational> fp = first_place_weights(p);
    for (RuleId rule : {RuleId::DoPlus, RuleId::StvPlus, RuleId::GpPlus}) {
      RuleResult r = run_augmented(rule, p, t);
      CHECK(is_feasible(p, r.outcome, t));
      CHECK(!check_unrepresented(p, t, r.outcome));
      for (int c = 0; c < p.party_count(); ++c)
        if (!(fp[c] < t.value)) CHECK(r.outcome.contains(c));
    }
  }
}

TEST_CASE("stv+ keeps solid coalitions where do+ and gp+ lose them") {
  Profile p = load("#! parties: a,b,c\n4: a>b>c\n3: b>c>a\n2: c>b>a\n");
  CHECK(!check_solid_coalitions(RuleId::StvPlus, p, tau(5)));
  CHECK(check_solid_coalitions(RuleId::DoPlus, p, tau(5)));
  CHECK(check_solid_coalitions(RuleId::GpPlus, p, tau(5)));
}

TEST_CASE("clone independence of stv+ and maxr holds empirically on random clone profiles") {
  // the stv+ claim comes without proof detail; checked empirically alongside
  // the maxr invariance
  int checked = 0, violated_plus = 0, violated_maxr = 0;
  for (int trial = 0; trial < 400; ++trial) {
    CounterRng rng(mix64(987, trial));
    CloneInstance inst = random_clone_profile(rng, 5, 8);
    if (!is_generic(inst.profile)) continue;
    Threshold t{Rational(rng.uniform_int(0, static_cast<int>(inst.profile.ballots().size())))};
    ++checked;
    if (check_clone_independence(RuleId::StvPlus, inst.profile, t,
                                 {inst.clone_a, inst.clone_b}))
      ++violated_plus;
    if (check_clone_independence(RuleId::MaxR, inst.profile, t, {inst.clone_a, inst.clone_b}))
      ++violated_maxr;
  }
  CHECK(checked > 50);
  MESSAGE("stv+ clone independence: ", violated_plus, " violations in ", checked,
          " generic trials");
  CHECK(violated_plus == 0);
  CHECK(violated_maxr == 0);
}
