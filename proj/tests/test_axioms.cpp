#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "psr/axioms.hpp"
#include "psr/io.hpp"
#include "psr/optrules.hpp"

using namespace psr;
using test::ids;
using test::load;
using test::tau;

TEST_CASE("set-maximality: gp holds, do and stv fail on the shared fixture") {
  Profile p = load("#! parties: b,c\n2: b>c\n1: c\n");
  CHECK(check_set_maximality(RuleId::Do, p, tau(3)));
  CHECK(check_set_maximality(RuleId::Stv, p, tau(3)));
  CHECK(!check_set_maximality(RuleId::Gp, p, tau(3)));
  Profile ex1 = load(test::kExample1);
  CHECK(!check_set_maximality(RuleId::Gp, ex1, tau(5)));
  CHECK(!check_set_maximality(RuleId::Do, ex1, tau(0)));  // outcome C has no superset
}

TEST_CASE("weak efficiency") {
  Profile p = load("#! parties: b,c\n2: b>c\n1: c\n");
  CHECK(check_weak_efficiency(RuleId::Stv, p, tau(3)));
  CHECK(!check_weak_efficiency(RuleId::Gp, p, tau(3)));
  // nothing non-empty is feasible here, so the empty outcome is fine
  Profile q = load("#! parties: a,b\n1: a\n1: b\n");
  CHECK(!check_weak_efficiency(RuleId::Do, q, tau(2)));
}

TEST_CASE("direct winners") {
  Profile p = load(test::kExample1);
  for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp})
    CHECK(!check_direct_winners(rule, p, tau(5)));
  Profile q = load("#! parties: a,b,c\n2: a>b\n2: a>c\n3: c\n3: b\n");
  CHECK(check_direct_winners(RuleId::MaxP, q, tau(4)));
  CHECK(check_direct_winners(RuleId::MaxR, q, tau(4)));
  CHECK(!check_direct_winners(RuleId::Do, q, tau(0)));
  // a mock rule hook that never selects anyone fails immediately
  RuleFn empty_rule = [](const Profile& pr, const Threshold&) {
    RuleResult r;
    r.assignment = best_assignment(pr, Outcome{});
    return r;
  };
  CHECK(check_direct_winners(empty_rule, p, tau(5)));
}

TEST_CASE("solid coalitions") {
  Profile p = load("#! parties: a,b,c\n4: a>b>c\n3: b>c>a\n2: c>b>a\n");
  CheckResult r = check_solid_coalitions(RuleId::Do, p, tau(5));
  REQUIRE(r);
  CHECK(r->narrative.find("{b,c}") != std::string::npos);
  CHECK(check_solid_coalitions(RuleId::Gp, p, tau(5)));
  CHECK(!check_solid_coalitions(RuleId::Stv, p, tau(5)));
}

TEST_CASE("local stability") {
  Profile cycle = condorcet_cycle_family(3, 2);
  for (const Outcome& s : enumerate_feasible(cycle, tau(2)))
    CHECK(check_local_stability(cycle, tau(2), s));

  // with tau = 1, selecting every first-ranked party is locally stable
  for (int seed = 0; seed < 50; ++seed) {
    CounterRng rng(mix64(314, seed));
    Profile p = random_profile(rng, 5, 8);
    std::vector<Rational> fp = first_place_weights(p);
    Outcome s;
    for (int c = 0; c < p.party_count(); ++c)
      if (!fp[c].is_zero()) s = s.with(c);
    CHECK(!check_local_stability(p, tau(1), s));
    CHECK(!check_local_stability(p, tau(1), p.full_outcome()));  // no c outside C
  }
}

TEST_CASE("condorcet family is padded correctly") {
  Profile p = condorcet_cycle_family(7, 3);
  CHECK(p.party_count() == 5);  // 4-cycle plus the dummy
  CHECK(p.total_weight() == Rational(7));
  CHECK_THROWS_AS(condorcet_cycle_family(3, 1), InputError);
  CHECK_THROWS_AS(condorcet_cycle_family(3, 3), InputError);
}

TEST_CASE("representation of unrepresented voters") {
  Profile p = load("#! parties: a,b,c\n3: a\n2: b>c\n1: c\n");
  for (RuleId rule : {RuleId::Do, RuleId::Stv}) {
    Outcome s = run_rule(rule, p, tau(3)).outcome;
    CHECK(s == ids(p, {"a"}));
    CheckResult r = check_unrepresented(p, tau(3), s);
    REQUIRE(r);
    CHECK(*r->party == "c");
  }
  Profile q = load("#! parties: a,b,c,d\n3: a\n2: b>a\n2: c>b\n2: d>b\n");
  CheckResult r = check_unrepresented(q, tau(4), run_gp(q, tau(4)).outcome);
  REQUIRE(r);
  CHECK(*r->party == "b");
}

TEST_CASE("threshold monotonicity") {
  Profile p = load("#! parties: a,b\n3: a>b\n2: b\n");
  CHECK(check_threshold_monotonicity(RuleId::Gp, p, tau(3), tau(4)));
  CHECK(!check_threshold_monotonicity(RuleId::Do, p, tau(3), tau(4)));
  CHECK(!check_threshold_monotonicity(RuleId::Stv, p, tau(3), tau(4)));
  CHECK(!check_threshold_monotonicity(RuleId::Gp, p, tau(4), tau(4)));  // equal thresholds
  Profile q = load("#! parties: a,b,c\n5: a\n1: a>b\n1: a>c\n4: b\n4: c\n");
  CHECK(check_threshold_monotonicity(RuleId::MaxP, q, tau(5), tau(7)));
  CHECK(check_threshold_monotonicity(RuleId::MaxR, q, tau(5), tau(7)));
}

TEST_CASE("independence of definitely losing parties") {
  Profile p = load("#! parties: a,b,c\n1: c>b\n3: b\n3: a\n");
  CHECK(check_idlp(RuleId::Do, p, tau(2), tau(4)));
  Profile g = load("#! parties: a,b\n3: a>b\n2: b\n");
  CHECK(check_idlp(RuleId::Gp, g, tau(3), tau(4)));
  // equal thresholds restrict to the winners and re-run: identity for all rules
  for (int seed = 0; seed < 60; ++seed) {
    CounterRng rng(mix64(5551, seed));
    Profile q = random_profile(rng, 5, 8);
    Threshold t{Rational(rng.uniform_int(0, static_cast<int>(q.ballots().size())))};
    for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp, RuleId::MaxP, RuleId::MaxR})
      CHECK(!check_idlp(rule, q, t, t));
  }
}

TEST_CASE("finding clones") {
  Profile p = load("#! parties: a,c,c2\n6: a\n4: c2>c>a\n3: c>c2>a\n");
  auto clones = find_clones(p);
  REQUIRE(clones.size() == 1);
  CHECK(clones[0] == std::pair<int, int>{p.roster().require("c"), p.roster().require("c2")});

  Profile single = load("#! parties: a\n1: a\n");
  CHECK(find_clones(single).empty());

  Profile chain = load("#! parties: a,b,c\n1: a>b>c\n");
  auto pairs = find_clones(chain);
  REQUIRE(pairs.size() == 2);  // (a,b) and (b,c), but not (a,c)
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair<int, int>{0, 1}) != pairs.end());
  CHECK(std::find(pairs.begin(), pairs.end(), std::pair<int, int>{1, 2}) != pairs.end());
}

TEST_CASE("independence of clones") {
  Profile p = load("#! parties: a,c,c2\n6: a\n4: c2>c>a\n3: c>c2>a\n");
  CHECK(is_generic(p));
  int c = p.roster().require("c"), c2 = p.roster().require("c2");
  CHECK(check_clone_independence(RuleId::Do, p, tau(7), {c, c2}));
  CHECK(check_clone_independence(RuleId::Gp, p, tau(7), {c, c2}));
  CHECK(check_clone_independence(RuleId::MaxP, p, tau(7), {c, c2}));
  CHECK(!check_clone_independence(RuleId::Stv, p, tau(7), {c, c2}));
  CHECK(!check_clone_independence(RuleId::MaxR, p, tau(7), {c, c2}));
}

TEST_CASE("reinforcement") {
  Profile p1 = load("#! parties: a,b,c,d\n5: a>c\n6: c\n13: d\n4: b>a\n2: b>c\n");
  Profile p2 = load("#! parties: a,b,c,d\n2: a\n1: c\n");
  CheckResult stv = check_reinforcement(RuleId::Stv, p1, tau(13), p2, tau(1));
  REQUIRE(stv);
  CHECK(*stv->party == "c");

  Profile g1 = load("#! parties: a,b,c\n5: a>c\n2: a>b>c\n6: c>b\n2: b\n");
  Profile g2 = load("#! parties: a,b,c\n1: b\n");
  CheckResult gp = check_reinforcement(RuleId::Gp, g1, tau(7), g2, tau(1));
  REQUIRE(gp);
  CHECK(*gp->party == "b");

  CHECK(!check_reinforcement(RuleId::Do, p1, tau(13), p2, tau(1)));
  // concatenating an empty profile at tau 0 never breaks reinforcement
  Profile empty = load("#! parties: a,b,c,d\n");
  for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp})
    CHECK(!check_reinforcement(rule, p1, tau(13), empty, tau(0)));
}

TEST_CASE("monotonicity") {
  Profile p = load("#! parties: a,b,c,d\n5: a>c\n6: c\n13: d\n4: b>a\n2: b>c\n");
  CHECK(check_monotonicity(RuleId::Stv, p, tau(13), 4, p.roster().require("c")));
  Profile g = load("#! parties: a,b,c\n5: a>c\n2: a>b>c\n6: c>b\n2: b\n");
  CHECK(check_monotonicity(RuleId::Gp, g, tau(7), 1, g.roster().require("b")));
  Profile mx = load("#! parties: a,b,c\n5: b\n1: b>c\n5: c\n1: c>b\n3: a>b\n3: a>c\n4: a\n");
  CHECK(check_monotonicity(RuleId::MaxP, mx, tau(9), 3, mx.roster().require("b")));
  CHECK(check_monotonicity(RuleId::MaxR, mx, tau(9), 3, mx.roster().require("b")));
  // DO only ever gains from lifts
  for (int seed = 0; seed < 80; ++seed) {
    CounterRng rng(mix64(8080, seed));
    Profile q = random_profile(rng, 5, 8);
    Threshold t{Rational(rng.uniform_int(0, static_cast<int>(q.ballots().size())))};
    Outcome s = run_do(q, t).outcome;
    for (size_t v = 0; v < q.ballots().size(); ++v)
      for (int c : s.members())
        CHECK(!check_monotonicity(RuleId::Do, q, t, static_cast<int>(v), c));
  }
}

TEST_CASE("safe, risky and out parties") {
  // the two-voter election where nothing clears the bar truthfully
  Profile p = load("#! parties: a,b,c\n1: b>a\n1: c>a\n");
  // from voter 0's perspective: their own b can never reach weight 2, but a
  // becomes feasible via an a-first report and c via a c-first report
  CHECK(classify_party(RuleId::Stv, p, tau(2), 0, p.roster().require("a")) == PartyStatus::Risky);
  CHECK(classify_party(RuleId::Stv, p, tau(2), 0, p.roster().require("b")) == PartyStatus::Out);
  CHECK(classify_party(RuleId::Stv, p, tau(2), 0, p.roster().require("c")) == PartyStatus::Risky);
  // symmetrically for voter 1
  CHECK(classify_party(RuleId::Stv, p, tau(2), 1, p.roster().require("a")) == PartyStatus::Risky);
  CHECK(classify_party(RuleId::Stv, p, tau(2), 1, p.roster().require("b")) == PartyStatus::Risky);
  CHECK(classify_party(RuleId::Stv, p, tau(2), 1, p.roster().require("c")) == PartyStatus::Out);

  Profile single = load("#! parties: a\n1: a\n");
  for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp})
    CHECK(classify_party(rule, single, tau(1), 0, 0) == PartyStatus::Risky);
}

TEST_CASE("a party first-ranked by tau+1 other voters is safe (property)") {
  for (int seed = 0; seed < 150; ++seed) {
    CounterRng rng(mix64(2718, seed));
    Profile p = random_profile(rng, 4, 8);
    int n = static_cast<int>(p.ballots().size());
    Threshold t{Rational(rng.uniform_int(0, n))};
    for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp}) {
      for (size_t v = 0; v < p.ballots().size(); ++v) {
        std::vector<Rational> fp_others(p.party_count(), Rational(0));
        for (size_t j = 0; j < p.ballots().size(); ++j) {
          if (j == v || p.ballots()[j].ranking.empty()) continue;
          fp_others[p.ballots()[j].ranking.front()] += p.ballots()[j].weight;
        }
        for (int c = 0; c < p.party_count(); ++c)
          if (!(fp_others[c] < t.value + Rational(1)))
            CHECK(classify_party(rule, p, t, static_cast<int>(v), c) == PartyStatus::Safe);
      }
    }
  }
}

TEST_CASE("representative strategyproofness counterexamples") {
  Profile do_fix = load("#! parties: a,b,c\n1: b>a\n1: a>c\n");
  CheckResult r = check_representative_sp(RuleId::Do, do_fix, tau(2), 0);
  REQUIRE(r);
  CHECK(*r->party == "a");

  // voter 0 has exactly one risky party here, so this breaks the restricted axiom
  CHECK(classify_party(RuleId::Do, do_fix, tau(2), 0, 0) == PartyStatus::Risky);
  CHECK(classify_party(RuleId::Do, do_fix, tau(2), 0, 1) == PartyStatus::Out);
  CHECK(classify_party(RuleId::Do, do_fix, tau(2), 0, 2) == PartyStatus::Out);

  Profile stv_fix = load("#! parties: a,b,c\n1: b>a\n1: c>a\n");
  CHECK(check_representative_sp(RuleId::Stv, stv_fix, tau(2), 0));

  // with two risky parties even gp can be gamed
  Profile gp_fix =
      load("#! parties: a,b,c\n1: a\n1: a\n1: a\n1: b>c\n1: b>c\n1: c>b>a\n");
  CheckResult gp = check_representative_sp(RuleId::Gp, gp_fix, tau(3), 5);
  REQUIRE(gp);
  REQUIRE(gp->misreport);
  CHECK(gp->misreport->front() == 'c');  // the c>a>b family of misreports
  CHECK(*gp->party == "c");
}

TEST_CASE("share strategyproofness counterexamples and positives") {
  const char* top2 =
      "1: a>b\n1: a\n1: a\n1: a\n1: a\n1: a\n"
      "1: b>c\n1: b>c\n1: b>c\n1: c>a\n1: c>a\n1: c>a\n";
  Profile gp_fix = load(std::string("#! parties: a,b,c\n") + top2);
  CheckResult gp = check_share_sp(RuleId::Gp, gp_fix, tau(4), 0, SpRestriction::SafeTop2);
  REQUIRE(gp);
  CHECK(*gp->misreport == "b");
  // 6/12 to 8/12 in lowest terms
  CHECK(gp->narrative.find("from 1/2 to 2/3") != std::string::npos);

  // the same election under stv needs c ahead of b in the tie-break order
  Profile stv_fix = load(std::string("#! parties: a,c,b\n") + top2);
  CHECK(check_share_sp(RuleId::Stv, stv_fix, tau(4), 0, SpRestriction::SafeTop2));

  Profile promote = load(
      "#! parties: a,b,c,d\n"
      "1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n"
      "1: c>d\n1: c>d\n1: c>d\n1: c>d\n1: d>c\n1: d>c\n1: d>c\n1: d>b\n1: d>b\n"
      "1: a>c>d\n1: a>c>d\n1: a>c>d\n1: a>b>c>d\n");
  CheckResult stv = check_share_sp(RuleId::Stv, promote, tau(10), 22,
                                   SpRestriction::PromoteRepresentative);
  REQUIRE(stv);
  REQUIRE(stv->misreport);
  CHECK(stv->misreport->front() == 'b');
  bool mentions_share = stv->narrative.find("share of b") != std::string::npos;
  CHECK(mentions_share);
  // do is immune to the promote manipulation on the same election
  CHECK(!check_share_sp(RuleId::Do, promote, tau(10), 22, SpRestriction::PromoteRepresentative));

  // the full promotion b>a>c>d flips the outcome to {b,c}: b's share goes
  // from 11/23 to 13/23 while the voter's representative stays b
  RuleResult before = run_stv(promote, Threshold{Rational(10)});
  CHECK(before.outcome == ids(promote, {"b", "d"}));
  CHECK(before.assignment.scores[promote.roster().require("b")] == Rational(11));
  CHECK(before.assignment.scores[promote.roster().require("d")] == Rational(12));
  Profile moved = promote.with_ballot(
      22, {promote.roster().require("b"), promote.roster().require("a"),
           promote.roster().require("c"), promote.roster().require("d")});
  RuleResult after = run_stv(moved, Threshold{Rational(10)});
  CHECK(after.outcome == ids(promote, {"b", "c"}));
  CHECK(after.assignment.scores[promote.roster().require("b")] == Rational(13));
  CHECK(after.assignment.scores[promote.roster().require("c")] == Rational(10));
}

TEST_CASE("the share manipulation is computed on the misreported profile") {
  Profile gp_fix = load("#! parties: a,b,c\n1: a>b\n5: a\n3: b>c\n3: c>a\n");
  RuleResult truth = run_gp(gp_fix, tau(4));
  CHECK(truth.outcome == ids(gp_fix, {"a", "c"}));
  CHECK(truth.assignment.shares[gp_fix.roster().require("a")] == Rational(6, 12));
  Profile moved = gp_fix.with_ballot(0, {gp_fix.roster().require("b")});
  RuleResult after = run_gp(moved, tau(4));
  CHECK(after.outcome == ids(gp_fix, {"a", "b"}));
  CHECK(after.assignment.shares[gp_fix.roster().require("a")] == Rational(8, 12));
}

TEST_CASE("documented deviation: gp promote-share manipulation exists") {
  // Promoting the representative to first raises its plurality, which can
  // reorder the greedy scan and swap a selected party for one whose voters
  // overlap less, shrinking the represented total and raising the
  // representative's share. The gp cell of the promote-share row is
  // therefore only almost-always clean; this stored instance beats it.
  Profile p = load(
      "#! parties: a,b,c,e\n"
      "1: a>e\n1: b\n1: e>a\n1: c>e>b\n1: b\n1: c>a\n1: e>a\n");
  RuleResult truth = run_gp(p, tau(3));
  CHECK(truth.outcome == ids(p, {"a", "b"}));
  CHECK(truth.assignment.shares[p.roster().require("b")] == Rational(3, 7));
  CheckResult r =
      check_share_sp(RuleId::Gp, p, tau(3), 3, SpRestriction::PromoteRepresentative);
  REQUIRE(r);
  CHECK(r->narrative.find("from 3/7 to 1/2") != std::string::npos);
  CHECK(replay(*r));
  // do remains immune on the same election
  for (size_t v = 0; v < p.ballots().size(); ++v)
    CHECK(!check_share_sp(RuleId::Do, p, tau(3), static_cast<int>(v),
                          SpRestriction::PromoteRepresentative));
}

TEST_CASE("coalition insurance scenario replays for every base rule") {
  for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp}) {
    Violation v = coalition_insurance_fixture(rule);
    CHECK(v.axiom == AxiomId::CoalitionInsurance);
    CHECK(v.narrative.find("5/11") != std::string::npos);
    CHECK(v.narrative.find("7/13") != std::string::npos);
    CHECK(replay(v));
  }
}

TEST_CASE("every stored fixture reproduces its violation and replays") {
  for (const StoredFixture& fixture : stored_fixtures()) {
    CAPTURE(fixture.name);
    CheckResult violation = fixture.run();
    REQUIRE(violation);
    CHECK(violation->axiom == fixture.axiom);
    CHECK(replay(*violation));
  }
}

TEST_CASE("every failed matrix cell is witnessed by a stored fixture") {
  for (const TableCell& cell : table_one()) {
    if (cell.satisfied) continue;
    bool witnessed = false;
    for (const StoredFixture& fixture : stored_fixtures())
      witnessed = witnessed || (fixture.axiom == cell.axiom && fixture.rule == cell.rule);
    CAPTURE(axiom_name(cell.axiom));
    CAPTURE(rule_name(cell.rule));
    CHECK(witnessed);
  }
}

TEST_CASE("random search finds known failures and respects seeds") {
  SearchBounds bounds{5, 10, 0, -1};
  SearchReport monotone = random_search(AxiomId::Monotonicity, RuleId::Stv, 5000, bounds, 11);
  REQUIRE(monotone.violation);
  CHECK(replay(*monotone.violation));

  SearchReport again = random_search(AxiomId::Monotonicity, RuleId::Stv, 5000, bounds, 11);
  CHECK(again.trials == monotone.trials);
  REQUIRE(again.violation);
  CHECK(again.violation->narrative == monotone.violation->narrative);

  SearchReport do_ok = random_search(AxiomId::Monotonicity, RuleId::Do, 300, bounds, 11);
  CHECK(!do_ok.violation);
}

TEST_CASE("do is pinned down by direct winners plus reinforcement") {
  // any rule hook failing one of the two characterizing properties must
  // differ from do somewhere; searched over seeded random profiles
  auto differs_from_do = [](const RuleFn& hook) {
    for (int trial = 0; trial < 2000; ++trial) {
      CounterRng rng(mix64(46910, trial));
      Profile p = random_profile(rng, 5, 10);
      Threshold t{Rational(rng.uniform_int(0, static_cast<int>(p.ballots().size())))};
      if (hook(p, t).outcome != run_do(p, t).outcome) return true;
    }
    return false;
  };
  // stv and gp fail reinforcement; the empty rule fails direct winners
  CHECK(differs_from_do(rule_fn(RuleId::Stv)));
  CHECK(differs_from_do(rule_fn(RuleId::Gp)));
  RuleFn empty_rule = [](const Profile& pr, const Threshold&) {
    RuleResult r;
    r.assignment = best_assignment(pr, Outcome{});
    return r;
  };
  CHECK(differs_from_do(empty_rule));
  // while do itself satisfies both properties on every searched instance
  SearchBounds bounds{5, 10, 0, -1};
  CHECK(!random_search(AxiomId::DirectWinners, RuleId::Do, 2000, bounds, 46910).violation);
  CHECK(!random_search(AxiomId::Reinforcement, RuleId::Do, 2000, bounds, 46910).violation);
}

TEST_CASE("random search smoke across the satisfied cells") {
  SearchBounds bounds{4, 6, 0, -1};
  for (const TableCell& cell : table_one()) {
    if (!cell.satisfied) continue;
    CAPTURE(axiom_name(cell.axiom));
    CAPTURE(rule_name(cell.rule));
    SearchReport report = random_search(cell.axiom, cell.rule, 150, bounds, 20240601);
    CHECK(!report.violation);
  }
}

TEST_CASE("violation reports serialize with their witnesses") {
  Profile p = load("#! parties: a,b\n3: a>b\n2: b\n");
  CheckResult r = check_threshold_monotonicity(RuleId::Gp, p, tau(3), tau(4));
  REQUIRE(r);
  std::string json = emit_violation(*r);
  CHECK(json.find("threshold_monotonicity") != std::string::npos);
  CHECK(json.find("#! parties: a,b") != std::string::npos);
}
