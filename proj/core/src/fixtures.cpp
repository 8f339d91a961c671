#include "psr/axioms.hpp"
#include "psr/io.hpp"

namespace psr {

const std::vector<TableCell>& table_one() {
  static const std::vector<TableCell> cells = {
      {AxiomId::SetMaximality, RuleId::Do, false},
      {AxiomId::SetMaximality, RuleId::Stv, false},
      {AxiomId::SetMaximality, RuleId::Gp, true},
      {AxiomId::DirectWinners, RuleId::Do, true},
      {AxiomId::DirectWinners, RuleId::Stv, true},
      {AxiomId::DirectWinners, RuleId::Gp, true},
      {AxiomId::SolidCoalitions, RuleId::Do, false},
      {AxiomId::SolidCoalitions, RuleId::Stv, true},
      {AxiomId::SolidCoalitions, RuleId::Gp, false},
      {AxiomId::ThresholdMonotonicity, RuleId::Do, true},
      {AxiomId::ThresholdMonotonicity, RuleId::Stv, true},
      {AxiomId::ThresholdMonotonicity, RuleId::Gp, false},
      {AxiomId::Idlp, RuleId::Do, false},
      {AxiomId::Idlp, RuleId::Stv, true},
      {AxiomId::Idlp, RuleId::Gp, false},
      {AxiomId::CloneIndependence, RuleId::Do, false},
      {AxiomId::CloneIndependence, RuleId::Stv, true},
      {AxiomId::CloneIndependence, RuleId::Gp, false},
      {AxiomId::Reinforcement, RuleId::Do, true},
      {AxiomId::Reinforcement, RuleId::Stv, false},
      {AxiomId::Reinforcement, RuleId::Gp, false},
      {AxiomId::Monotonicity, RuleId::Do, true},
      {AxiomId::Monotonicity, RuleId::Stv, false},
      {AxiomId::Monotonicity, RuleId::Gp, false},
      {AxiomId::RepSpOneRisky, RuleId::Do, false},
      {AxiomId::RepSpOneRisky, RuleId::Stv, false},
      {AxiomId::RepSpOneRisky, RuleId::Gp, true},
      {AxiomId::ShareSpSafeTop2, RuleId::Do, true},
      {AxiomId::ShareSpSafeTop2, RuleId::Stv, false},
      {AxiomId::ShareSpSafeTop2, RuleId::Gp, false},
      {AxiomId::ShareSpPromote, RuleId::Do, true},
      {AxiomId::ShareSpPromote, RuleId::Stv, false},
      {AxiomId::ShareSpPromote, RuleId::Gp, true},
  };
  return cells;
}

namespace {

Profile load(const char* doc) { return parse_profile(doc).profile; }

constexpr const char* kEmptyOutcome =
    "#! parties: b,c\n2: b>c\n1: c\n";
constexpr const char* kSolid =
    "#! parties: a,b,c\n4: a>b>c\n3: b>c>a\n2: c>b>a\n";
constexpr const char* kGpThreshold =
    "#! parties: a,b\n3: a>b\n2: b\n";
constexpr const char* kDoIdlp =
    "#! parties: a,b,c\n1: c>b\n3: b\n3: a\n";
constexpr const char* kClones =
    "#! parties: a,c,c2\n6: a\n4: c2>c>a\n3: c>c2>a\n";
constexpr const char* kStvMono =
    "#! parties: a,b,c,d\n5: a>c\n6: c\n13: d\n4: b>a\n2: b>c\n";
constexpr const char* kGpMono =
    "#! parties: a,b,c\n5: a>c\n2: a>b>c\n6: c>b\n2: b\n";
constexpr const char* kStvReinfExtra =
    "#! parties: a,b,c,d\n2: a\n1: c\n";
constexpr const char* kGpReinfExtra =
    "#! parties: a,b,c\n1: b\n";
// strategyproofness fixtures list voters one ballot each: manipulations are
// per voter, and party safety is judged against unilateral deviations
constexpr const char* kDoRepSp =
    "#! parties: a,b,c\n1: b>a\n1: a>c\n";
constexpr const char* kStvRepSp =
    "#! parties: a,b,c\n1: b>a\n1: c>a\n";
constexpr const char* kGpTwoRisky =
    "#! parties: a,b,c\n1: a\n1: a\n1: a\n1: b>c\n1: b>c\n1: c>b>a\n";
constexpr const char* kShareTop2 =
    "#! parties: a,b,c\n"
    "1: a>b\n1: a\n1: a\n1: a\n1: a\n1: a\n"
    "1: b>c\n1: b>c\n1: b>c\n1: c>a\n1: c>a\n1: c>a\n";
// same election with c ahead of b in the tie-break order, where STV first
// eliminates b on the 3-3 tie and the share manipulation goes through
constexpr const char* kShareTop2Stv =
    "#! parties: a,c,b\n"
    "1: a>b\n1: a\n1: a\n1: a\n1: a\n1: a\n"
    "1: b>c\n1: b>c\n1: b>c\n1: c>a\n1: c>a\n1: c>a\n";
constexpr const char* kSharePromoteStv =
    "#! parties: a,b,c,d\n"
    "1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n1: b\n"
    "1: c>d\n1: c>d\n1: c>d\n1: c>d\n"
    "1: d>c\n1: d>c\n1: d>c\n"
    "1: d>b\n1: d>b\n"
    "1: a>c>d\n1: a>c>d\n1: a>c>d\n"
    "1: a>b>c>d\n";
constexpr const char* kMaxDirectWinners =
    "#! parties: a,b,c\n2: a>b\n2: a>c\n3: c\n3: b\n";
constexpr const char* kMaxThreshold =
    "#! parties: a,b,c\n5: a\n1: a>b\n1: a>c\n4: b\n4: c\n";
constexpr const char* kMaxMono =
    "#! parties: a,b,c\n5: b\n1: b>c\n5: c\n1: c>b\n3: a>b\n3: a>c\n4: a\n";
constexpr const char* kUnrepDoStv =
    "#! parties: a,b,c\n3: a\n2: b>c\n1: c\n";
constexpr const char* kUnrepGp =
    "#! parties: a,b,c,d\n3: a\n2: b>a\n2: c>b\n2: d>b\n";

StoredFixture fixture(std::string name, AxiomId axiom, RuleId rule,
                     std::function<CheckResult()> run) {
  return {std::move(name), axiom, rule, std::move(run)};
}

Threshold t(long long v) { return Threshold{Rational(v)}; }

}  // namespace

const std::vector<StoredFixture>& stored_fixtures() {
  static const std::vector<StoredFixture> fixtures = [] {
    std::vector<StoredFixture> f;

    for (RuleId rule : {RuleId::Do, RuleId::Stv}) {
      f.push_back(fixture(std::string("set_maximality/") + std::string(rule_name(rule)),
                          AxiomId::SetMaximality, rule, [rule] {
                            return check_set_maximality(rule, load(kEmptyOutcome), t(3));
                          }));
      f.push_back(fixture(std::string("weak_efficiency/") + std::string(rule_name(rule)),
                          AxiomId::WeakEfficiency, rule, [rule] {
                            return check_weak_efficiency(rule, load(kEmptyOutcome), t(3));
                          }));
    }
    for (RuleId rule : {RuleId::Do, RuleId::Gp})
      f.push_back(fixture(std::string("solid_coalitions/") + std::string(rule_name(rule)),
                          AxiomId::SolidCoalitions, rule, [rule] {
                            return check_solid_coalitions(rule, load(kSolid), t(5));
                          }));
    f.push_back(fixture("threshold_monotonicity/gp", AxiomId::ThresholdMonotonicity, RuleId::Gp,
                        [] {
                          return check_threshold_monotonicity(RuleId::Gp, load(kGpThreshold),
                                                              t(3), t(4));
                        }));
    f.push_back(fixture("idlp/do", AxiomId::Idlp, RuleId::Do, [] {
      return check_idlp(RuleId::Do, load(kDoIdlp), t(2), t(4));
    }));
    f.push_back(fixture("idlp/gp", AxiomId::Idlp, RuleId::Gp, [] {
      return check_idlp(RuleId::Gp, load(kGpThreshold), t(3), t(4));
    }));
    for (RuleId rule : {RuleId::Do, RuleId::Gp, RuleId::MaxP})
      f.push_back(fixture(std::string("clone_independence/") + std::string(rule_name(rule)),
                          AxiomId::CloneIndependence, rule, [rule] {
                            Profile p = load(kClones);
                            return check_clone_independence(rule, p, t(7),
                                                            {p.roster().require("c"),
                                                             p.roster().require("c2")});
                          }));
    f.push_back(fixture("reinforcement/stv", AxiomId::Reinforcement, RuleId::Stv, [] {
      return check_reinforcement(RuleId::Stv, load(kStvMono), t(13), load(kStvReinfExtra), t(1));
    }));
    f.push_back(fixture("reinforcement/gp", AxiomId::Reinforcement, RuleId::Gp, [] {
      return check_reinforcement(RuleId::Gp, load(kGpMono), t(7), load(kGpReinfExtra), t(1));
    }));
    f.push_back(fixture("monotonicity/stv", AxiomId::Monotonicity, RuleId::Stv, [] {
      Profile p = load(kStvMono);
      return check_monotonicity(RuleId::Stv, p, t(13), 4, p.roster().require("c"));
    }));
    f.push_back(fixture("monotonicity/gp", AxiomId::Monotonicity, RuleId::Gp, [] {
      Profile p = load(kGpMono);
      return check_monotonicity(RuleId::Gp, p, t(7), 1, p.roster().require("b"));
    }));
    f.push_back(fixture("rep_sp_one_risky/do", AxiomId::RepSpOneRisky, RuleId::Do, [] {
      return check_representative_sp(RuleId::Do, load(kDoRepSp), t(2), 0);
    }));
    f.push_back(fixture("rep_sp_one_risky/stv", AxiomId::RepSpOneRisky, RuleId::Stv, [] {
      return check_representative_sp(RuleId::Stv, load(kStvRepSp), t(2), 0);
    }));
    f.push_back(fixture("rep_sp_two_risky/gp", AxiomId::RepSpOneRisky, RuleId::Gp, [] {
      // boundary example: with two risky parties even GP is manipulable
      return check_representative_sp(RuleId::Gp, load(kGpTwoRisky), t(3), 5);
    }));
    f.push_back(fixture("share_sp_safe_top2/gp", AxiomId::ShareSpSafeTop2, RuleId::Gp, [] {
      return check_share_sp(RuleId::Gp, load(kShareTop2), t(4), 0, SpRestriction::SafeTop2);
    }));
    f.push_back(fixture("share_sp_safe_top2/stv", AxiomId::ShareSpSafeTop2, RuleId::Stv, [] {
      return check_share_sp(RuleId::Stv, load(kShareTop2Stv), t(4), 0, SpRestriction::SafeTop2);
    }));
    f.push_back(fixture("share_sp_promote/stv", AxiomId::ShareSpPromote, RuleId::Stv, [] {
      return check_share_sp(RuleId::Stv, load(kSharePromoteStv), t(10), 22,
                            SpRestriction::PromoteRepresentative);
    }));
    for (RuleId rule : {RuleId::MaxP, RuleId::MaxR}) {
      std::string suffix = std::string("/") + std::string(rule_name(rule));
      f.push_back(fixture("direct_winners" + suffix, AxiomId::DirectWinners, rule, [rule] {
        return check_direct_winners(rule, load(kMaxDirectWinners), t(4));
      }));
      f.push_back(
          fixture("threshold_monotonicity" + suffix, AxiomId::ThresholdMonotonicity, rule,
                  [rule] {
                    return check_threshold_monotonicity(rule, load(kMaxThreshold), t(5), t(7));
                  }));
      f.push_back(fixture("monotonicity" + suffix, AxiomId::Monotonicity, rule, [rule] {
        Profile p = load(kMaxMono);
        return check_monotonicity(rule, p, t(9), 3, p.roster().require("b"));
      }));
    }
    for (RuleId rule : {RuleId::Do, RuleId::Stv})
      f.push_back(fixture(std::string("unrepresented/") + std::string(rule_name(rule)),
                          AxiomId::Unrepresented, rule, [rule] {
                            Profile p = load(kUnrepDoStv);
                            Outcome s = run_rule(rule, p, t(3)).outcome;
                            CheckResult r = check_unrepresented(p, t(3), s);
                            if (r) r->rule = rule;
                            return r;
                          }));
    f.push_back(fixture("unrepresented/gp", AxiomId::Unrepresented, RuleId::Gp, [] {
      Profile p = load(kUnrepGp);
      Outcome s = run_rule(RuleId::Gp, p, t(4)).outcome;
      CheckResult r = check_unrepresented(p, t(4), s);
      if (r) r->rule = RuleId::Gp;
      return r;
    }));
    for (RuleId rule : {RuleId::Do, RuleId::Stv, RuleId::Gp})
      f.push_back(fixture(std::string("coalition_insurance/") + std::string(rule_name(rule)),
                          AxiomId::CoalitionInsurance, rule,
                          [rule]() -> CheckResult { return coalition_insurance_fixture(rule); }));
    return f;
  }();
  return fixtures;
}

}  // namespace psr
