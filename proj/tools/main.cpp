// psr: party selection rules for proportional elections with thresholds.
//
// Exit codes: 0 success, 1 violation found (axiom commands), 2 input error,
// 3 instance-size guard exceeded.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "psr/apportion.hpp"
#include "psr/augment.hpp"
#include "psr/axioms.hpp"
#include "psr/experiments.hpp"
#include "psr/io.hpp"
#include "psr/optrules.hpp"

namespace {

using namespace psr;

struct ViolationFound {};  // unwinds to exit code 1

void output(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file_atomic(out_path, text);
}

ReportFormat format_of(const std::string& name) {
  if (name == "structured") return ReportFormat::Structured;
  if (name == "flat" || name == "flat-table") return ReportFormat::FlatTable;
  throw InputError("unknown format: " + name + " (expected structured|flat)");
}

RuleId parse_rule(const std::string& name) {
  auto rule = rule_from_name(name);
  if (!rule) throw InputError("unknown rule: " + name);
  return *rule;
}

AxiomId parse_axiom(const std::string& name) {
  auto axiom = axiom_from_name(name);
  if (!axiom) throw InputError("unknown axiom: " + name);
  return *axiom;
}

ParsedProfile load_profile(const std::string& path) {
  return parse_profile(read_file(path));
}

Threshold resolve_tau(const ParsedProfile& doc, const std::string& tau_flag) {
  if (!tau_flag.empty()) {
    Threshold tau = parse_tau_spec(tau_flag, doc.profile.total_weight());
    check_threshold(doc.profile, tau);
    return tau;
  }
  if (doc.default_tau) return *doc.default_tau;
  throw InputError("no threshold: pass --tau or add '#! tau:' to the profile");
}

// ---------------------------------------------------------------------------

struct ComputeArgs {
  std::string rule, profile, tau, format = "structured", out;
  bool universe = false;
  int seats = 0;
};

void run_compute(const ComputeArgs& args) {
  ParsedProfile doc = load_profile(args.profile);
  Threshold tau = resolve_tau(doc, args.tau);
  RuleId rule = parse_rule(args.rule);
  RuleResult result = run_rule(rule, doc.profile, tau);

  std::optional<std::vector<Outcome>> universe;
  if (args.universe) universe = run_parallel_universe(rule, doc.profile, tau);
  std::optional<int> seats;
  if (args.seats > 0) seats = args.seats;

  output(emit_rule_report(doc.profile, rule, tau, result, format_of(args.format),
                          universe ? &*universe : nullptr, seats),
         args.out);
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string axiom, rule, profile, tau, tau2, profile2, party, clone_pair, out;
  int voter = -1;
};

CheckResult dispatch_check(const CheckArgs& args, AxiomId axiom, RuleId rule,
                           const ParsedProfile& doc, const Threshold& tau) {
  const Profile& p = doc.profile;
  auto need_tau2 = [&] {
    if (args.tau2.empty()) throw InputError("this axiom needs --tau2");
    Threshold t2 = parse_tau_spec(args.tau2, p.total_weight());
    check_threshold(p, t2);
    return t2;
  };
  auto voters = [&] {
    std::vector<int> vs;
    if (args.voter >= 0) vs.push_back(args.voter);
    else
      for (size_t i = 0; i < p.ballots().size(); ++i) vs.push_back(static_cast<int>(i));
    return vs;
  };

  switch (axiom) {
    case AxiomId::SetMaximality: return check_set_maximality(rule, p, tau);
    case AxiomId::WeakEfficiency: return check_weak_efficiency(rule, p, tau);
    case AxiomId::DirectWinners: return check_direct_winners(rule, p, tau);
    case AxiomId::SolidCoalitions: return check_solid_coalitions(rule, p, tau);
    case AxiomId::LocalStability: {
      CheckResult r = check_local_stability(p, tau, run_rule(rule, p, tau).outcome);
      if (r) r->rule = rule;
      return r;
    }
    case AxiomId::Unrepresented: {
      CheckResult r = check_unrepresented(p, tau, run_rule(rule, p, tau).outcome);
      if (r) r->rule = rule;
      return r;
    }
    case AxiomId::ThresholdMonotonicity:
      return check_threshold_monotonicity(rule, p, tau, need_tau2());
    case AxiomId::Idlp: return check_idlp(rule, p, tau, need_tau2());
    case AxiomId::CloneIndependence: {
      std::vector<std::pair<int, int>> pairs;
      if (!args.clone_pair.empty()) {
        auto comma = args.clone_pair.find(',');
        if (comma == std::string::npos)
          throw InputError("--clone-pair expects two comma-separated party ids");
        pairs.emplace_back(p.roster().require(args.clone_pair.substr(0, comma)),
                           p.roster().require(args.clone_pair.substr(comma + 1)));
      } else {
        pairs = find_clones(p);
        if (pairs.empty()) throw InputError("profile has no clone pair; pass --clone-pair");
      }
      for (auto pair : pairs) {
        CheckResult r = check_clone_independence(rule, p, tau, pair);
        if (r) return r;
        r = check_clone_independence(rule, p, tau, {pair.second, pair.first});
        if (r) return r;
      }
      return std::nullopt;
    }
    case AxiomId::Reinforcement: {
      if (args.profile2.empty()) throw InputError("reinforcement needs --profile2 and --tau2");
      ParsedProfile doc2 = load_profile(args.profile2);
      Threshold t2 = args.tau2.empty()
                         ? resolve_tau(doc2, "")
                         : parse_tau_spec(args.tau2, doc2.profile.total_weight());
      return check_reinforcement(rule, p, tau, doc2.profile, t2);
    }
    case AxiomId::Monotonicity: {
      std::vector<int> parties;
      if (!args.party.empty()) parties.push_back(p.roster().require(args.party));
      else
        for (int c : run_rule(rule, p, tau).outcome.members()) parties.push_back(c);
      for (int v : voters())
        for (int c : parties) {
          CheckResult r = check_monotonicity(rule, p, tau, v, c);
          if (r) return r;
        }
      return std::nullopt;
    }
    case AxiomId::RepSpOneRisky: {
      for (int v : voters()) {
        CheckResult r = check_representative_sp(rule, p, tau, v);
        if (r) return r;
      }
      return std::nullopt;
    }
    case AxiomId::ShareSpSafeTop2:
    case AxiomId::ShareSpPromote: {
      SpRestriction restriction = axiom == AxiomId::ShareSpSafeTop2
                                      ? SpRestriction::SafeTop2
                                      : SpRestriction::PromoteRepresentative;
      for (int v : voters()) {
        CheckResult r = check_share_sp(rule, p, tau, v, restriction);
        if (r) return r;
      }
      return std::nullopt;
    }
    case AxiomId::CoalitionInsurance: return coalition_insurance_fixture(rule);
  }
  throw InputError("unknown axiom");
}

void run_check(const CheckArgs& args) {
  ParsedProfile doc = load_profile(args.profile);
  Threshold tau = resolve_tau(doc, args.tau);
  AxiomId axiom = parse_axiom(args.axiom);
  RuleId rule = parse_rule(args.rule);
  CheckResult result = dispatch_check(args, axiom, rule, doc, tau);
  if (result) {
    output(emit_violation(*result), args.out);
    throw ViolationFound{};
  }
  output("pass\n", args.out);
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string axiom, rule, out;
  long trials = 1000;
  int max_parties = 5, max_voters = 10, tau_min = 0, tau_max = -1;
  uint64_t seed = 1;
};

void run_search(const SearchArgs& args) {
  SearchBounds bounds{args.max_parties, args.max_voters, args.tau_min, args.tau_max};
  SearchReport report =
      random_search(parse_axiom(args.axiom), parse_rule(args.rule), args.trials, bounds,
                    args.seed);
  output(emit_search_report(args.axiom, args.rule, report.trials, report.vacuous,
                            report.violation ? &*report.violation : nullptr),
         args.out);
  if (report.violation) throw ViolationFound{};
}

struct TableArgs {
  long trials = 10000;
  uint64_t seed = 1;
  int max_parties = 5, max_voters = 10;
};

void run_table(const TableArgs& args) {
  bool all_ok = true;
  std::cout << "axiom                      rule  expected   observed  detail\n";
  for (const TableCell& cell : table_one()) {
    std::string detail;
    bool ok;
    if (cell.satisfied) {
      SearchBounds bounds{args.max_parties, args.max_voters, 0, -1};
      SearchReport report = random_search(cell.axiom, cell.rule, args.trials, bounds, args.seed);
      ok = !report.violation;
      detail = std::to_string(report.trials) + " trials" +
               (report.vacuous ? " (" + std::to_string(report.vacuous) + " vacuous)" : "");
      if (!ok) detail = "violated: " + report.violation->narrative;
    } else {
      ok = false;
      for (const StoredFixture& fixture : stored_fixtures()) {
        if (fixture.axiom != cell.axiom || fixture.rule != cell.rule) continue;
        CheckResult r = fixture.run();
        if (r && replay(*r)) {
          ok = true;
          detail = "fixture " + fixture.name;
        }
        break;
      }
      if (!ok && detail.empty()) detail = "stored fixture missing or did not reproduce";
    }
    all_ok = all_ok && ok;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-26s %-5s %-10s %-9s %s\n",
                  std::string(axiom_name(cell.axiom)).c_str(),
                  std::string(rule_name(cell.rule)).c_str(),
                  cell.satisfied ? "satisfied" : "violated",
                  ok ? "ok" : "MISMATCH", detail.c_str());
    std::cout << buf;
  }
  if (!all_ok) throw ViolationFound{};
}

// ---------------------------------------------------------------------------

struct TauGrid {
  std::vector<Rational> taus;
};

TauGrid make_grid(const Profile& profile, const std::string& from, const std::string& to,
                  int steps) {
  if (steps < 1) throw InputError("--steps must be at least 1");
  Threshold lo = parse_tau_spec(from, profile.total_weight());
  Threshold hi = parse_tau_spec(to, profile.total_weight());
  TauGrid grid;
  if (steps == 1) {
    grid.taus.push_back(lo.value);
    return grid;
  }
  Rational span = hi.value - lo.value;
  for (int i = 0; i < steps; ++i)
    grid.taus.push_back(lo.value + span * Rational(i) / Rational(steps - 1));
  return grid;
}

struct SweepArgs {
  std::string profile, rule, tau_from, tau_to, format = "structured", out;
  int steps = 10;
};

void run_sweep(const SweepArgs& args) {
  ParsedProfile doc = load_profile(args.profile);
  TauGrid grid = make_grid(doc.profile, args.tau_from, args.tau_to, args.steps);
  ExperimentReport report = sweep_threshold(doc.profile, parse_rule(args.rule), grid.taus);
  output(emit_experiment_report(doc.profile, report, format_of(args.format)), args.out);
}

struct TruncateArgs {
  std::string profile, rule, tau, format = "structured", out;
  int k_from = 1, k_to = 1;
};

void run_truncate(const TruncateArgs& args) {
  ParsedProfile doc = load_profile(args.profile);
  Threshold tau = resolve_tau(doc, args.tau);
  if (args.k_from < 1 || args.k_to < args.k_from)
    throw InputError("invalid truncation range");
  std::vector<int> ks;
  for (int k = args.k_from; k <= args.k_to; ++k) ks.push_back(k);
  ExperimentReport report = sweep_truncation(doc.profile, parse_rule(args.rule), tau, ks);
  output(emit_experiment_report(doc.profile, report, format_of(args.format)), args.out);
}

struct NoiseArgs {
  std::string profile, rule, tau_from, tau_to, format = "structured", out;
  int steps = 10, samples = 100;
  double sigma = 0.1;
  uint64_t seed = 1;
};

void run_noise(const NoiseArgs& args) {
  ParsedProfile doc = load_profile(args.profile);
  TauGrid grid = make_grid(doc.profile, args.tau_from, args.tau_to, args.steps);
  ExperimentReport report = noise_sweep(doc.profile, parse_rule(args.rule), grid.taus,
                                        args.samples, args.sigma, args.seed);
  output(emit_experiment_report(doc.profile, report, format_of(args.format)), args.out);
}

struct StrategicArgs {
  std::string survey, results, buckets = "7,5,6,3", source = "two_vote";
  std::string format = "structured", out;
};

void run_strategic(const StrategicArgs& args) {
  std::vector<std::vector<std::string>> result_rows = parse_csv(read_file(args.results));
  if (result_rows.size() < 2) throw InputError("results file has no data rows");
  // the results file fixes the roster and its priority order
  std::vector<std::string> ids;
  for (size_t r = 1; r < result_rows.size(); ++r)
    if (!result_rows[r].empty() && !result_rows[r][0].empty()) ids.push_back(result_rows[r][0]);
  Roster roster = Roster::from_ids(ids);
  std::vector<Rational> shares = parse_official_results(read_file(args.results), roster);

  std::vector<SurveyRow> rows = parse_survey(read_file(args.survey), roster);

  BucketCuts cuts;
  {
    std::vector<Rational> values;
    std::string cur;
    for (char c : args.buckets + ",") {
      if (c == ',') {
        values.push_back(Rational::from_string(cur) / Rational(100));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (values.size() != 4) throw InputError("--buckets expects safe,risky_lo,risky_hi,out");
    cuts = BucketCuts{values[0], values[1], values[2], values[3]};
  }
  PartyBuckets buckets = bucket_parties(shares, cuts);

  RankingSource source = args.source == "full" ? RankingSource::Full : RankingSource::TwoVote;
  WeightingResult weighting = compute_weights(rows, roster, shares);
  StrategicReport report =
      classify_strategic(rows, weighting.weights, roster, shares, buckets, source);
  output(emit_strategic_report(report, buckets, roster, format_of(args.format)), args.out);
}

struct ConvertArgs {
  std::string from = "zenodo-csv", to = "survey-csv", map, input, out;
};

void run_convert(const ConvertArgs& args) {
  if (args.from != "zenodo-csv" || args.to != "survey-csv")
    throw InputError("supported conversion: --from zenodo-csv --to survey-csv");
  ColumnMapping mapping = parse_mapping(read_file(args.map));
  std::vector<SurveyRow> rows = convert_zenodo(read_file(args.input), mapping);
  output(write_survey(rows), args.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"party selection rules for proportional elections with thresholds"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "run a selection rule on a profile");
  compute->add_option("--rule", compute_args.rule, "do|stv|gp|uninominal|maxp|maxr|do+|stv+|gp+")
      ->required();
  compute->add_option("--profile", compute_args.profile, "profile document")->required();
  compute->add_option("--tau", compute_args.tau, "threshold: N, P% or a rational");
  compute->add_flag("--parallel-universe", compute_args.universe,
                    "enumerate all tie-break universes (stv/gp)");
  compute->add_option("--seats", compute_args.seats, "apportion a parliament of this size");
  compute->add_option("--format", compute_args.format, "structured|flat");
  compute->add_option("--out", compute_args.out, "write the report to a file");

  CLI::App* axioms = app.add_subcommand("axioms", "axiom checks, searches, and the full table");
  axioms->require_subcommand(1);

  CheckArgs check_args;
  CLI::App* check = axioms->add_subcommand("check", "check one axiom on one instance");
  check->add_option("--axiom", check_args.axiom, "axiom id")->required();
  check->add_option("--rule", check_args.rule, "rule id")->required();
  check->add_option("--profile", check_args.profile, "profile document")->required();
  check->add_option("--tau", check_args.tau, "threshold");
  check->add_option("--tau2", check_args.tau2, "second threshold (monotonicity/idlp)");
  check->add_option("--profile2", check_args.profile2, "second profile (reinforcement)");
  check->add_option("--voter", check_args.voter, "ballot index (default: all)");
  check->add_option("--party", check_args.party, "party id (monotonicity)");
  check->add_option("--clone-pair", check_args.clone_pair, "pair c,c2 (clone independence)");
  check->add_option("--out", check_args.out, "write the result to a file");

  SearchArgs search_args;
  CLI::App* search = axioms->add_subcommand("search", "randomized counterexample search");
  search->add_option("--axiom", search_args.axiom)->required();
  search->add_option("--rule", search_args.rule)->required();
  search->add_option("--trials", search_args.trials);
  search->add_option("--max-parties", search_args.max_parties);
  search->add_option("--max-voters", search_args.max_voters);
  search->add_option("--tau-min", search_args.tau_min);
  search->add_option("--tau-max", search_args.tau_max);
  search->add_option("--seed", search_args.seed);
  search->add_option("--out", search_args.out);

  TableArgs table_args;
  CLI::App* table = axioms->add_subcommand("table", "verify the full satisfied/failed matrix");
  table->add_option("--trials", table_args.trials);
  table->add_option("--seed", table_args.seed);
  table->add_option("--max-parties", table_args.max_parties);
  table->add_option("--max-voters", table_args.max_voters);

  CLI::App* experiment = app.add_subcommand("experiment", "survey simulations and sweeps");
  experiment->require_subcommand(1);

  SweepArgs sweep_args;
  CLI::App* sweep = experiment->add_subcommand("sweep", "threshold sweep");
  sweep->add_option("--profile", sweep_args.profile)->required();
  sweep->add_option("--rule", sweep_args.rule)->required();
  sweep->add_option("--tau-from", sweep_args.tau_from)->required();
  sweep->add_option("--tau-to", sweep_args.tau_to)->required();
  sweep->add_option("--steps", sweep_args.steps);
  sweep->add_option("--format", sweep_args.format);
  sweep->add_option("--out", sweep_args.out);

  TruncateArgs truncate_args;
  CLI::App* trunc = experiment->add_subcommand("truncate", "ballot-length sweep");
  trunc->add_option("--profile", truncate_args.profile)->required();
  trunc->add_option("--rule", truncate_args.rule)->required();
  trunc->add_option("--tau", truncate_args.tau);
  trunc->add_option("--k-from", truncate_args.k_from);
  trunc->add_option("--k-to", truncate_args.k_to)->required();
  trunc->add_option("--format", truncate_args.format);
  trunc->add_option("--out", truncate_args.out);

  NoiseArgs noise_args;
  CLI::App* noise = experiment->add_subcommand("noise", "threshold sweep under weight noise");
  noise->add_option("--profile", noise_args.profile)->required();
  noise->add_option("--rule", noise_args.rule)->required();
  noise->add_option("--tau-from", noise_args.tau_from)->required();
  noise->add_option("--tau-to", noise_args.tau_to)->required();
  noise->add_option("--steps", noise_args.steps);
  noise->add_option("--samples", noise_args.samples);
  noise->add_option("--sigma", noise_args.sigma);
  noise->add_option("--seed", noise_args.seed);
  noise->add_option("--format", noise_args.format);
  noise->add_option("--out", noise_args.out);

  StrategicArgs strategic_args;
  CLI::App* strategic = experiment->add_subcommand("strategic", "strategic-voter classification");
  strategic->add_option("--survey", strategic_args.survey)->required();
  strategic->add_option("--results", strategic_args.results)->required();
  strategic->add_option("--buckets", strategic_args.buckets,
                        "percent cuts: safe,risky_lo,risky_hi,out");
  strategic->add_option("--ranking-source", strategic_args.source, "two_vote|full");
  strategic->add_option("--format", strategic_args.format);
  strategic->add_option("--out", strategic_args.out);

  ConvertArgs convert_args;
  CLI::App* convert = app.add_subcommand("convert", "convert a survey export to the survey schema");
  convert->add_option("--from", convert_args.from);
  convert->add_option("--to", convert_args.to);
  convert->add_option("--map", convert_args.map, "column-mapping JSON")->required();
  convert->add_option("--input", convert_args.input)->required();
  convert->add_option("--output", convert_args.out);

  try {
    app.parse(argc, argv);
    if (compute->parsed()) run_compute(compute_args);
    else if (check->parsed()) run_check(check_args);
    else if (search->parsed()) run_search(search_args);
    else if (table->parsed()) run_table(table_args);
    else if (sweep->parsed()) run_sweep(sweep_args);
    else if (trunc->parsed()) run_truncate(truncate_args);
    else if (noise->parsed()) run_noise(noise_args);
    else if (strategic->parsed()) run_strategic(strategic_args);
    else if (convert->parsed()) run_convert(convert_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ViolationFound&) {
    return 1;
  } catch (const GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
