#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psr/axioms.hpp"
#include "psr/experiments.hpp"
#include "psr/rules.hpp"

namespace psr {

/// A parsed profile document: roster, ballots, and the optional default
/// threshold from the header.
struct ParsedProfile {
  Profile profile;
  std::optional<Threshold> default_tau;
};

/// Profile document grammar:
///   # comment
///   #! parties: a,b,c,d        (required; order defines the tie-break priority)
///   #! tau: 5                  (optional; also "5%" or "5/2")
///   4: a>b>c                   (weight: ranking; weight may be "2.5" or "5/2")
///   d                          (weight defaults to 1)
///   2:                         (weight-2 empty ballot)
/// Percent thresholds resolve against the profile's total weight at load time.
ParsedProfile parse_profile(std::string_view text);

std::string write_profile(const Profile& profile,
                          const std::optional<Threshold>& default_tau = {});

/// "5", "5%", "5/2" or "2.5" against a profile's total weight.
Threshold parse_tau_spec(std::string_view spec, const Rational& total_weight);

/// Survey CSV with header:
///   respondent_id,intention,two_vote,full_ranking,completed_at
/// Rankings are semicolon-separated party ids; intention may be blank.
std::vector<SurveyRow> parse_survey(std::string_view csv, const Roster& roster);
std::string write_survey(const std::vector<SurveyRow>& rows);

/// Official results CSV with header "party,share"; shares are decimal
/// fractions ("0.07"), percentages ("7%"), or rationals ("7/100").
std::vector<Rational> parse_official_results(std::string_view csv, const Roster& roster);

/// Maps a third-party survey export onto the survey schema. The mapping file
/// is JSON:
///   {
///     "respondent_id": "ID",
///     "intention": "vote_intent",
///     "two_vote": "two_vote_col"           (or ["rank1_col", "rank2_col"]),
///     "full_ranking": "ranking_col"        (or a column list),
///     "completed_at": "date_col",          (optional)
///     "separator": ";",                    (optional, inside ranking cells)
///     "party_map": {"List A": "a", ...}    (optional id translation)
///   }
struct ColumnMapping {
  std::string respondent_id;
  std::string intention;
  std::vector<std::string> two_vote;
  std::vector<std::string> full_ranking;
  std::string completed_at;  // empty = absent
  std::string separator = ";";
  std::vector<std::pair<std::string, std::string>> party_map;
};

ColumnMapping parse_mapping(std::string_view json_text);
std::vector<SurveyRow> convert_zenodo(std::string_view csv, const ColumnMapping& mapping);

/// Minimal CSV reader (handles quoted fields); shared by the ingestion paths.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

enum class ReportFormat { Structured, FlatTable };

/// Structured reports are schema-versioned JSON trees with deterministic
/// field order; every exact quantity carries its rational text and a decimal
/// approximation side by side.
std::string report_header_schema();

std::string emit_rule_report(const Profile& profile, RuleId rule, const Threshold& tau,
                             const RuleResult& result, ReportFormat format,
                             const std::vector<Outcome>* universe = nullptr,
                             const std::optional<int>& seats = {});

std::string emit_experiment_report(const Profile& profile, const ExperimentReport& report,
                                   ReportFormat format);

std::string emit_strategic_report(const StrategicReport& report, const PartyBuckets& buckets,
                                  const Roster& roster, ReportFormat format);

std::string emit_violation(const Violation& violation);

std::string emit_search_report(std::string_view axiom, std::string_view rule, long trials,
                               long vacuous, const Violation* violation);

/// Round-trip helper: parses a structured report back into its JSON form and
/// re-emits it; used to verify emission is self-consistent.
std::string reparse_report(std::string_view structured_text);

/// Atomic file write (temp file + rename).
void write_file_atomic(const std::string& path, std::string_view content);
std::string read_file(const std::string& path);

}  // namespace psr
