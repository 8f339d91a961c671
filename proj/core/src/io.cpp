#include "psr/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "psr/apportion.hpp"

namespace psr {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

ParsedProfile parse_profile(std::string_view text) {
  std::optional<Roster> roster;
  std::vector<Ballot> ballots;
  std::string tau_spec;

  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.starts_with("#!")) {
      std::string_view directive = trim(line.substr(2));
      size_t colon = directive.find(':');
      if (colon == std::string_view::npos) fail_line(line_no, "malformed directive");
      std::string_view key = trim(directive.substr(0, colon));
      std::string_view value = trim(directive.substr(colon + 1));
      if (key == "parties") {
        if (roster) fail_line(line_no, "duplicate parties header");
        std::vector<std::string> ids;
        for (std::string_view id : split(value, ',')) {
          id = trim(id);
          if (id.empty()) fail_line(line_no, "empty party id");
          ids.emplace_back(id);
        }
        try {
          roster = Roster::from_ids(ids);
        } catch (const InputError& e) {
          fail_line(line_no, e.what());
        }
      } else if (key == "tau") {
        tau_spec = std::string(value);
      } else {
        fail_line(line_no, "unknown directive: " + std::string(key));
      }
      continue;
    }
    if (line.starts_with("#")) continue;

    if (!roster) fail_line(line_no, "ballot before '#! parties:' header");
    Ballot ballot;
    std::string_view ranking_text = line;
    size_t colon = line.find(':');
    if (colon != std::string_view::npos) {
      std::string_view weight_text = trim(line.substr(0, colon));
      try {
        ballot.weight = Rational::from_string(std::string(weight_text));
      } catch (const std::exception&) {
        fail_line(line_no, "malformed weight: " + std::string(weight_text));
      }
      if (ballot.weight.is_negative()) fail_line(line_no, "negative ballot weight");
      ranking_text = trim(line.substr(colon + 1));
    }
    if (!ranking_text.empty()) {
      for (std::string_view id : split(ranking_text, '>')) {
        id = trim(id);
        if (id.empty()) fail_line(line_no, "empty entry in ranking");
        int p = roster->find(id);
        if (p < 0) fail_line(line_no, "unknown party: " + std::string(id));
        if (rank_position(ballot, p) >= 0)
          fail_line(line_no, "duplicate party in ballot: " + std::string(id));
        ballot.ranking.push_back(p);
      }
    }
    ballots.push_back(std::move(ballot));
  }
  if (!roster) throw InputError("missing '#! parties:' header");

  ParsedProfile parsed{Profile(*roster, std::move(ballots)), std::nullopt};
  if (!tau_spec.empty())
    parsed.default_tau = parse_tau_spec(tau_spec, parsed.profile.total_weight());
  return parsed;
}

std::string write_profile(const Profile& profile, const std::optional<Threshold>& default_tau) {
  std::ostringstream out;
  out << "#! parties: ";
  for (int p = 0; p < profile.party_count(); ++p) {
    if (p) out << ",";
    out << profile.roster().id(p);
  }
  out << "\n";
  if (default_tau) out << "#! tau: " << default_tau->value << "\n";
  for (const Ballot& b : profile.ballots()) {
    out << b.weight << ":";
    for (size_t i = 0; i < b.ranking.size(); ++i)
      out << (i == 0 ? " " : ">") << profile.roster().id(b.ranking[i]);
    out << "\n";
  }
  return out.str();
}

Threshold parse_tau_spec(std::string_view spec, const Rational& total_weight) {
  std::string_view s = trim(spec);
  if (s.empty()) throw InputError("empty threshold");
  if (s.back() == '%') {
    Rational pct = Rational::from_string(std::string(trim(s.substr(0, s.size() - 1))));
    return Threshold::percent(pct, total_weight);
  }
  return Threshold(Rational::from_string(std::string(s)));
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_started = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"': quoted = true; row_started = true; break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        row_started = true;
        break;
      case '\r': break;
      case '\n':
        if (row_started || !field.empty()) {
          row.push_back(std::move(field));
          field.clear();
          rows.push_back(std::move(row));
          row.clear();
        }
        row_started = false;
        break;
      default: field += c; row_started = true; break;
    }
  }
  if (row_started || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

int column_index(const std::vector<std::string>& header, const std::string& name,
                 bool required) {
  for (size_t i = 0; i < header.size(); ++i)
    if (std::string(trim(header[i])) == name) return static_cast<int>(i);
  if (required) throw InputError("survey file is missing column '" + name + "'");
  return -1;
}

std::vector<std::string> split_ranking(const std::string& cell, char sep) {
  std::vector<std::string> ids;
  for (std::string_view part : split(cell, sep)) {
    part = trim(part);
    if (!part.empty()) ids.emplace_back(part);
  }
  return ids;
}

void validate_ranking(const std::vector<std::string>& ids, const Roster& roster, int row) {
  for (size_t i = 0; i < ids.size(); ++i) {
    if (roster.find(ids[i]) < 0)
      throw InputError("survey row " + std::to_string(row) + ": unknown party: " + ids[i]);
    for (size_t j = i + 1; j < ids.size(); ++j)
      if (ids[i] == ids[j])
        throw InputError("survey row " + std::to_string(row) + ": duplicate party: " + ids[i]);
  }
}

}  // namespace

std::vector<SurveyRow> parse_survey(std::string_view csv, const Roster& roster) {
  std::vector<std::vector<std::string>> rows = parse_csv(csv);
  if (rows.empty()) throw InputError("empty survey file");
  const auto& header = rows.front();
  int col_id = column_index(header, "respondent_id", true);
  int col_intent = column_index(header, "intention", true);
  int col_two = column_index(header, "two_vote", true);
  int col_full = column_index(header, "full_ranking", true);
  int col_date = column_index(header, "completed_at", false);

  std::vector<SurveyRow> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    auto cell = [&](int idx) -> std::string {
      return idx >= 0 && idx < static_cast<int>(cells.size())
                 ? std::string(trim(cells[static_cast<size_t>(idx)]))
                 : std::string();
    };
    SurveyRow row;
    row.respondent_id = cell(col_id);
    std::string intent = cell(col_intent);
    if (!intent.empty()) {
      if (roster.find(intent) < 0)
        throw InputError("survey row " + std::to_string(r) + ": unknown party: " + intent);
      row.intention = intent;
    }
    row.two_vote = split_ranking(cell(col_two), ';');
    row.full_ranking = split_ranking(cell(col_full), ';');
    if (row.two_vote.size() > 2)
      throw InputError("survey row " + std::to_string(r) + ": two_vote ranks more than 2");
    validate_ranking(row.two_vote, roster, static_cast<int>(r));
    validate_ranking(row.full_ranking, roster, static_cast<int>(r));
    std::string date = cell(col_date);
    if (!date.empty()) row.completed_at = date;
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string write_survey(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << "respondent_id,intention,two_vote,full_ranking,completed_at\n";
  for (const SurveyRow& row : rows) {
    out << row.respondent_id << "," << row.intention.value_or("") << ","
        << join(row.two_vote, ';') << "," << join(row.full_ranking, ';') << ","
        << row.completed_at.value_or("") << "\n";
  }
  return out.str();
}

std::vector<Rational> parse_official_results(std::string_view csv, const Roster& roster) {
  std::vector<std::vector<std::string>> rows = parse_csv(csv);
  if (rows.empty()) throw InputError("empty results file");
  int col_party = column_index(rows.front(), "party", true);
  int col_share = column_index(rows.front(), "share", true);
  std::vector<Rational> shares(static_cast<size_t>(roster.size()), Rational(0));
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (static_cast<int>(cells.size()) <= std::max(col_party, col_share)) continue;
    std::string party(trim(cells[static_cast<size_t>(col_party)]));
    std::string share_text(trim(cells[static_cast<size_t>(col_share)]));
    if (party.empty()) continue;
    int p = roster.find(party);
    if (p < 0) throw InputError("results row " + std::to_string(r) + ": unknown party: " + party);
    Rational share;
    if (!share_text.empty() && share_text.back() == '%')
      share = Rational::from_string(share_text.substr(0, share_text.size() - 1)) / Rational(100);
    else
      share = Rational::from_string(share_text);
    if (share.is_negative() || Rational(1) < share)
      throw InputError("results row " + std::to_string(r) + ": share outside [0,1]");
    shares[static_cast<size_t>(p)] = share;
  }
  return shares;
}

ColumnMapping parse_mapping(std::string_view json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed mapping file: ") + e.what());
  }
  auto columns = [&](const char* key, bool required) {
    std::vector<std::string> out;
    if (!doc.contains(key)) {
      if (required) throw InputError(std::string("mapping file is missing '") + key + "'");
      return out;
    }
    if (doc[key].is_string()) out.push_back(doc[key].get<std::string>());
    else
      for (const auto& item : doc[key]) out.push_back(item.get<std::string>());
    return out;
  };
  ColumnMapping m;
  m.respondent_id = columns("respondent_id", true).at(0);
  m.intention = columns("intention", true).at(0);
  m.two_vote = columns("two_vote", true);
  m.full_ranking = columns("full_ranking", true);
  auto date = columns("completed_at", false);
  if (!date.empty()) m.completed_at = date.front();
  if (doc.contains("separator")) m.separator = doc["separator"].get<std::string>();
  if (doc.contains("party_map"))
    for (const auto& [raw, id] : doc["party_map"].items())
      m.party_map.emplace_back(raw, id.get<std::string>());
  return m;
}

std::vector<SurveyRow> convert_zenodo(std::string_view csv, const ColumnMapping& mapping) {
  std::vector<std::vector<std::string>> rows = parse_csv(csv);
  if (rows.empty()) throw InputError("empty input file");
  const auto& header = rows.front();
  auto col = [&](const std::string& name) { return column_index(header, name, true); };

  auto translate = [&](std::string id) {
    for (const auto& [raw, mapped] : mapping.party_map)
      if (raw == id) return mapped;
    return id;
  };
  char sep = mapping.separator.empty() ? ';' : mapping.separator[0];

  auto ranking_from = [&](const std::vector<std::string>& cells,
                          const std::vector<std::string>& columns) {
    std::vector<std::string> ids;
    if (columns.size() == 1) {
      int c = col(columns[0]);
      if (c < static_cast<int>(cells.size()))
        for (std::string& id : split_ranking(cells[static_cast<size_t>(c)], sep))
          ids.push_back(translate(id));
    } else {
      for (const std::string& column : columns) {
        int c = col(column);
        if (c >= static_cast<int>(cells.size())) continue;
        std::string id(trim(cells[static_cast<size_t>(c)]));
        if (!id.empty()) ids.push_back(translate(id));
      }
    }
    return ids;
  };

  std::vector<SurveyRow> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    auto cell = [&](const std::string& name) -> std::string {
      int c = col(name);
      return c < static_cast<int>(cells.size())
                 ? std::string(trim(cells[static_cast<size_t>(c)]))
                 : std::string();
    };
    SurveyRow row;
    row.respondent_id = cell(mapping.respondent_id);
    std::string intent = cell(mapping.intention);
    if (!intent.empty()) row.intention = translate(intent);
    row.two_vote = ranking_from(cells, mapping.two_vote);
    row.full_ranking = ranking_from(cells, mapping.full_ranking);
    if (!mapping.completed_at.empty()) {
      std::string date = cell(mapping.completed_at);
      if (!date.empty()) row.completed_at = date;
    }
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// reports

namespace {

ordered_json json_rational(const Rational& r) {
  return ordered_json{{"exact", r.str()}, {"approx", r.to_double()}};
}

ordered_json json_header(const std::string& kind) {
  return ordered_json{{"schema", "psr-report/1"}, {"kind", kind}};
}

ordered_json json_outcome(const Profile& profile, const Outcome& outcome) {
  ordered_json arr = ordered_json::array();
  for (int p : outcome.members()) arr.push_back(profile.roster().id(p));
  return arr;
}

std::string action_name(TraceEvent::Action a) {
  switch (a) {
    case TraceEvent::Action::Selected: return "selected";
    case TraceEvent::Action::Eliminated: return "eliminated";
    case TraceEvent::Action::Skipped: return "skipped";
  }
  return "?";
}

ordered_json json_rank_distribution(const RankDistribution& dist) {
  ordered_json hist = ordered_json::array();
  for (size_t i = 0; i < dist.by_rank.size(); ++i)
    hist.push_back(ordered_json{{"rank", i + 1}, {"share", json_rational(dist.by_rank[i])}});
  return ordered_json{{"by_rank", hist}, {"unrepresented", json_rational(dist.unrepresented)}};
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string report_header_schema() { return "psr-report/1"; }

std::string emit_rule_report(const Profile& profile, RuleId rule, const Threshold& tau,
                             const RuleResult& result, ReportFormat format,
                             const std::vector<Outcome>* universe,
                             const std::optional<int>& seats) {
  Rational total = profile.total_weight();
  Rational unrep_share = total.is_zero()
                             ? Rational(0)
                             : result.assignment.unrepresented_weight / total;
  std::optional<SeatAllocation> allocation;
  if (seats) allocation = seats_for_result(result, *seats);

  if (format == ReportFormat::FlatTable) {
    std::ostringstream out;
    out << "party\tscore_exact\tscore\tshare_exact\tshare" << (allocation ? "\tseats" : "")
        << "\n";
    for (int p : result.outcome.members()) {
      const Rational& score = result.assignment.scores[static_cast<size_t>(p)];
      const Rational& share = result.assignment.shares[static_cast<size_t>(p)];
      out << profile.roster().id(p) << "\t" << score.str() << "\t" << score.to_double() << "\t"
          << share.str() << "\t" << share.to_double();
      if (allocation) out << "\t" << allocation->seats[static_cast<size_t>(p)];
      out << "\n";
    }
    out << "# unrepresented_share\t" << unrep_share.str() << "\t" << unrep_share.to_double()
        << "\n";
    return out.str();
  }

  ordered_json doc = json_header("rule-run");
  doc["rule"] = std::string(rule_name(rule));
  doc["tau"] = json_rational(tau.value);
  doc["total_weight"] = json_rational(total);
  doc["outcome"] = json_outcome(profile, result.outcome);
  ordered_json scores = ordered_json::object();
  ordered_json shares = ordered_json::object();
  for (int p : result.outcome.members()) {
    scores[profile.roster().id(p)] =
        json_rational(result.assignment.scores[static_cast<size_t>(p)]);
    shares[profile.roster().id(p)] =
        json_rational(result.assignment.shares[static_cast<size_t>(p)]);
  }
  doc["scores"] = scores;
  doc["shares"] = shares;
  doc["unrepresented"] =
      ordered_json{{"weight", json_rational(result.assignment.unrepresented_weight)},
                   {"share", json_rational(unrep_share)}};
  ordered_json trace = ordered_json::array();
  for (const TraceEvent& ev : result.trace)
    trace.push_back(ordered_json{{"step", ev.step},
                                 {"party", profile.roster().id(ev.party)},
                                 {"action", action_name(ev.action)},
                                 {"score", json_rational(ev.score)}});
  doc["trace"] = trace;
  if (result.augment) {
    ordered_json steps = ordered_json::array();
    for (const AugmentStep& step : result.augment->steps)
      steps.push_back(
          ordered_json{{"added", profile.roster().id(step.added)},
                       {"unrepresented_support", json_rational(step.unrepresented_support)},
                       {"removed", json_outcome(profile, step.removed)},
                       {"outcome", json_outcome(profile, step.result)}});
    doc["augment"] = steps;
  }
  if (universe) {
    ordered_json u = ordered_json::array();
    for (const Outcome& o : *universe) u.push_back(json_outcome(profile, o));
    doc["universe"] = u;
  }
  if (allocation) {
    ordered_json s = ordered_json::object();
    for (int p : result.outcome.members())
      s[profile.roster().id(p)] = allocation->seats[static_cast<size_t>(p)];
    doc["seats"] = ordered_json{{"house_size", allocation->house_size}, {"by_party", s}};
  }
  return dump(doc);
}

std::string emit_experiment_report(const Profile& profile, const ExperimentReport& report,
                                   ReportFormat format) {
  (void)profile;
  if (format == ReportFormat::FlatTable) {
    std::ostringstream out;
    out << "x\tunrepresented_share_exact\tunrepresented_share\tparties_selected";
    bool noise = !report.points.empty() && report.points.front().noise_percentiles.has_value();
    if (noise) out << "\tp20\tmedian\tp80";
    out << "\n";
    for (const SweepPoint& pt : report.points) {
      out << pt.x.str() << "\t" << pt.unrepresented.str() << "\t" << pt.unrepresented.to_double()
          << "\t" << pt.selected_count;
      if (pt.noise_percentiles) {
        for (const Rational& r : *pt.noise_percentiles) out << "\t" << r.to_double();
      } else if (noise) {
        out << "\t\t\t";
      }
      out << "\n";
    }
    return out.str();
  }

  ordered_json doc = json_header(report.kind);
  doc["rule"] = std::string(rule_name(report.rule));
  if (report.samples > 0) {
    doc["samples"] = report.samples;
    doc["sigma"] = report.sigma;
    doc["seed"] = report.seed;
  }
  ordered_json points = ordered_json::array();
  for (const SweepPoint& pt : report.points) {
    ordered_json p;
    p["x"] = json_rational(pt.x);
    p["unrepresented_share"] = json_rational(pt.unrepresented);
    p["parties_selected"] = pt.selected_count;
    p["distribution"] = json_rank_distribution(pt.distribution);
    if (pt.noise_percentiles)
      p["noise"] = ordered_json{{"p20", json_rational((*pt.noise_percentiles)[0])},
                                {"median", json_rational((*pt.noise_percentiles)[1])},
                                {"p80", json_rational((*pt.noise_percentiles)[2])}};
    points.push_back(std::move(p));
  }
  doc["points"] = points;
  return dump(doc);
}

std::string emit_strategic_report(const StrategicReport& report, const PartyBuckets& buckets,
                                  const Roster& roster, ReportFormat format) {
  if (format == ReportFormat::FlatTable) {
    std::ostringstream out;
    out << "category\tfraction_exact\tfraction\n";
    auto row = [&](const char* name, const Rational& r) {
      out << name << "\t" << r.str() << "\t" << r.to_double() << "\n";
    };
    row("inconsistent", report.inconsistent);
    row("sincere", report.sincere);
    row("strategic_down", report.strategic_down);
    row("strategic_down/out_to_safe", report.down_out_safe);
    row("strategic_down/out_to_risky", report.down_out_risky);
    row("strategic_down/risky_to_safe", report.down_risky_safe);
    row("strategic_down/others", report.down_others);
    row("strategic_up", report.strategic_up);
    return out.str();
  }
  ordered_json doc = json_header("strategic-classification");
  doc["inconsistent"] = json_rational(report.inconsistent);
  doc["sincere"] = json_rational(report.sincere);
  doc["strategic_down"] =
      ordered_json{{"total", json_rational(report.strategic_down)},
                   {"out_to_safe", json_rational(report.down_out_safe)},
                   {"out_to_risky", json_rational(report.down_out_risky)},
                   {"risky_to_safe", json_rational(report.down_risky_safe)},
                   {"others", json_rational(report.down_others)}};
  doc["strategic_up"] = json_rational(report.strategic_up);
  doc["excluded_rows"] = report.excluded_rows;
  doc["classified_weight"] = json_rational(report.classified_weight);
  ordered_json b = ordered_json::object();
  for (int p = 0; p < roster.size(); ++p) {
    const char* name = buckets.bucket[static_cast<size_t>(p)] == Bucket::Safe    ? "safe"
                       : buckets.bucket[static_cast<size_t>(p)] == Bucket::Risky ? "risky"
                                                                                 : "out";
    b[roster.id(p)] = ordered_json{{"bucket", name},
                                   {"flagged", static_cast<bool>(buckets.flagged[static_cast<size_t>(p)])}};
  }
  doc["buckets"] = b;
  return dump(doc);
}

std::string emit_violation(const Violation& violation) {
  ordered_json doc = json_header("violation");
  doc["axiom"] = std::string(axiom_name(violation.axiom));
  if (violation.rule) doc["rule"] = std::string(rule_name(*violation.rule));
  ordered_json profiles = ordered_json::array();
  for (const std::string& p : violation.profiles) profiles.push_back(p);
  doc["profiles"] = profiles;
  ordered_json taus = ordered_json::array();
  for (const Rational& t : violation.taus) taus.push_back(json_rational(t));
  doc["taus"] = taus;
  if (violation.voter) doc["voter"] = *violation.voter;
  if (violation.misreport) doc["misreport"] = *violation.misreport;
  if (violation.party) doc["party"] = *violation.party;
  if (violation.clone_pair)
    doc["clone_pair"] = ordered_json::array({violation.clone_pair->first,
                                             violation.clone_pair->second});
  doc["narrative"] = violation.narrative;
  return dump(doc);
}

std::string emit_search_report(std::string_view axiom, std::string_view rule, long trials,
                               long vacuous, const Violation* violation) {
  ordered_json doc = json_header("axiom-search");
  doc["axiom"] = std::string(axiom);
  doc["rule"] = std::string(rule);
  doc["trials"] = trials;
  doc["vacuous"] = vacuous;
  doc["violation"] =
      violation ? ordered_json::parse(emit_violation(*violation)) : ordered_json(nullptr);
  return dump(doc);
}

std::string reparse_report(std::string_view structured_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(structured_text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  if (!doc.contains("schema") || doc["schema"] != "psr-report/1")
    throw InputError("not a psr report document");
  return dump(doc);
}

void write_file_atomic(const std::string& path, std::string_view content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace psr
