#include "psr/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "psr/sampling.hpp"

namespace psr {

PartyBuckets bucket_parties(const std::vector<Rational>& official_shares,
                            const BucketCuts& cuts) {
  PartyBuckets out;
  for (const Rational& share : official_shares) {
    Bucket bucket;
    bool flagged = false;
    if (!(share < cuts.safe_min)) {
      bucket = Bucket::Safe;
    } else if (!(share < cuts.risky_lo) && !(cuts.risky_hi < share)) {
      bucket = Bucket::Risky;
    } else if (share < cuts.out_max) {
      bucket = Bucket::Out;
    } else if (share < cuts.risky_lo) {
      // gap between the out and risky cuts: nearest cut wins, ties upward
      flagged = true;
      bucket = (share - cuts.out_max) < (cuts.risky_lo - share) ? Bucket::Out : Bucket::Risky;
    } else {
      flagged = true;
      bucket = (share - cuts.risky_hi) < (cuts.safe_min - share) ? Bucket::Risky : Bucket::Safe;
    }
    out.bucket.push_back(bucket);
    out.flagged.push_back(flagged);
  }
  return out;
}

WeightingResult compute_weights(const std::vector<SurveyRow>& rows, const Roster& roster,
                                const std::vector<Rational>& official_shares) {
  if (static_cast<int>(official_shares.size()) != roster.size())
    throw InputError("official shares must cover the full roster");
  Rational official_sum;
  for (const Rational& s : official_shares) official_sum += s;
  if (Rational(1) < official_sum) throw InputError("official shares sum to more than 1");

  std::vector<long long> counts(static_cast<size_t>(roster.size()), 0);
  long long with_intention = 0;
  for (const SurveyRow& row : rows) {
    if (!row.intention) continue;
    ++counts[static_cast<size_t>(roster.require(*row.intention))];
    ++with_intention;
  }

  WeightingResult result;
  Rational covered;
  for (int p = 0; p < roster.size(); ++p) {
    if (counts[static_cast<size_t>(p)] > 0) {
      covered += official_shares[static_cast<size_t>(p)];
    } else if (!official_shares[static_cast<size_t>(p)].is_zero()) {
      result.uncovered_official_mass += official_shares[static_cast<size_t>(p)];
      result.uncovered_parties.push_back(p);
    }
  }

  for (const SurveyRow& row : rows) {
    if (!row.intention || covered.is_zero()) {
      result.weights.push_back(Rational(0));
      continue;
    }
    int p = roster.require(*row.intention);
    // official share over sample share, rescaled so weights total with_intention
    Rational raw = official_shares[static_cast<size_t>(p)] * Rational(with_intention) /
                   Rational(counts[static_cast<size_t>(p)]);
    result.weights.push_back(raw / covered);
  }
  return result;
}

Profile survey_profile(const std::vector<SurveyRow>& rows, const Roster& roster,
                       const std::vector<Rational>& weights, RankingSource source) {
  if (rows.size() != weights.size())
    throw InputError("survey rows and weights must have equal length");
  std::vector<Ballot> ballots;
  ballots.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& ids = source == RankingSource::TwoVote ? rows[i].two_vote : rows[i].full_ranking;
    Ballot b;
    b.weight = weights[i];
    for (const std::string& id : ids) b.ranking.push_back(roster.require(id));
    ballots.push_back(std::move(b));
  }
  return Profile(roster, std::move(ballots));
}

StrategicReport classify_strategic(const std::vector<SurveyRow>& rows,
                                   const std::vector<Rational>& weights, const Roster& roster,
                                   const std::vector<Rational>& official_shares,
                                   const PartyBuckets& buckets, RankingSource source) {
  if (rows.size() != weights.size())
    throw InputError("survey rows and weights must have equal length");
  StrategicReport report;
  Rational inconsistent, sincere, down, down_os, down_or, down_rs, down_other, up, total;

  for (size_t i = 0; i < rows.size(); ++i) {
    const SurveyRow& row = rows[i];
    if (!row.intention) {
      ++report.excluded_rows;
      continue;
    }
    const Rational& w = weights[i];
    total += w;
    int star = roster.require(*row.intention);
    const auto& ids = source == RankingSource::TwoVote ? row.two_vote : row.full_ranking;
    bool ranked = false;
    for (const std::string& id : ids) ranked = ranked || roster.require(id) == star;
    if (!ranked) {
      inconsistent += w;
      continue;
    }
    int first = roster.require(ids.front());
    if (first == star) {
      sincere += w;
    } else if (official_shares[static_cast<size_t>(first)] <
               official_shares[static_cast<size_t>(star)]) {
      down += w;
      Bucket bf = buckets.bucket[static_cast<size_t>(first)];
      Bucket bs = buckets.bucket[static_cast<size_t>(star)];
      if (bf == Bucket::Out && bs == Bucket::Safe) down_os += w;
      else if (bf == Bucket::Out && bs == Bucket::Risky) down_or += w;
      else if (bf == Bucket::Risky && bs == Bucket::Safe) down_rs += w;
      else down_other += w;
    } else {
      up += w;
    }
  }

  report.classified_weight = total;
  if (!total.is_zero()) {
    report.inconsistent = inconsistent / total;
    report.sincere = sincere / total;
    report.strategic_down = down / total;
    report.down_out_safe = down_os / total;
    report.down_out_risky = down_or / total;
    report.down_risky_safe = down_rs / total;
    report.down_others = down_other / total;
    report.strategic_up = up / total;
  }
  return report;
}

Rational unrepresented_share(const Profile& profile, RuleId rule, const Threshold& tau) {
  if (profile.total_weight().is_zero()) return Rational(0);
  RuleResult result = run_rule(rule, profile, tau);
  return result.assignment.unrepresented_weight / profile.total_weight();
}

namespace {

RankDistribution distribution_of(const Profile& profile, const Assignment& assignment) {
  RankDistribution dist;
  const Rational& total = profile.total_weight();
  if (total.is_zero()) return dist;
  int max_rank = 0;
  for (int r : assignment.rep_rank) max_rank = std::max(max_rank, r);
  dist.by_rank.assign(static_cast<size_t>(max_rank), Rational(0));
  for (size_t i = 0; i < profile.ballots().size(); ++i) {
    const Rational& w = profile.ballots()[i].weight;
    int r = assignment.rep_rank[i];
    if (r > 0) dist.by_rank[static_cast<size_t>(r - 1)] += w / total;
  }
  dist.unrepresented = assignment.unrepresented_weight / total;
  return dist;
}

SweepPoint point_from_run(const Profile& profile, const Rational& x, const RuleResult& result) {
  SweepPoint pt;
  pt.x = x;
  pt.unrepresented = profile.total_weight().is_zero()
                         ? Rational(0)
                         : result.assignment.unrepresented_weight / profile.total_weight();
  pt.selected_count = result.outcome.count();
  pt.distribution = distribution_of(profile, result.assignment);
  return pt;
}

// type-7 quantile on exact rationals (linear interpolation between ranks)
Rational quantile(std::vector<Rational> sorted, const Rational& q) {
  std::sort(sorted.begin(), sorted.end());
  size_t n = sorted.size();
  if (n == 1) return sorted.front();
  Rational h = Rational(static_cast<long long>(n - 1)) * q;
  // floor of an exact non-negative rational
  long long lo = static_cast<long long>(h.to_double());
  while (h < Rational(lo)) --lo;
  while (!(h < Rational(lo + 1))) ++lo;
  Rational frac = h - Rational(lo);
  const Rational& a = sorted[static_cast<size_t>(lo)];
  if (frac.is_zero()) return a;
  const Rational& b = sorted[static_cast<size_t>(lo) + 1];
  return a + (b - a) * frac;
}

}  // namespace

RankDistribution rank_distribution(const Profile& profile, RuleId rule, const Threshold& tau) {
  RuleResult result = run_rule(rule, profile, tau);
  return distribution_of(profile, result.assignment);
}

ExperimentReport sweep_threshold(const Profile& profile, RuleId rule,
                                 const std::vector<Rational>& taus) {
  ExperimentReport report;
  report.kind = "threshold-sweep";
  report.rule = rule;
  for (const Rational& tau : taus) {
    RuleResult result = run_rule(rule, profile, Threshold{tau});
    report.points.push_back(point_from_run(profile, tau, result));
  }
  return report;
}

ExperimentReport sweep_truncation(const Profile& profile, RuleId rule, const Threshold& tau,
                                  const std::vector<int>& ks) {
  ExperimentReport report;
  report.kind = "truncation-sweep";
  report.rule = rule;
  for (int k : ks) {
    Profile cut = truncate(profile, k);
    RuleResult result = run_rule(rule, cut, tau);
    report.points.push_back(point_from_run(cut, Rational(k), result));
  }
  return report;
}

Profile apply_noise(const Profile& profile, int sample, double sigma, uint64_t seed,
                    const std::vector<int>* categories) {
  if (categories && categories->size() != profile.ballots().size())
    throw InputError("category list must match the ballot count");
  std::vector<Rational> party_mult;
  for (int p = 0; p < profile.party_count(); ++p) {
    double m = 1.0 + sigma * gauss_at(seed, static_cast<uint64_t>(2 * sample),
                                      static_cast<uint64_t>(p));
    party_mult.push_back(Rational::from_double(std::max(0.0, m)));
  }
  std::vector<Ballot> ballots = profile.ballots();
  for (size_t i = 0; i < ballots.size(); ++i) {
    double m = 1.0 + sigma * gauss_at(seed, static_cast<uint64_t>(2 * sample + 1),
                                      static_cast<uint64_t>(i));
    Rational voter_mult = Rational::from_double(std::max(0.0, m));
    int cat = categories ? (*categories)[i]
                         : (ballots[i].ranking.empty() ? -1 : ballots[i].ranking.front());
    Rational mult = voter_mult;
    if (cat >= 0) mult *= party_mult[static_cast<size_t>(cat)];
    ballots[i].weight *= mult;
  }
  return Profile(profile.roster_ptr(), std::move(ballots));
}

ExperimentReport noise_sweep(const Profile& profile, RuleId rule,
                             const std::vector<Rational>& taus, int samples, double sigma,
                             uint64_t seed, const std::vector<int>* categories) {
  if (samples < 1) throw InputError("noise sweep needs at least one sample");

  ExperimentReport report = sweep_threshold(profile, rule, taus);
  report.kind = "noise-sweep";
  report.seed = seed;
  report.samples = samples;
  report.sigma = sigma;

  const Rational& base_total = profile.total_weight();
  std::vector<std::vector<Rational>> shares_per_tau(taus.size());

  for (int s = 0; s < samples; ++s) {
    Profile noised = apply_noise(profile, s, sigma, seed, categories);

    for (size_t t = 0; t < taus.size(); ++t) {
      // keep the threshold's relative level: rescale by the noised total
      Rational tau = base_total.is_zero()
                         ? taus[t]
                         : taus[t] * noised.total_weight() / base_total;
      shares_per_tau[t].push_back(unrepresented_share(noised, rule, Threshold{tau}));
    }
  }

  for (size_t t = 0; t < taus.size(); ++t) {
    report.points[t].noise_percentiles = {quantile(shares_per_tau[t], Rational(1, 5)),
                                          quantile(shares_per_tau[t], Rational(1, 2)),
                                          quantile(shares_per_tau[t], Rational(4, 5))};
  }
  return report;
}

ChiSquare chi_square_2x2(const std::array<std::array<Rational, 2>, 2>& table) {
  const Rational& a = table[0][0];
  const Rational& b = table[0][1];
  const Rational& c = table[1][0];
  const Rational& d = table[1][1];
  Rational r0 = a + b, r1 = c + d, c0 = a + c, c1 = b + d;
  for (const Rational& m : {r0, r1, c0, c1})
    if (m.is_zero() || m.is_negative()) throw InputError("chi-square requires positive marginals");
  Rational n = r0 + r1;
  Rational det = a * d - b * c;
  Rational statistic = n * det * det / (r0 * r1 * c0 * c1);
  double p = std::erfc(std::sqrt(statistic.to_double() / 2.0));
  return {statistic, p};
}

}  // namespace psr
