#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psr/rules.hpp"

namespace psr {

/// One survey response: the declared real-election voting intention plus the
/// two elicited rankings (party ids, resolved against a roster at use time).
struct SurveyRow {
  std::string respondent_id;
  std::optional<std::string> intention;
  std::vector<std::string> two_vote;      // length <= 2
  std::vector<std::string> full_ranking;  // unrestricted length
  std::optional<std::string> completed_at;
};

enum class RankingSource { TwoVote, Full };

enum class Bucket { Safe, Risky, Out };

/// Official-vote-share cut points for the safe/risky/out partition, as
/// fractions of the vote. Shares falling in the gaps are assigned to the
/// nearest cut and flagged.
struct BucketCuts {
  Rational safe_min{7, 100};
  Rational risky_lo{5, 100};
  Rational risky_hi{6, 100};
  Rational out_max{3, 100};
};

struct PartyBuckets {
  std::vector<Bucket> bucket;   // per party
  std::vector<bool> flagged;    // share fell in a gap between cuts
};

PartyBuckets bucket_parties(const std::vector<Rational>& official_shares, const BucketCuts& cuts);

/// Post-stratification weights on the intention variable: official share over
/// sample share, normalized so weights sum to the number of respondents with
/// an intention. Respondents without an intention get weight zero.
struct WeightingResult {
  std::vector<Rational> weights;          // per row
  Rational uncovered_official_mass;       // official share of intention groups absent from sample
  std::vector<int> uncovered_parties;
};

WeightingResult compute_weights(const std::vector<SurveyRow>& rows, const Roster& roster,
                                const std::vector<Rational>& official_shares);

/// Weighted fractions comparing the intention c* with the first-ranked party.
/// The four top-level fractions sum to exactly 1 over the classified mass.
struct StrategicReport {
  Rational inconsistent;    // c* not ranked at all
  Rational sincere;         // first-ranked == c*
  Rational strategic_down;  // official score(first) < official score(c*)
  Rational down_out_safe;
  Rational down_out_risky;
  Rational down_risky_safe;
  Rational down_others;
  Rational strategic_up;    // remaining first != c*
  long excluded_rows = 0;   // no intention (weight-zero rows)
  Rational classified_weight;
};

StrategicReport classify_strategic(const std::vector<SurveyRow>& rows,
                                   const std::vector<Rational>& weights, const Roster& roster,
                                   const std::vector<Rational>& official_shares,
                                   const PartyBuckets& buckets, RankingSource source);

/// Builds the weighted preference profile from the chosen ranking column.
Profile survey_profile(const std::vector<SurveyRow>& rows, const Roster& roster,
                       const std::vector<Rational>& weights, RankingSource source);

/// Weight share of voters not ranking any selected party.
Rational unrepresented_share(const Profile& profile, RuleId rule, const Threshold& tau);

/// Weight share represented at each ballot rank, plus the unrepresented rest.
/// by_rank[k] is the share whose representative sits at rank k+1; masses sum
/// to 1 (with unrepresented) on any non-empty profile.
struct RankDistribution {
  std::vector<Rational> by_rank;
  Rational unrepresented;
};

RankDistribution rank_distribution(const Profile& profile, RuleId rule, const Threshold& tau);

struct SweepPoint {
  Rational x;  // threshold (absolute weight) or truncation length
  Rational unrepresented;
  int selected_count = 0;
  RankDistribution distribution;
  // present for noise sweeps: p20 / median / p80 of the unrepresented share
  std::optional<std::array<Rational, 3>> noise_percentiles;
};

struct ExperimentReport {
  std::string kind;  // "threshold-sweep" | "truncation-sweep" | "noise-sweep"
  RuleId rule;
  std::vector<SweepPoint> points;
  uint64_t seed = 0;
  int samples = 0;
  double sigma = 0.0;
};

ExperimentReport sweep_threshold(const Profile& profile, RuleId rule,
                                 const std::vector<Rational>& taus);

ExperimentReport sweep_truncation(const Profile& profile, RuleId rule, const Threshold& tau,
                                  const std::vector<int>& ks);

/// Re-runs a threshold sweep under multiplicative Gaussian weight noise:
/// per sample one N(1, sigma^2) multiplier per party and one per voter
/// (negatives clamped to zero), applied as w * party_mult(category) *
/// voter_mult. `categories` maps each ballot to its party category (intention
/// for survey data); by default the first-ranked party. Draws are keyed by
/// (seed, sample, index), so reports are byte-identical for equal inputs.
ExperimentReport noise_sweep(const Profile& profile, RuleId rule,
                             const std::vector<Rational>& taus, int samples, double sigma,
                             uint64_t seed, const std::vector<int>* categories = nullptr);

/// The noised profile of one sample, exactly as noise_sweep builds it. The
/// multiplier stream depends only on (seed, sample, index), never on the rule.
Profile apply_noise(const Profile& profile, int sample, double sigma, uint64_t seed,
                    const std::vector<int>* categories = nullptr);

/// Pearson chi-square on a 2x2 table of (possibly weighted) counts, 1 degree
/// of freedom. All marginals must be positive.
struct ChiSquare {
  Rational statistic;
  double p_value;
};

ChiSquare chi_square_2x2(const std::array<std::array<Rational, 2>, 2>& table);

}  // namespace psr
