#include "psr/apportion.hpp"

namespace psr {

SeatAllocation dhondt(const std::vector<Rational>& scores, int house_size) {
  if (house_size < 1) throw InputError("house size must be at least 1");
  bool any_positive = false;
  for (const Rational& s : scores) {
    if (s.is_negative()) throw InputError("negative score");
    if (!s.is_zero()) any_positive = true;
  }
  if (!any_positive) throw InputError("d'hondt requires at least one positive score");

  SeatAllocation alloc;
  alloc.house_size = house_size;
  alloc.seats.assign(scores.size(), 0);
  for (int seat = 0; seat < house_size; ++seat) {
    int best = -1;
    Rational best_quotient;
    for (size_t p = 0; p < scores.size(); ++p) {
      if (scores[p].is_zero()) continue;
      Rational q = scores[p] / Rational(alloc.seats[p] + 1);
      // exact comparison; quotient ties go to the higher-priority party
      if (best < 0 || best_quotient < q) {
        best = static_cast<int>(p);
        best_quotient = q;
      }
    }
    ++alloc.seats[static_cast<size_t>(best)];
  }
  return alloc;
}

SeatAllocation seats_for_result(const RuleResult& result, int house_size) {
  if (result.outcome.empty())
    throw InputError("cannot apportion seats for an empty outcome");
  return dhondt(result.assignment.scores, house_size);
}

}  // namespace psr
