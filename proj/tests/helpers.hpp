#pragma once

#include <string>

#include "psr/io.hpp"

namespace psr::test {

inline Profile load(const std::string& doc) { return parse_profile(doc).profile; }

inline Threshold tau(long long v) { return Threshold{Rational(v)}; }

// the running example: DO -> {d}, STV -> {d,b}, GP -> {d,a}
inline const char* kExample1 =
    "#! parties: a,b,c,d\n"
    "4: a>b>c\n"
    "3: b>c\n"
    "2: c>b>a\n"
    "2: d\n"
    "4: d>b\n";

inline Outcome ids(const Profile& p, const std::vector<std::string>& names) {
  return outcome_of_ids(p, names);
}

}  // namespace psr::test
