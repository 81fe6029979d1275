// The verification harness: every desk-scale claim becomes a named
// check with a computed value, an expected value, and a provenance tag,
// collected into a deterministic report.

#ifndef COMMSEMI_VERIFY_HPP
#define COMMSEMI_VERIFY_HPP

#include "commsemi/semigroup.hpp"

namespace commsemi {

inline constexpr char kToolVersion[] = "1.0.0";

struct CheckResult {
  std::string id;
  std::string claim;
  std::string computed;
  std::string expected;
  std::string provenance;  // "paper" or "derived"
  std::string status;      // "pass", "fail", or "skipped"
  double ms = 0.0;
};

struct VerifyConfig {
  int max_n = 5;
  int max_k = 3;
  uint64_t budget = 100000;  // largest vertex count materialized
  unsigned threads = 1;
};

struct Report {
  std::string version = kToolVersion;
  VerifyConfig config;
  std::vector<CheckResult> checks;

  bool all_passed() const;  // skipped counts as passed
  void append(Report const& other);
  std::string to_json() const;
  std::string to_text() const;
};

// Idempotent-graph diameters of the ideals, 3 <= n <= max_n.
Report verify_tdia(VerifyConfig const& cfg);

// Commuting-graph diameters of the ideals: full search within budget,
// witness-distance split checks beyond it.
Report verify_tdia2(VerifyConfig const& cfg);

// G(T(n)) for the requested n: disconnection for primes, diameters for
// n = 4 and 6, the distance >= 5 certificate for 6 and 8.
Report verify_tdia3(VerifyConfig const& cfg, std::vector<int> const& cases);

// Knit degrees and graph diameters of the constructed bands.
Report verify_bands(VerifyConfig const& cfg);

// The quasi-identity separations.
Report verify_schein(VerifyConfig const& cfg);

Report verify_all(VerifyConfig const& cfg);

}  // namespace commsemi

#endif
