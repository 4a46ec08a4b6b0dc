#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "walkmin/graph.hpp"
#include "walkmin/reduction.hpp"
#include "walkmin/regex.hpp"

namespace walkmin {

struct CheckResult {
  std::string name;
  bool passed = false;
  nlohmann::json details;  // measured/expected values and failure notes
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  nlohmann::json instance_info;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_text() const;
};

struct CheckOptions {
  bool force = false;                // lift the k,l <= 4 size cap
  std::vector<std::string> only;     // empty = all checks
};

// Names, in run order: r1_properties, r2_census, r3_unique, trail_iff_sat,
// red_inclusion, equiv_three_way, end_to_end, membership_variant,
// sms_variant.
const std::vector<std::string>& check_names();

// Runs every enumerable claim of the construction on one instance.
// Throws CapExceededError when k or l exceeds 4 without force.
VerificationReport check_all(const SatInstance& inst, const CheckOptions& options = {});

// Streamed minimal-set enumeration with steps measured in emitted
// candidates. outputs[i] = (1-based output index, candidate count at which
// it was confirmed). Candidates arrive in (length, encoding) order, so a
// candidate is confirmed minimal against the strictly shorter ones already
// seen.
struct DelayProfile {
  std::vector<std::pair<std::size_t, std::size_t>> outputs;
  std::size_t total_candidates = 0;

  nlohmann::json to_json() const;
};

DelayProfile profile_enumeration(const Graph& g, const RegExp& r, const std::string& s,
                                 const std::string& t);

// Profile of the enum-variant reduction between Source and Target.
DelayProfile delay_profile(const SatInstance& inst);

// Deterministic generator for random campaigns: clauses sampled uniformly
// over 3-distinct-variable, non-tautological sign patterns. Needs k >= 3.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  SatInstance sample(int k, int l);
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

}  // namespace walkmin
