#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchings/random_instances.hpp"

namespace matchings {

// Each check returns a description of the failure, or nothing if the
// property holds on the instance.
using CheckResult = std::optional<std::string>;

/// subtract(f, g) verifies and no orbit takes more than |D| iterations.
CheckResult check_subtraction_soundness(const SubtractionInstance& inst);
/// The result of subtracting g from f respects f.
CheckResult check_result_respect(const SubtractionInstance& inst);
/// double_subtract(f, g) equals g pointwise iff g respects f.
CheckResult check_idempotence(const SubtractionInstance& inst);
/// Subtracting the double subtraction gives back the single subtraction.
CheckResult check_closure(const SubtractionInstance& inst);
/// When g respects f, the one-step formula agrees with the general loop.
CheckResult check_respectful_agreement(const SubtractionInstance& inst);

/// Every f_p verifies.
CheckResult check_incexc_soundness(const IncExcInstance& inst);
/// At a minimal point p, f_p is g_p restricted to A_p.
CheckResult check_incexc_minimal(const IncExcInstance& inst);
/// Memoized and unmemoized runs agree pointwise.
CheckResult check_incexc_memo_transparency(const IncExcInstance& inst);
/// On a two-point chain, the top matching equals the subtraction of the
/// bottom matching from g_top.
CheckResult check_incexc_chain(const IncExcInstance& inst);

/// g_top re-tagged as A_top + A_bottom ≡ B_top + B_bottom, with the bottom
/// matching f_bottom: A_bottom ≡ B_bottom, for a two-point chain.
struct ChainSubtraction {
  Matching f;
  Matching g;
  Element top;
  Element bottom;
};
ChainSubtraction chain_as_subtraction(const IncExcInstance& inst, const IncExcResult& result);

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;

  bool ok() const noexcept { return !counterexample && passed == cases; }
};

struct PropertySuiteConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  bool inject_fault = false;
};

/// Runs every property `cases` times from one generator seeded with `seed`.
/// The first failure of each property is kept as its counterexample, along
/// with the serialized instance.
std::vector<PropertyOutcome> run_property_suite(const PropertySuiteConfig& config);

}  // namespace matchings
