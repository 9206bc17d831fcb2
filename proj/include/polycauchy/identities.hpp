#pragma once

#include "polycauchy/rational.hpp"
#include "polycauchy/report.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace polycauchy {

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool contains(int v) const { return v >= lo && v <= hi; }
};

/*
 * Parameter box an identity is verified over.  Each checker intersects the
 * box with its own hypotheses (e.g. n >= r >= 1, or n >= k+2) before
 * iterating, so out-of-hypothesis tuples are never counted as failures.
 */
struct ParamBox {
  IntRange n_range{0, 12};
  IntRange r_range{1, 4};
  IntRange k_range{-4, 4};
  std::vector<Rational> q_values;
  std::vector<Rational> alpha_values;

  /// n <= 12, r <= 4, |k| <= 4, q in {-1, 0, 1/2, 1, 2}, alpha in {1/2, 1, 3/2}.
  static ParamBox desk_default();
};

IdentityReport check_identity(IdentityId id, const ParamBox& box);

/// Runs the checkers in the order given; report order matches input order.
std::vector<IdentityReport> run_suite(std::span<const IdentityId> ids, const ParamBox& box);

/// True when no report has status fail (known discrepancies do not fail).
bool suite_passes(std::span<const IdentityReport> reports);

nlohmann::json report_to_json(const IdentityReport& rep);
nlohmann::json suite_to_json(std::span<const IdentityReport> reports, const ParamBox& box);
std::string report_text(const IdentityReport& rep);

}  // namespace polycauchy
