#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycauchy {

enum class IdentityId {
  TH1,
  TH2,
  TH3_SECOND_KIND,
  TH4_SECOND_KIND,
  TH5_POLY,
  TH6_POLY_SECOND,
  COR1_SHIFTED,
  COR2_BELL,
  TH7_ANNIHILATION_FIRST,
  TH8_ANNIHILATION_SECOND,
  LEMMA1,
  EQ303,
  REMARK_TABLES,
  ORTHOGONALITY,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);
const std::vector<IdentityId>& all_identities();

enum class CheckStatus { pass, fail, pass_with_known_discrepancy };

std::string_view to_string(CheckStatus s);

/// One replayable mismatch: the parameter tuple plus both exactly
/// evaluated sides rendered in canonical rational text.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  IdentityId id = IdentityId::TH1;
  long long tuples_checked = 0;
  CheckStatus status = CheckStatus::pass;
  bool vacuous = false;  // constraint intersection left nothing to check

  // Genuine failures of the identity (or of its corrected variant, for the
  // identities carrying a known printed discrepancy).
  std::vector<Counterexample> failures;
  long long failures_total = 0;

  // Mismatches of an as-printed form that is documented as suspect; these
  // never fail the suite.
  std::vector<Counterexample> known_discrepancies;
  long long known_discrepancies_total = 0;

  bool corrected_variant_checked = false;
  bool corrected_variant_pass = false;
  std::string note;
};

/// Recomputes status from the counters: fail beats known-discrepancy beats pass.
void finalize_report(IdentityReport& rep);

}  // namespace polycauchy
