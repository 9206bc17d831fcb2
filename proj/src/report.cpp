#include "polycauchy/report.hpp"

namespace polycauchy {

namespace {
constexpr std::pair<IdentityId, std::string_view> kIdNames[] = {
    {IdentityId::TH1, "TH1"},
    {IdentityId::TH2, "TH2"},
    {IdentityId::TH3_SECOND_KIND, "TH3_SECOND_KIND"},
    {IdentityId::TH4_SECOND_KIND, "TH4_SECOND_KIND"},
    {IdentityId::TH5_POLY, "TH5_POLY"},
    {IdentityId::TH6_POLY_SECOND, "TH6_POLY_SECOND"},
    {IdentityId::COR1_SHIFTED, "COR1_SHIFTED"},
    {IdentityId::COR2_BELL, "COR2_BELL"},
    {IdentityId::TH7_ANNIHILATION_FIRST, "TH7_ANNIHILATION_FIRST"},
    {IdentityId::TH8_ANNIHILATION_SECOND, "TH8_ANNIHILATION_SECOND"},
    {IdentityId::LEMMA1, "LEMMA1"},
    {IdentityId::EQ303, "EQ303"},
    {IdentityId::REMARK_TABLES, "REMARK_TABLES"},
    {IdentityId::ORTHOGONALITY, "ORTHOGONALITY"},
};
}  // namespace

std::string_view to_string(IdentityId id) {
  for (const auto& [key, name] : kIdNames)
    if (key == id) return name;
  return "UNKNOWN";
}

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (const auto& [key, value] : kIdNames)
    if (value == name) return key;
  // unique prefix shorthand, e.g. TH7 or COR1
  std::optional<IdentityId> match;
  for (const auto& [key, value] : kIdNames)
    if (!name.empty() && value.substr(0, name.size()) == name) {
      if (match) return std::nullopt;  // ambiguous
      match = key;
    }
  return match;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [key, name] : kIdNames) v.push_back(key);
    return v;
  }();
  return ids;
}

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::pass_with_known_discrepancy:
      return "pass-with-known-discrepancy";
  }
  return "unknown";
}

void finalize_report(IdentityReport& rep) {
  rep.vacuous = rep.tuples_checked == 0;
  if (rep.failures_total > 0)
    rep.status = CheckStatus::fail;
  else if (rep.known_discrepancies_total > 0)
    rep.status = CheckStatus::pass_with_known_discrepancy;
  else
    rep.status = CheckStatus::pass;
}

}  // namespace polycauchy
