#pragma once

#include <string>

#include "opineq/campaign.hpp"

namespace opineq {

inline constexpr int kSchemaVersion = 1;

/// Keys mirror CampaignConfig; orders may be numbers or "inf". Missing keys keep defaults.
CampaignConfig parse_config_json(const std::string& text);
CampaignConfig load_config_file(const std::string& path);
std::string config_to_json(const CampaignConfig& config);

/// Full result as JSON. Wall-time is added only when include_timing is set, so the
/// payload without it is reproducible byte for byte.
std::string result_to_json(const CampaignResult& result, bool include_timing = false);
std::string summary_csv(const CampaignResult& result);
std::string report_to_json(const BoundReport& r);

/// Counterexamples read back from a result document.
std::vector<Counterexample> parse_counterexamples(const std::string& result_json);

/// Writes <output_path> (JSON, with timing) and the CSV next to it with a .csv extension.
void write_campaign_outputs(const CampaignResult& result, const std::string& output_path);

}  // namespace opineq
