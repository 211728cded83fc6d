#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ybmaps/verify.hpp"

#include <json.hpp>

namespace ybmaps {

nlohmann::ordered_json check_report_json(const CheckReport& r);

/// One section per registered map with one entry per check (skipped checks
/// appear with their reason), plus the resolved conventions. Byte-identical
/// for identical (trials, seed) regardless of thread count.
nlohmann::ordered_json full_report(int trials, std::uint64_t seed, bool parallel = true);

std::string listing_text(const Catalog& catalog);
nlohmann::ordered_json listing_json(const Catalog& catalog);

}  // namespace ybmaps
