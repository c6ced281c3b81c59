#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace workbench {

inline constexpr const char* kToolkitVersion = "workbench 0.1.0";

/// One persisted run: subcommand, full parameter map, result payload, and
/// enough metadata to invalidate stale entries.
struct RunRecord {
    std::string subcommand;
    nlohmann::json params;
    nlohmann::json result;
    double wall_ms = 0.0;
    std::uint64_t nodes = 0;
    std::string version = kToolkitVersion;
};

/// Cache directory: WORKBENCH_CACHE_DIR when set, else `.workbench-cache/`.
std::string cache_dir();

/// Deterministic key from (subcommand, params); params keys are sorted by the
/// JSON object representation.
std::string cache_key(const std::string& subcommand, const nlohmann::json& params);

/// Absent on missing file, version mismatch, or a corrupt entry (corrupt
/// entries emit a warning on stderr and are otherwise ignored).
std::optional<RunRecord> cache_lookup(const std::string& key);

bool cache_store(const std::string& key, const RunRecord& rec);

}  // namespace workbench
