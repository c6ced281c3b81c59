#include "workbench/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace workbench {

std::string cache_dir() {
    if (const char* env = std::getenv("WORKBENCH_CACHE_DIR"); env && *env) return env;
    return ".workbench-cache";
}

std::string cache_key(const std::string& subcommand, const nlohmann::json& params) {
    const std::string payload = subcommand + "\n" + params.dump();
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::optional<RunRecord> cache_lookup(const std::string& key) {
    const std::filesystem::path path = std::filesystem::path(cache_dir()) / (key + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        RunRecord rec;
        rec.subcommand = j.at("subcommand").get<std::string>();
        rec.params = j.at("params");
        rec.result = j.at("result");
        rec.wall_ms = j.at("wall_ms").get<double>();
        rec.nodes = j.at("nodes").get<std::uint64_t>();
        rec.version = j.at("version").get<std::string>();
        if (rec.version != kToolkitVersion) return std::nullopt;
        return rec;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache entry " << path.string() << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

bool cache_store(const std::string& key, const RunRecord& rec) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    const std::filesystem::path path = std::filesystem::path(cache_dir()) / (key + ".json");
    std::ofstream out(path);
    if (!out) return false;
    nlohmann::json j{{"subcommand", rec.subcommand}, {"params", rec.params},   {"result", rec.result},
                     {"wall_ms", rec.wall_ms},       {"nodes", rec.nodes},     {"version", rec.version}};
    out << j.dump(2) << "\n";
    return static_cast<bool>(out);
}

}  // namespace workbench
