#include "rdcert/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace rdcert::cli {

using nlohmann::json;

TableCache::TableCache(std::string path) : path_(std::move(path)) {}

std::string TableCache::default_path() {
    if (const char* env = std::getenv("RDCERT_CACHE")) return env;
    std::filesystem::path base;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        base = xdg;
    else if (const char* home = std::getenv("HOME"))
        base = std::filesystem::path(home) / ".cache";
    else
        base = std::filesystem::temp_directory_path();
    return (base / "rdcert" / "tables.jsonl").string();
}

std::optional<json> TableCache::lookup(const std::string& key) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::string line;
    std::optional<json> hit;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json entry = json::parse(line, nullptr, false);
        if (entry.is_discarded()) continue;
        if (first) {
            first = false;
            if (entry.contains("cache_version")) continue; // header line
        }
        if (!entry.contains("key") || !entry.contains("version")) continue;
        if (entry["version"] != kVersion) continue; // stale format
        if (entry["key"] == key) hit = entry["table"];
    }
    return hit;
}

void TableCache::append(const std::string& key, const json& table) {
    std::filesystem::path p(path_);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    bool fresh = !std::filesystem::exists(p) || std::filesystem::file_size(p) == 0;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cache: cannot open " + path_);
    if (fresh) out << json{{"cache_version", kVersion}}.dump() << "\n";
    out << json{{"key", key}, {"version", kVersion}, {"table", table}}.dump() << "\n";
}

json TableCache::stats() const {
    std::ifstream in(path_);
    std::size_t entries = 0, stale = 0;
    std::uintmax_t bytes = 0;
    if (in) {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json entry = json::parse(line, nullptr, false);
            if (entry.is_discarded() || !entry.contains("key")) continue;
            if (entry.contains("version") && entry["version"] == kVersion)
                ++entries;
            else
                ++stale;
        }
        bytes = std::filesystem::file_size(path_);
    }
    return json{{"path", path_},
                {"entries", entries},
                {"stale_entries", stale},
                {"bytes", bytes},
                {"version", kVersion}};
}

void TableCache::clear() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
}

} // namespace rdcert::cli
