#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace rdcert::cli {

/// Append-only character-table cache: one JSON entry per line after a version
/// header line. Entries whose version differs from kVersion are ignored; the
/// last entry for a key wins. Writes go through a single appender.
class TableCache {
public:
    static constexpr int kVersion = 1;

    explicit TableCache(std::string path);

    /// $RDCERT_CACHE if set, else rdcert_tables.jsonl under the user cache dir.
    static std::string default_path();

    const std::string& path() const { return path_; }

    std::optional<nlohmann::json> lookup(const std::string& key) const;
    void append(const std::string& key, const nlohmann::json& table);

    nlohmann::json stats() const;
    void clear();

private:
    std::string path_;
};

} // namespace rdcert::cli
