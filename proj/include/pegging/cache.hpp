#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pegging/json_io.hpp"

namespace peg {

// 64-bit FNV-1a of the canonical graph text, as 16 hex digits.
std::string graph_key(const std::string& canonical);

struct CacheRecord {
    std::string graph_key;
    std::string task;
    Json params;
    Json result;
    std::string created_at;  // UTC, ISO 8601
    std::string tool_version;
};

struct CacheHit {
    CacheRecord record;
    bool stale = false;  // written by a different tool version
};

// Append-only JSONL store; one record per line. Unparseable lines are
// skipped with a warning on stderr.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path);

    // Newest record matching (graph_key, task, params).
    std::optional<CacheHit> get(const std::string& graph_key, const std::string& task, const Json& params) const;

    // Throws std::runtime_error when the file cannot be written.
    void put(const CacheRecord& record) const;

    const std::filesystem::path& path() const { return path_; }
    std::size_t skipped_lines() const { return skipped_; }

private:
    std::filesystem::path path_;
    mutable std::size_t skipped_ = 0;
};

Json to_json(const CacheRecord& r);
CacheRecord cache_record_from_json(const Json& j);

// Current UTC time formatted for created_at.
std::string utc_timestamp();

}  // namespace peg
