#include "pegging/cache.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include "pegging/version.hpp"

namespace peg {

std::string graph_key(const std::string& canonical) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const CacheRecord& r) {
    return Json{{"graph_key", r.graph_key}, {"task", r.task},         {"params", r.params},
                {"result", r.result},       {"created_at", r.created_at}, {"tool_version", r.tool_version}};
}

CacheRecord cache_record_from_json(const Json& j) {
    CacheRecord r;
    r.graph_key = j.at("graph_key").get<std::string>();
    r.task = j.at("task").get<std::string>();
    r.params = j.at("params");
    r.result = j.at("result");
    r.created_at = j.at("created_at").get<std::string>();
    r.tool_version = j.at("tool_version").get<std::string>();
    return r;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::optional<CacheHit> ResultCache::get(const std::string& key, const std::string& task, const Json& params) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::optional<CacheHit> newest;
    std::string line;
    std::size_t line_no = 0;
    skipped_ = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        CacheRecord rec;
        try {
            rec = cache_record_from_json(Json::parse(line));
        } catch (const std::exception& e) {
            ++skipped_;
            std::cerr << "warning: " << path_.string() << ":" << line_no << ": skipping corrupt cache line\n";
            continue;
        }
        if (rec.graph_key == key && rec.task == task && rec.params == params) {
            // Later lines are newer.
            const bool stale = rec.tool_version != kToolVersion;
            newest = CacheHit{std::move(rec), stale};
        }
    }
    return newest;
}

void ResultCache::put(const CacheRecord& record) const {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + path_.string() + " for writing");
    out << to_json(record).dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed to write cache file " + path_.string());
}

}  // namespace peg
