#include "bookturan/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

namespace bookturan {

using nlohmann::json;

SearchCache::SearchCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SearchCache::default_dir() {
    if (const char* env = std::getenv("BOOKTURAN_CACHE_DIR"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "bookturan";
    return ".bookturan-cache";
}

std::filesystem::path SearchCache::file() const { return dir_ / "outcomes.jsonl"; }

std::optional<SearchOutcome> SearchCache::lookup(const SearchProblem& p,
                                                 std::ostream* warnings) const {
    std::ifstream in(file());
    if (!in) return std::nullopt;
    const std::string key = p.key();
    std::string line;
    for (long long lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        bool usable = !j.is_discarded() && j.value("schema", 0) == 1 &&
                      j.contains("key") && j["key"].is_string() &&
                      j.contains("max_edges") && j["max_edges"].is_number_integer() &&
                      j.contains("extremal") && j["extremal"].is_array();
        if (usable)
            for (const auto& cert : j["extremal"]) usable = usable && cert.is_string();
        if (!usable) {
            if (warnings)
                *warnings << "cache: skipping corrupt line " << lineno << " in "
                          << file().string() << "\n";
            continue;
        }
        if (j["key"].get<std::string>() != key) continue;
        SearchOutcome out;
        out.max_edges = j["max_edges"].get<long long>();
        for (const auto& cert : j["extremal"])
            out.extremal.push_back(cert.get<std::string>());
        out.explored = j.value("explored", 0LL);
        out.exact = true;
        return out;
    }
    return std::nullopt;
}

void SearchCache::store(const SearchProblem& p, const SearchOutcome& outcome) {
    if (!outcome.exact) return;
    if (lookup(p)) return;
    std::filesystem::create_directories(dir_);
    json j;
    j["schema"] = 1;
    j["key"] = p.key();
    j["max_edges"] = outcome.max_edges;
    j["extremal"] = outcome.extremal;
    j["explored"] = outcome.explored;
    j["exact"] = true;
    std::ofstream out(file(), std::ios::app);
    out << j.dump() << "\n";
    out.flush();
}

}  // namespace bookturan
