#pragma once

// On-disk cache of character tables: one JSON file per (p, kind).
//
// A cache is only an accelerator. Files that fail to parse, carry another
// format version, or disagree with fresh computation on a random sample are
// ignored.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "charring.hpp"
#include "liechar.hpp"
#include "tiltchar.hpp"

namespace lietilt {

using CharacterTable = std::map<int, SymCharacter>;

enum class TableKind { Tilting, Lie };

inline std::string_view to_string(TableKind k) { return k == TableKind::Tilting ? "tilting" : "lie"; }

/// Fresh computation of one table entry.
inline SymCharacter compute_entry(TableKind kind, int m, PrimeChar p) {
    return kind == TableKind::Tilting ? char_tilting(m, p) : char_lie_power(m);
}

/// Default location: $LIETILT_CACHE_DIR, else $XDG_CACHE_HOME/lietilt, else ~/.cache/lietilt.
inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("LIETILT_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "lietilt";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "lietilt";
    return std::filesystem::path(".lietilt-cache");
}

class CharacterCache {
public:
    static constexpr int format_version = 1;

    explicit CharacterCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::filesystem::path path_for(PrimeChar p, TableKind kind) const {
        return dir_ / (std::string(to_string(kind)) + "-p" + std::to_string(p.value()) + ".json");
    }

    static std::string serialize(PrimeChar p, TableKind kind, const CharacterTable& table) {
        nlohmann::ordered_json j;
        j["format_version"] = format_version;
        j["kind"] = to_string(kind);
        j["p"] = p.value();
        nlohmann::ordered_json entries = nlohmann::ordered_json::object();
        for (const auto& [m, chi] : table) {
            nlohmann::ordered_json c = nlohmann::ordered_json::object();
            for (auto [w, mult] : chi.half()) c[std::to_string(w)] = mult;
            entries[std::to_string(m)] = std::move(c);
        }
        j["entries"] = std::move(entries);
        return j.dump() + "\n";
    }

    /// Parses a table; nullopt for anything malformed or from another format version.
    static std::optional<CharacterTable> parse(const std::string& text, PrimeChar p, TableKind kind) {
        try {
            const auto j = nlohmann::json::parse(text);
            if (j.at("format_version").get<int>() != format_version) return std::nullopt;
            if (j.at("kind").get<std::string>() != to_string(kind)) return std::nullopt;
            if (j.at("p").get<int>() != p.value()) return std::nullopt;
            CharacterTable table;
            for (const auto& [mk, c] : j.at("entries").items()) {
                SymCharacter::Map half;
                for (const auto& [wk, mult] : c.items()) half[std::stoi(wk)] = mult.get<std::int64_t>();
                table.emplace(std::stoi(mk), SymCharacter(half));
            }
            return table;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    /// Recomputes about `fraction` of the entries (at least one) and compares.
    static bool verify_sample(const CharacterTable& table, PrimeChar p, TableKind kind, double fraction,
                              std::uint64_t seed) {
        if (table.empty()) return true;
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution pick(fraction);
        bool any = false;
        for (const auto& [m, chi] : table) {
            if (!pick(rng)) continue;
            any = true;
            if (compute_entry(kind, m, p) != chi) return false;
        }
        if (!any) {
            std::uniform_int_distribution<std::size_t> idx(0, table.size() - 1);
            auto it = std::next(table.begin(), static_cast<std::ptrdiff_t>(idx(rng)));
            return compute_entry(kind, it->first, p) == it->second;
        }
        return true;
    }

    std::optional<CharacterTable> load(PrimeChar p, TableKind kind, std::uint64_t seed = 0x5eed) const {
        std::ifstream in(path_for(p, kind), std::ios::binary);
        if (!in) return std::nullopt;
        std::stringstream buf;
        buf << in.rdbuf();
        auto table = parse(buf.str(), p, kind);
        if (!table || !verify_sample(*table, p, kind, 0.1, seed)) return std::nullopt;
        return table;
    }

    /// Writes to a temporary sibling and renames it into place.
    void store(PrimeChar p, TableKind kind, const CharacterTable& table) const {
        std::filesystem::create_directories(dir_);
        const auto target = path_for(p, kind);
        auto tmp = target;
        tmp += ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << serialize(p, kind, table);
            if (!out) throw std::runtime_error("short write to cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, target);
    }

private:
    std::filesystem::path dir_;
};

/// Seeds the in-process tilting memo from the cache, if a valid table exists.
inline std::size_t warm_tilting_memo(const CharacterCache& cache, PrimeChar p) {
    auto table = cache.load(p, TableKind::Tilting);
    if (!table) return 0;
    auto& memo = detail::TiltingMemo::instance();
    for (const auto& [m, chi] : *table) memo.store(m, p, chi);
    return table->size();
}

/// Writes back everything the tilting memo holds for p, including entries seeded from disk.
inline void persist_tilting_memo(const CharacterCache& cache, PrimeChar p) {
    CharacterTable table = detail::TiltingMemo::instance().entries(p);
    if (table.empty()) return;
    cache.store(p, TableKind::Tilting, table);
}

}  // namespace lietilt
