#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>

#include "kronforge/characters.hpp"

namespace kronforge {

struct RunConfig {
    int n_max = kDefaultNMax;            // 1..21
    std::filesystem::path cache_dir;     // empty: memory only
    int threads = 0;                     // 0: OpenMP default
    bool confirm = true;                 // brute-force confirm certificates when feasible

    /// ErrorKind::domain on out-of-range fields.
    void validate() const;
};

/// Where the last request for a table was satisfied from.
enum class TableSource { memory, disk, built, rebuilt };

/// Owns the feasibility bound, the shared character memo, and the
/// in-memory and on-disk table caches. Tables are immutable once handed out.
class Engine {
public:
    explicit Engine(RunConfig config = {});

    const RunConfig& config() const noexcept { return config_; }
    int threads() const noexcept { return config_.threads; }
    int n_max() const noexcept { return config_.n_max; }
    bool feasible(int n) const noexcept { return n >= 0 && n <= config_.n_max; }
    /// ErrorKind::feasibility when n exceeds the bound.
    void require_feasible(int n) const;

    /// Character table of S_n, from memory, then disk, then a fresh build.
    /// A cached file with a bad checksum or failing orthogonality is
    /// discarded and rebuilt.
    std::shared_ptr<const CharacterTable> table(int n);
    TableSource last_source() const;

    CharacterMemo& memo() noexcept { return memo_; }

private:
    RunConfig config_;
    CharacterMemo memo_;
    mutable std::mutex mutex_;
    std::map<int, std::shared_ptr<const CharacterTable>> tables_;
    TableSource last_source_ = TableSource::memory;
};

}  // namespace kronforge
