#include "kronforge/engine.hpp"

#include "kronforge/error.hpp"
#include "kronforge/table_cache.hpp"

namespace kronforge {

void RunConfig::validate() const
{
    if (n_max < 1 || n_max > kHardNMax)
        fail(ErrorKind::domain, "n-max must lie in [1, " + std::to_string(kHardNMax) + "]");
    if (threads < 0)
        fail(ErrorKind::domain, "thread count must be non-negative");
}

Engine::Engine(RunConfig config) : config_(std::move(config)) { config_.validate(); }

void Engine::require_feasible(int n) const
{
    if (!feasible(n))
        fail(ErrorKind::feasibility,
             "n = " + std::to_string(n) + " exceeds the feasibility bound " + std::to_string(config_.n_max) +
                 " (raise it with --n-max, at most " + std::to_string(kHardNMax) + ")");
}

std::shared_ptr<const CharacterTable> Engine::table(int n)
{
    require_feasible(n);
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(n); it != tables_.end()) {
        last_source_ = TableSource::memory;
        return it->second;
    }

    std::shared_ptr<const CharacterTable> result;
    bool had_file = false;
    if (!config_.cache_dir.empty()) {
        had_file = std::filesystem::exists(table_cache_path(config_.cache_dir, n));
        if (auto cached = read_cached_table(config_.cache_dir, n); cached && check_table(*cached, config_.threads).ok()) {
            result = std::make_shared<const CharacterTable>(std::move(*cached));
            last_source_ = TableSource::disk;
        }
    }
    if (!result) {
        result = std::make_shared<const CharacterTable>(build_table(n, config_.threads, memo_, config_.n_max));
        last_source_ = had_file ? TableSource::rebuilt : TableSource::built;
        if (!config_.cache_dir.empty())
            write_file_atomic(table_cache_path(config_.cache_dir, n), serialize_table(*result));
    }
    tables_.emplace(n, result);
    return result;
}

TableSource Engine::last_source() const
{
    std::lock_guard lock(mutex_);
    return last_source_;
}

}  // namespace kronforge
