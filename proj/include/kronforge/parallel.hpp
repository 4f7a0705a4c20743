#pragma once

#include <exception>
#include <mutex>

#include <omp.h>

namespace kronforge {

/// 0 means the OpenMP runtime default.
inline int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

/// Exceptions must not escape an OpenMP region; this keeps the first one
/// thrown by any iteration so it can be rethrown after the loop.
class ParallelErrors {
public:
    template <class F>
    void run(F&& f) noexcept
    {
        try {
            f();
        } catch (...) {
            std::lock_guard lock(mutex_);
            if (!first_)
                first_ = std::current_exception();
        }
    }

    void rethrow()
    {
        if (first_)
            std::rethrow_exception(first_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr first_;
};

}  // namespace kronforge
