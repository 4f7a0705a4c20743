#pragma once

#include <stdexcept>
#include <string>

namespace kronforge {

/// Failure categories. Each one maps onto a distinct CLI exit status.
enum class ErrorKind {
    parse,        // malformed textual input
    domain,       // a documented precondition does not hold
    feasibility,  // the requested n exceeds the configured bound
    internal,     // an exactness or theorem-level consistency check failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// 0 success, 2 parse, 3 domain, 4 feasibility, 5 internal consistency.
inline int exit_code(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::parse: return 2;
    case ErrorKind::domain: return 3;
    case ErrorKind::feasibility: return 4;
    case ErrorKind::internal: return 5;
    }
    return 5;
}

}  // namespace kronforge
