#pragma once

#include <stdexcept>
#include <string>

namespace ktri {

/// Input rejected by an operation's contract (bad context, non-dominating
/// pair, guard exceeded, malformed text).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Signals a bug, never bad input.
class StructuralError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] void structural_failure(const std::string& what);
}  // namespace detail

#define KTRI_CHECK(cond, msg)                                              \
    do {                                                                   \
        if (!(cond)) ::ktri::detail::structural_failure(msg);              \
    } while (0)

}  // namespace ktri
