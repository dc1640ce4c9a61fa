#pragma once

#include <stdexcept>
#include <string>

namespace dtop {

/// Violation of an invariant the algorithms themselves guarantee.
/// Seeing one of these means a bug, never bad user input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Postcondition / invariant assertion.
inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

/// Input validation; failures map to CLI exit code 2.
inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace dtop
