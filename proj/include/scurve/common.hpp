#pragma once

#include <stdexcept>
#include <string>

namespace scurve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

[[noreturn]] inline void internal_error(const std::string& what) {
    throw Error("internal error: " + what);
}

// always-on invariant check (never compiled out)
inline void check(bool ok, const char* what) {
    if (!ok) internal_error(what);
}

}  // namespace scurve
