#pragma once

#include <stdexcept>
#include <string>

namespace fcl {

// Bad user input: malformed partitions, out-of-range residues, ...
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A runtime assertion about a convention failed (triangularity, leading terms).
struct ConventionViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A configured size or degree cap was exceeded.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic that must be exact was not; always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw InvalidArgument(what);
}

inline long pmod(long a, long n)
{
    long r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace fcl
