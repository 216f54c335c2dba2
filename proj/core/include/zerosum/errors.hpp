#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zerosum {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element does not belong to the group it is used with (arity or range).
struct InvalidElementError : Error {
    using Error::Error;
};

// Parameters outside the supported domain (bad group, bad ranges, unsupported mode).
struct DomainError : Error {
    using Error::Error;
};

// remove(S, T) with T not a sub-multiset of S.
struct NotContainedError : Error {
    using Error::Error;
};

// kernel_iso applied to an element outside ker pi.
struct NotInKernelError : Error {
    using Error::Error;
};

// Configured resource budget exceeded; message names the bound that was hit.
struct ResourceError : Error {
    using Error::Error;
};

// A guarantee the library relies on failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg), line(0) {}
    ParseError(const std::string& msg, std::size_t line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    std::size_t line;
};

}  // namespace zerosum
