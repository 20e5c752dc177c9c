#pragma once

#include <stdexcept>
#include <string>

namespace topcode {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation precondition does not hold (bad split site, missing color, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Input exceeds the documented exact-search cap. Distinct from "no result
// exists": callers may retry with smaller inputs.
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error(what) {}
};

} // namespace topcode
