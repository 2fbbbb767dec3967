#pragma once

#include <stdexcept>
#include <string>

namespace crnx {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; carries the 1-based line number when known.
struct ParseError : Error {
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), lineNumber(line) {}
    int lineNumber;
};

// A structural fact was violated; `fact` names it (e.g. "UniqueReactions").
struct ValidationError : Error {
    ValidationError(const std::string& factName, const std::string& msg)
        : Error(factName + ": " + msg), fact(factName) {}
    std::string fact;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct UnsupportedClassError : Error {
    using Error::Error;
};

// Enumeration/search hit a configured limit; `token` resumes the run.
struct ResourceLimitError : Error {
    ResourceLimitError(const std::string& msg, std::string resumeToken)
        : Error(msg), token(std::move(resumeToken)) {}
    std::string token;
};

struct CacheError : Error {
    using Error::Error;
};

// Discrete simulation exceeded its step or state cap.
struct NonTerminationError : Error {
    using Error::Error;
};

} // namespace crnx
