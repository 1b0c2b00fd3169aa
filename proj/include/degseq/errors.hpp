#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

// Input text that does not describe a sequence or graph.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A named precondition of an operation was violated. condition() holds the
// violated inequality in a short machine-comparable form (e.g. "n <= m").
class ArgumentError : public std::invalid_argument {
public:
    ArgumentError(std::string condition, const std::string& what)
        : std::invalid_argument(what), condition_(std::move(condition)) {}

    const std::string& condition() const noexcept { return condition_; }

private:
    std::string condition_;
};

// The input lies outside the domain of the operation (non-graphic sequence,
// wrong profile, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A requested object provably does not exist.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed a configured size limit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A step that is guaranteed to succeed failed; always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace degseq
