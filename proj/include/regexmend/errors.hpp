#pragma once

#include <stdexcept>
#include <string>

namespace regexmend {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed regex text. `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& reason)
        : Error("syntax error at " + std::to_string(position) + ": " + reason),
          position(position),
          reason(reason) {}
    std::size_t position;
    std::string reason;
};

// A character outside the declared alphabet appeared in a regex or example string.
struct AlphabetViolation : Error {
    explicit AlphabetViolation(const std::string& what) : Error(what) {}
};

// Derivative exploration exceeded the configured state cap.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A counted repetition bound exceeds the configured maximum.
struct QuantifierTooLarge : Error {
    explicit QuantifierTooLarge(const std::string& what) : Error(what) {}
};

// Sampling was asked for members of an empty language.
struct EmptyLanguage : Error {
    explicit EmptyLanguage(const std::string& what) : Error(what) {}
};

// An abstract regex references a token absent from its dictionary.
struct UnknownToken : Error {
    explicit UnknownToken(const std::string& what) : Error(what) {}
};

// An external synthesizer/repairer subprocess failed (exit status, timeout,
// or unusable output).
struct ToolError : Error {
    explicit ToolError(const std::string& what) : Error(what) {}
};

}  // namespace regexmend
