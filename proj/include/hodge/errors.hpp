#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/**
 * @brief Library error carrying a stable machine-readable code.
 *
 * Codes mirror the error names used in reports (e.g. "AmbientMismatch",
 * "NotNilpotent", "NonRSplit"). Parse failures use the code "ParseError".
 */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    /** @brief Stable error code. */
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/** @brief Raised for malformed textual or JSON input. */
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

}  // namespace hodge
