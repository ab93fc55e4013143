#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gdlog {

/// Location of a token or construct in an input file. 1-based, end >= start.
struct SourceSpan {
    std::string file;
    std::size_t line = 1;
    std::size_t colStart = 1;
    std::size_t colEnd = 1;

    std::string toString() const;
};

/// Malformed or semantically invalid input (programs, databases, distributions).
class InputError : public std::runtime_error {
  public:
    explicit InputError(std::string message, std::optional<SourceSpan> span = std::nullopt);

    const std::optional<SourceSpan> &span() const { return span_; }

  private:
    std::optional<SourceSpan> span_;
};

/// Syntax error; always carries a span.
class ParseError : public InputError {
  public:
    ParseError(std::string message, SourceSpan span) : InputError(std::move(message), std::move(span)) {}
};

/// A computation exceeded a configured capacity (e.g. the stable-model
/// enumeration cap). Carries the cap so callers can report it.
class CapacityError : public std::runtime_error {
  public:
    CapacityError(std::string message, std::size_t cap)
        : std::runtime_error(std::move(message)), cap_(cap) {}

    std::size_t cap() const { return cap_; }

  private:
    std::size_t cap_;
};

} // namespace gdlog
