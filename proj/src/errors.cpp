#include "gdlog/errors.hpp"

namespace gdlog {

std::string SourceSpan::toString() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(colStart) +
           (colEnd > colStart ? "-" + std::to_string(colEnd) : "");
}

namespace {

std::string withSpan(const std::string &message, const std::optional<SourceSpan> &span) {
    if (!span) return message;
    return span->toString() + ": " + message;
}

} // namespace

InputError::InputError(std::string message, std::optional<SourceSpan> span)
    : std::runtime_error(withSpan(message, span)), span_(std::move(span)) {}

} // namespace gdlog
