#pragma once

#include <gmpxx.h>

#include <string>

namespace gdlog {

/// Exact rational number. All probability arithmetic in the engine is exact;
/// doubles appear only in presentation-layer output.
using Rat = mpq_class;

/// Parses "a", "-a", "a/b" or a decimal literal like "0.1" (exactly 1/10).
/// Throws InputError on malformed input or a zero denominator.
Rat ratFromString(const std::string &text);

/// Canonical form: "n" when the denominator is 1, otherwise "n/d".
std::string ratToString(const Rat &value);

double ratToDouble(const Rat &value);

std::size_t ratHash(const Rat &value);

} // namespace gdlog
