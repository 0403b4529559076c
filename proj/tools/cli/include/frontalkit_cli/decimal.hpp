#pragma once

#include <gmpxx.h>

#include <string>

namespace frontalkit::cli {

/// Decimal text for an exact rational with `digits` significant digits,
/// rounded half to even. Fixed notation for exponents in [-5, digits),
/// scientific ("1.5e-07") otherwise; trailing zeros are dropped.
std::string format_decimal(const mpq_class& q, int digits = 12);

}  // namespace frontalkit::cli
