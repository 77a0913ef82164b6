#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rquant {

/// Exact rational scalar. Arithmetic on canonical operands stays canonical,
/// but Rat(n, d) does not reduce; MPoly canonicalizes what it stores.
using Rat = mpq_class;

/// Parses "n", "-n" or "n/d". Throws ParseError on malformed text or d == 0.
Rat parse_rat(std::string_view text);

/// Serialises as "num/den", always with an explicit denominator.
std::string format_rat(const Rat& q);

/// Human-readable form: "n" for integers, "n/d" otherwise.
std::string pretty_rat(const Rat& q);

/// Generalised binomial coefficient p(p-1)...(p-k+1)/k!.
Rat binomial(const Rat& p, unsigned k);

Rat factorial(unsigned k);

}  // namespace rquant
