#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace fourfold {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/r" otherwise.
std::string to_string(const Rational& q);
// Accepts "p", "p/r" and plain decimals such as "-1.25".
Rational parse_rational(const std::string& text);

Rational ceil(const Rational& q);
Rational floor(const Rational& q);
double to_double(const Rational& q);

// Certified rational enclosures of pi and pi^2. Level 0 is the 16-digit
// enclosure; higher levels use more digits (up to kMaxPiLevel).
constexpr int kMaxPiLevel = 3;
std::pair<Rational, Rational> pi_enclosure(int level = kMaxPiLevel);
std::pair<Rational, Rational> pi_squared_enclosure(int level = 0);

enum class Truth { False, True, Undecided };

// Decide a*pi^2 > b (or >=) exactly. Since pi^2 is irrational the only true
// tie is a = b = 0, so refining the enclosure always settles the question;
// Undecided is returned only if the finest enclosure still straddles b.
Truth pi_squared_gt(const Rational& a, const Rational& b);
Truth pi_squared_ge(const Rational& a, const Rational& b);

}  // namespace fourfold
