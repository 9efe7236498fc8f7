#pragma once

#include <gmpxx.h>

#include <string>

#include "schurlc/errors.hpp"

namespace schurlc {

// Exact arithmetic throughout; no floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;

Int int_factorial(unsigned long n);
Int int_pow2(unsigned long n);

std::string int_to_decimal(const Int& v);
Int int_from_decimal(const std::string& s);   // ParseError on malformed input

inline int sign_of(const Rat& q) { return sgn(q); }

} // namespace schurlc
