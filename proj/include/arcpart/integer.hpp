#pragma once

#include <string>

#include <gmpxx.h>

namespace arcpart {

/// Unbounded integer used for every coefficient and count.
using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace arcpart
