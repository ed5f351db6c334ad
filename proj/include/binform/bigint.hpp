#pragma once

#include <gmpxx.h>

namespace binform {

// Arbitrary-precision integer coefficients. All arithmetic in this
// library is exact; there are no rational or floating coefficients.
using Int = mpz_class;

}  // namespace binform
