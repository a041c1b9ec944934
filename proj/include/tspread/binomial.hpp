#pragma once

#include <gmpxx.h>

namespace tspread {

using BigInt = mpz_class;

// Binomial coefficient with the convention used throughout this library:
// C(m, k) = 0 whenever m < 0 or m < k.  Sentinel terms in the successor
// operators rely on negative tops vanishing.
BigInt binomial(const BigInt& m, unsigned long k);

// Sum of C(x, k) over 0 <= x <= m, i.e. C(m+1, k+1); 0 when m < 0.
BigInt binomial_prefix_sum(const BigInt& m, unsigned long k);

}  // namespace tspread
