#include "tspread/binomial.hpp"

namespace tspread {

BigInt binomial(const BigInt& m, unsigned long k) {
  if (m < 0 || m < k) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), m.get_mpz_t(), k);
  return r;
}

BigInt binomial_prefix_sum(const BigInt& m, unsigned long k) {
  if (m < 0) return 0;
  return binomial(m + 1, k + 1);
}

}  // namespace tspread
