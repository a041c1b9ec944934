#pragma once

#include <vector>

#include "tspread/monomial.hpp"

namespace tspread {

// The lex set of M_{n,d,t} of the given size: its `size` lex-greatest
// elements.  Lex sets are determined by cardinality alone, so segments stay
// symbolic until materialized.
struct LexSegment {
  int n, d, t;
  BigInt size;
};

// Counts of set members by largest variable index.
struct MaxIndexProfile {
  std::vector<long long> count;       // count[i] = m_i, index 0 unused
  std::vector<long long> cumulative;  // cumulative[i] = m_{<=i}

  long long at_most(int i) const {
    if (i < 1) return 0;
    if (i >= static_cast<int>(cumulative.size()))
      return cumulative.empty() ? 0 : cumulative.back();
    return cumulative[static_cast<std::size_t>(i)];
  }
};

MonomialSet materialize(const LexSegment& seg);

// Members of the segment with rank in [from, to), rank 0 being the
// lex-greatest element of M_{n,d,t}.
std::vector<Monomial> materialize_range(int n, int d, int t,
                                        const BigInt& from, const BigInt& to);

// Number of elements of M_{n,d,t} strictly lex-smaller than u.
BigInt complement_count(const Monomial& u, int n, int t);

// Inverse of complement_count: the unique u in M_{n,d,t} with exactly a
// elements below it.  Requires 0 <= a < |M_{n,d,t}|.
Monomial monomial_from_complement_count(const BigInt& a, int n, int d, int t);

// All tau-spread monomials x_i * v with v in L.  Requires 1 <= tau <= L.t;
// tau = 0 is rejected because its shadow contains non-square-free monomials.
MonomialSet shadow(const MonomialSet& L, int tau);
MonomialSet shadow(const MonomialSet& L);

MaxIndexProfile max_index_profile(const MonomialSet& L);

// |shad_t(L)| via the cumulative-profile formula; requires L strongly stable.
BigInt shadow_size_by_formula(const MonomialSet& L);

// |shad_t(L)| for the lex set L of the given size, computed arithmetically.
BigInt lex_shadow_size(int n, int d, int t, const BigInt& size);

bool is_lex_set(const MonomialSet& L);
bool is_strongly_stable_set(const MonomialSet& L);

// All t-spread exchanges x_i (u / x_j) with j in supp(u), i < j, i outside
// supp(u).  Every result is lex-greater than u.
std::vector<Monomial> stable_exchanges(const Monomial& u, int t);

}  // namespace tspread
