#pragma once

#include <functional>
#include <vector>

#include "tspread/binomial.hpp"
#include "tspread/ideal.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

// Literal recomputation paths for cross-checking the closed-form code.
// These enumerate and count directly from the definitions and never touch
// the binomial formulas, so a bug cannot hide on both sides of a test.

// Every tau-spread extension u*x_i with u in L, found by scanning the
// full degree d+1 universe.
MonomialSet brute_shadow(const MonomialSet& L, int tau);
MonomialSet brute_shadow(const MonomialSet& L);

// Number of members of M_{n,deg(u),t} strictly below u in the order.
BigInt brute_complement_count(const Monomial& u, int n, int t);

// Compares L against the order-prefix of the same size.
bool brute_is_lex_set(const MonomialSet& L);

// Walks every strongly stable subset of M_{n,d,t}, including the empty
// one.  Throws "size guard exceeded" when |M_{n,d,t}| > guard; meant for
// desk-scale universes only.
void for_each_strongly_stable_set(int n, int d, int t, long long guard,
                                  const std::function<void(const MonomialSet&)>& fn);

std::vector<MonomialSet> enumerate_strongly_stable_sets(int n, int d, int t,
                                                        long long guard = 22);

// f_t-vectors of every strongly stable t-spread ideal in n variables,
// deduplicated.  Guarded to n <= 6 and t <= 2; TSPREAD_MAX_N lifts the
// variable cap.
std::vector<FtVector> brute_kk_universe(int n, int t);

// Reads TSPREAD_MAX_N, falling back when unset or unparsable.
int env_max_n(int fallback);

}  // namespace tspread
