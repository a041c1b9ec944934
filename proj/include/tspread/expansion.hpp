#pragma once

#include <string>
#include <vector>

#include "tspread/binomial.hpp"

namespace tspread {

struct ExpansionTerm {
  BigInt top;    // a_j
  int bottom;    // j
  bool operator==(const ExpansionTerm&) const = default;
};

// The unique greedy representation a = sum of C(a_j, j) for j = d down to r,
// with a_d > a_{d-1} > ... > a_r >= r >= 1.  Empty for a = 0.
class MacaulayExpansion {
 public:
  MacaulayExpansion(int d, std::vector<ExpansionTerm> terms)
      : d_(d), terms_(std::move(terms)) {}

  int degree() const { return d_; }
  // r; d + 1 when the expansion is empty.
  int lowest_position() const {
    return terms_.empty() ? d_ + 1 : terms_.back().bottom;
  }
  const std::vector<ExpansionTerm>& terms() const { return terms_; }

  BigInt value() const;
  // "C(13,8)+C(11,7)+..."; "0" when empty.
  std::string str() const;

 private:
  int d_;
  std::vector<ExpansionTerm> terms_;  // bottoms d, d-1, ..., r
};

MacaulayExpansion macaulay_expand(const BigInt& a, int d);

// a^(d): sum of C(a_j, j+1) over the expansion; 0^(d) = 0.
BigInt classic_successor(const BigInt& a, int d);

// a^[d]_t: the t-spread successor bound in n ambient variables.  For a lex
// set L in M_{n,d,t} with a = |M_{n,d,t}| - |L| this equals
// |M_{n,d+1,t}| - |shad_t(L)|.  Requires 0 <= a <= |M_{n,d,t}|.
BigInt t_successor(const BigInt& a, int d, int t, int n);

// Index sequence i_1 < ... < i_d of the lex-least member of the lex segment
// of size |M_{n,d,t}| - a, built from the expansion of a with sentinel rows
// below position r.  Requires 0 <= a < |M_{n,d,t}|.
std::vector<int> indices_from_complement_count(const BigInt& a, int d, int t, int n);

}  // namespace tspread
