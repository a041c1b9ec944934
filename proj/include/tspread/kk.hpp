#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspread/binomial.hpp"
#include "tspread/ideal.hpp"

namespace tspread {

// One step of the feasibility chain: at degree >= 1 the entry f(degree+1)
// is compared against the largest count the successor operator allows,
// given f(degree).  Degree 0 records the f(0) == 1 requirement.
struct FeasibilityBound {
  int degree = 0;
  BigInt given;
  BigInt bound;

  bool operator==(const FeasibilityBound&) const = default;
};

struct FeasibilityReport {
  bool feasible = false;
  int n = 0;
  int t = 1;
  std::vector<FeasibilityBound> bounds;
  std::optional<FeasibilityBound> first_violation;
};

// Tests whether f is the f_t-vector of some t-spread monomial ideal in
// n = f(1) variables.  Entries beyond the stored length count as zero;
// the scan stops at the earliest violation.
FeasibilityReport kk_check(const std::vector<BigInt>& f, int t);

class InfeasibleError : public std::domain_error {
 public:
  explicit InfeasibleError(FeasibilityReport report);
  const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

// Builds the lex ideal whose f_t-vector equals f, or throws InfeasibleError.
TSpreadIdeal kk_witness(const std::vector<BigInt>& f, int t);

}  // namespace tspread
