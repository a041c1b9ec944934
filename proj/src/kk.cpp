#include "tspread/kk.hpp"

#include <limits>

#include "tspread/expansion.hpp"
#include "tspread/lexset.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

namespace {

std::string violation_message(const FeasibilityReport& report) {
  if (!report.first_violation) return "infeasible";
  const auto& v = *report.first_violation;
  if (v.degree == 0)
    return "infeasible: f(0) = " + v.given.get_str() + ", must be 1";
  return "infeasible at d=" + std::to_string(v.degree);
}

}  // namespace

InfeasibleError::InfeasibleError(FeasibilityReport report)
    : std::domain_error(violation_message(report)), report_(std::move(report)) {}

FeasibilityReport kk_check(const std::vector<BigInt>& f, int t) {
  if (t < 1) throw std::invalid_argument("kk_check: spread must be >= 1");
  if (f.empty()) throw std::invalid_argument("kk_check: empty vector");
  for (const auto& e : f)
    if (e < 0) throw std::invalid_argument("kk_check: negative entry");

  FeasibilityReport report;
  report.t = t;
  auto at = [&f](int j) -> BigInt {
    if (j < 0 || j >= static_cast<int>(f.size())) return 0;
    return f[static_cast<std::size_t>(j)];
  };
  if (f[0] != 1) {
    if (f.size() > 1 && f[1].fits_sint_p())
      report.n = static_cast<int>(f[1].get_si());
    report.first_violation = FeasibilityBound{0, f[0], BigInt(1)};
    report.bounds.push_back(*report.first_violation);
    return report;
  }
  if (f.size() > 1) {
    if (!f[1].fits_sint_p())
      throw std::domain_error("kk_check: f(1) does not fit in an int");
    report.n = static_cast<int>(f[1].get_si());
  }

  int top = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= top; ++d) {
    FeasibilityBound step;
    step.degree = d;
    step.given = at(d + 1);
    step.bound = t_successor(at(d), d, t, report.n);
    report.bounds.push_back(step);
    if (step.given > step.bound) {
      report.first_violation = step;
      return report;
    }
  }
  report.feasible = true;
  return report;
}

TSpreadIdeal kk_witness(const std::vector<BigInt>& f, int t) {
  FeasibilityReport report = kk_check(f, t);
  if (!report.feasible) throw InfeasibleError(std::move(report));
  int n = report.n;
  if (n < 1)
    throw std::domain_error("kk_witness: need at least one variable");

  auto at = [&f](int j) -> BigInt {
    if (j < 0 || j >= static_cast<int>(f.size())) return 0;
    return f[static_cast<std::size_t>(j)];
  };
  std::vector<BigInt> sizes;
  sizes.emplace_back(0);
  for (int j = 1; j <= max_degree(n, t); ++j)
    sizes.push_back(count_tspread(n, j, t) - at(j));

  TlexResult built = lex_ideal_from_part_sizes(n, t, sizes);
  if (!built.ok())
    throw std::logic_error("kk_witness: feasible vector rejected by lex construction");
  return *built.ideal;
}

}  // namespace tspread
