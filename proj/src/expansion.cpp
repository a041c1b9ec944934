#include "tspread/expansion.hpp"

#include <stdexcept>

#include "tspread/monomial.hpp"

namespace tspread {

BigInt MacaulayExpansion::value() const {
  BigInt sum = 0;
  for (const auto& term : terms_)
    sum += binomial(term.top, static_cast<unsigned long>(term.bottom));
  return sum;
}

std::string MacaulayExpansion::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) out += "+";
    out += "C(" + term.top.get_str() + "," + std::to_string(term.bottom) + ")";
  }
  return out;
}

MacaulayExpansion macaulay_expand(const BigInt& a, int d) {
  if (a < 0) throw std::invalid_argument("macaulay_expand: negative value");
  if (d < 1) throw std::invalid_argument("macaulay_expand: degree must be >= 1");
  std::vector<ExpansionTerm> terms;
  BigInt rem = a;
  for (int j = d; j >= 1 && rem > 0; --j) {
    auto k = static_cast<unsigned long>(j);
    // Largest m with C(m, j) <= rem.
    BigInt lo = j, hi = j + 1;
    while (binomial(hi, k) <= rem) {
      lo = hi;
      hi *= 2;
    }
    while (lo + 1 < hi) {
      BigInt mid = (lo + hi) / 2;
      if (binomial(mid, k) <= rem)
        lo = mid;
      else
        hi = mid;
    }
    rem -= binomial(lo, k);
    terms.push_back({lo, j});
  }
  return MacaulayExpansion(d, std::move(terms));
}

BigInt classic_successor(const BigInt& a, int d) {
  MacaulayExpansion e = macaulay_expand(a, d);
  BigInt sum = 0;
  for (const auto& term : e.terms())
    sum += binomial(term.top, static_cast<unsigned long>(term.bottom) + 1);
  return sum;
}

std::vector<int> indices_from_complement_count(const BigInt& a, int d, int t, int n) {
  BigInt total = count_tspread(n, d, t);
  if (a < 0 || a >= total)
    throw std::domain_error("complement count out of range: need 0 <= a < " +
                            total.get_str());
  // Rows of the expansion, with a_j = j - 1 below the lowest position r.
  std::vector<long> row(static_cast<std::size_t>(d) + 1);
  for (int j = 1; j <= d; ++j) row[static_cast<std::size_t>(j)] = j - 1;
  MacaulayExpansion e = macaulay_expand(a, d);
  for (const auto& term : e.terms())
    row[static_cast<std::size_t>(term.bottom)] = term.top.get_si();

  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) {
    long i = n - row[static_cast<std::size_t>(d - k + 1)] -
             static_cast<long>(d - k) * (t - 1);
    idx[static_cast<std::size_t>(k - 1)] = static_cast<int>(i);
  }
  return idx;
}

BigInt t_successor(const BigInt& a, int d, int t, int n) {
  if (d < 1 || t < 1 || n < 0)
    throw std::invalid_argument("t_successor: bad parameters");
  BigInt total = count_tspread(n, d, t);
  if (a < 0 || a > total)
    throw std::domain_error("a exceeds |M_{" + std::to_string(n) + "," +
                            std::to_string(d) + "," + std::to_string(t) + "}|");
  if (a == 0) return 0;
  BigInt next_total = count_tspread(n, d + 1, t);
  if (a == total) return next_total;

  // a < |M| here, so the lex set L of size |M| - a is nonempty with lex-least
  // member u.  |shad_t(L)| = sum over i in [1+(d-1)t, n-t] of m_{<=i}(L),
  // where m_{<=i}(L) = |M_{i,d,t}| - #{v in M_{i,d,t} : v <lex u}; each part
  // telescopes over i into a single binomial via prefix sums.
  auto idx = indices_from_complement_count(a, d, t, n);
  long lo = 1 + static_cast<long>(d - 1) * t;
  long hi = n - t;
  BigInt shadow_size = 0;
  if (lo <= hi) {
    long alpha = static_cast<long>(d - 1) * (t - 1);
    shadow_size = binomial_prefix_sum(hi - alpha, static_cast<unsigned long>(d)) -
                  binomial_prefix_sum(lo - 1 - alpha, static_cast<unsigned long>(d));
    for (int k = 1; k <= d; ++k) {
      long beta = idx[static_cast<std::size_t>(k - 1)] +
                  static_cast<long>(d - k) * (t - 1);
      auto e = static_cast<unsigned long>(d - k + 1);
      shadow_size -= binomial_prefix_sum(hi - beta, e) -
                     binomial_prefix_sum(lo - 1 - beta, e);
    }
  }
  return next_total - shadow_size;
}

}  // namespace tspread
