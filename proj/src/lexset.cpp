#include "tspread/lexset.hpp"

#include <algorithm>
#include <stdexcept>

#include "tspread/expansion.hpp"

namespace tspread {

MonomialSet materialize(const LexSegment& seg) {
  return MonomialSet(seg.n, seg.d, seg.t,
                     materialize_range(seg.n, seg.d, seg.t, 0, seg.size));
}

std::vector<Monomial> materialize_range(int n, int d, int t,
                                        const BigInt& from, const BigInt& to) {
  BigInt total = count_tspread(n, d, t);
  if (from < 0 || from > to || to > total)
    throw std::domain_error("segment range exceeds |M_{n,d,t}| = " +
                            total.get_str());
  std::vector<Monomial> out;
  for (BigInt r = from; r < to; ++r)
    out.push_back(monomial_from_complement_count(total - 1 - r, n, d, t));
  return out;
}

BigInt complement_count(const Monomial& u, int n, int t) {
  int d = u.degree();
  if (d < 1) throw std::invalid_argument("complement_count: degree must be >= 1");
  if (!is_t_spread(u, t) || u.max_index() > n)
    throw std::domain_error("complement_count: " + u.str() + " is not in M_{" +
                            std::to_string(n) + ",d," + std::to_string(t) + "}");
  BigInt sum = 0;
  for (int j = 1; j <= d; ++j) {
    BigInt top = BigInt(n) - u.index(d - j) - BigInt(j - 1) * (t - 1);
    sum += binomial(top, static_cast<unsigned long>(j));
  }
  return sum;
}

Monomial monomial_from_complement_count(const BigInt& a, int n, int d, int t) {
  if (d < 1 || t < 1 || n < 1)
    throw std::invalid_argument("monomial_from_complement_count: bad parameters");
  Monomial u(indices_from_complement_count(a, d, t, n));
  if (!is_t_spread(u, t) || u.max_index() > n)
    throw std::logic_error("complement count inversion produced " + u.str());
  return u;
}

MonomialSet shadow(const MonomialSet& L, int tau) {
  if (tau < 1)
    throw std::invalid_argument(
        "shadow: tau must be >= 1 (a 0-shadow contains non-square-free "
        "monomials)");
  if (tau > L.t())
    throw std::invalid_argument("shadow: tau exceeds the set's spread");
  std::vector<Monomial> out;
  std::vector<int> w(static_cast<std::size_t>(L.d()) + 1);
  for (const auto& v : L.members()) {
    const auto& idx = v.indices();
    int d = v.degree();
    // Valid insertion slots: anywhere the new index keeps all gaps >= tau.
    for (int pos = 0; pos <= d; ++pos) {
      int lo = pos == 0 ? 1 : idx[static_cast<std::size_t>(pos - 1)] + tau;
      int hi = pos == d ? L.n() : idx[static_cast<std::size_t>(pos)] - tau;
      for (int i = lo; i <= hi; ++i) {
        w.clear();
        w.insert(w.end(), idx.begin(), idx.begin() + pos);
        w.push_back(i);
        w.insert(w.end(), idx.begin() + pos, idx.end());
        out.emplace_back(w);
      }
    }
  }
  return MonomialSet(L.n(), L.d() + 1, tau, std::move(out));
}

MonomialSet shadow(const MonomialSet& L) { return shadow(L, L.t()); }

MaxIndexProfile max_index_profile(const MonomialSet& L) {
  MaxIndexProfile p;
  p.count.assign(static_cast<std::size_t>(L.n()) + 1, 0);
  p.cumulative.assign(static_cast<std::size_t>(L.n()) + 1, 0);
  for (const auto& u : L.members())
    ++p.count[static_cast<std::size_t>(u.max_index())];
  long long run = 0;
  for (std::size_t i = 0; i < p.count.size(); ++i) {
    run += p.count[i];
    p.cumulative[i] = run;
  }
  return p;
}

BigInt shadow_size_by_formula(const MonomialSet& L) {
  if (!is_strongly_stable_set(L))
    throw std::domain_error("shadow_size_by_formula requires a strongly stable set");
  auto profile = max_index_profile(L);
  BigInt sum = 0;
  for (int i = 1 + (L.d() - 1) * L.t(); i <= L.n() - L.t(); ++i)
    sum += static_cast<long>(profile.at_most(i));
  return sum;
}

BigInt lex_shadow_size(int n, int d, int t, const BigInt& size) {
  BigInt total = count_tspread(n, d, t);
  if (size < 0 || size > total)
    throw std::domain_error("lex_shadow_size: size exceeds |M_{n,d,t}| = " +
                            total.get_str());
  return count_tspread(n, d + 1, t) - t_successor(total - size, d, t, n);
}

bool is_lex_set(const MonomialSet& L) {
  if (L.empty() || L.d() == 0) return true;
  BigInt below = complement_count(L.members().back(), L.n(), L.t());
  return below == count_tspread(L.n(), L.d(), L.t()) - BigInt(L.size());
}

std::vector<Monomial> stable_exchanges(const Monomial& u, int t) {
  std::vector<Monomial> out;
  const auto& idx = u.indices();
  std::vector<int> w;
  for (int p = 0; p < u.degree(); ++p) {
    for (int i = 1; i < idx[static_cast<std::size_t>(p)]; ++i) {
      if (std::binary_search(idx.begin(), idx.end(), i)) continue;
      w.assign(idx.begin(), idx.end());
      w.erase(w.begin() + p);
      w.insert(std::upper_bound(w.begin(), w.end(), i), i);
      Monomial v(w);
      if (is_t_spread(v, t)) out.push_back(std::move(v));
    }
  }
  return out;
}

bool is_strongly_stable_set(const MonomialSet& L) {
  for (const auto& u : L.members())
    for (const auto& v : stable_exchanges(u, L.t()))
      if (!L.contains(v)) return false;
  return true;
}

}  // namespace tspread
