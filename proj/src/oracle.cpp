#include "tspread/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "tspread/lexset.hpp"

namespace tspread {

MonomialSet brute_shadow(const MonomialSet& L, int tau) {
  if (tau < 1 || tau > L.t())
    throw std::invalid_argument("brute_shadow: spread must be in [1, t]");
  std::vector<Monomial> out;
  MonomialSet next = enumerate_tspread(L.n(), L.d() + 1, tau);
  for (const auto& w : next.members()) {
    bool hit = false;
    for (int p = 0; p <= L.d() && !hit; ++p) {
      std::vector<int> sub = w.indices();
      sub.erase(sub.begin() + p);
      hit = L.contains(Monomial(sub));
    }
    if (hit) out.push_back(w);
  }
  return MonomialSet(L.n(), L.d() + 1, tau, std::move(out));
}

MonomialSet brute_shadow(const MonomialSet& L) { return brute_shadow(L, L.t()); }

BigInt brute_complement_count(const Monomial& u, int n, int t) {
  if (!is_t_spread(u, t) || u.max_index() > n)
    throw std::domain_error("brute_complement_count: " + u.str() + " is not in M_{" +
                            std::to_string(n) + "," + std::to_string(u.degree()) +
                            "," + std::to_string(t) + "}");
  BigInt below = 0;
  MonomialSet universe = enumerate_tspread(n, u.degree(), t);
  for (const auto& v : universe.members())
    if (lex_greater(u, v)) ++below;
  return below;
}

bool brute_is_lex_set(const MonomialSet& L) {
  if (L.d() == 0) return true;
  const auto all = enumerate_tspread(L.n(), L.d(), L.t()).members();
  if (L.size() > all.size()) return false;
  return std::equal(L.members().begin(), L.members().end(), all.begin());
}

namespace {

void stable_dfs(const std::vector<Monomial>& universe,
                const std::vector<std::vector<std::size_t>>& parents,
                const std::vector<char>& forced, std::size_t pos,
                std::vector<char>& chosen, std::vector<Monomial>& picked, int n,
                int d, int t, const std::function<void(const MonomialSet&)>& fn) {
  if (pos == universe.size()) {
    fn(MonomialSet(n, d, t, picked));
    return;
  }
  bool closable = true;
  for (std::size_t p : parents[pos])
    if (!chosen[p]) {
      closable = false;
      break;
    }
  if (!forced[pos]) stable_dfs(universe, parents, forced, pos + 1, chosen, picked, n, d, t, fn);
  if (closable) {
    chosen[pos] = 1;
    picked.push_back(universe[pos]);
    stable_dfs(universe, parents, forced, pos + 1, chosen, picked, n, d, t, fn);
    picked.pop_back();
    chosen[pos] = 0;
  } else if (forced[pos]) {
    throw std::logic_error("stable_dfs: forced set is not strongly stable");
  }
}

// Enumerates strongly stable subsets of M_{n,d,t} that contain must_have.
void for_each_stable_superset(int n, int d, int t, long long guard,
                              const MonomialSet& must_have,
                              const std::function<void(const MonomialSet&)>& fn) {
  const auto universe = enumerate_tspread(n, d, t).members();
  if (static_cast<long long>(universe.size()) > guard)
    throw std::domain_error("size guard exceeded");
  std::vector<std::vector<std::size_t>> parents(universe.size());
  for (std::size_t k = 0; k < universe.size(); ++k)
    for (const auto& v : stable_exchanges(universe[k], t)) {
      auto it = std::lower_bound(universe.begin(), universe.end(), v,
                                 [](const Monomial& a, const Monomial& b) {
                                   return a.indices() < b.indices();
                                 });
      parents[k].push_back(static_cast<std::size_t>(it - universe.begin()));
    }
  std::vector<char> forced(universe.size(), 0);
  for (std::size_t k = 0; k < universe.size(); ++k)
    if (must_have.contains(universe[k])) forced[k] = 1;
  std::vector<char> chosen(universe.size(), 0);
  std::vector<Monomial> picked;
  stable_dfs(universe, parents, forced, 0, chosen, picked, n, d, t, fn);
}

void kk_chain_dfs(int n, int t, int j, const MonomialSet& prev,
                  std::vector<BigInt>& sizes,
                  std::set<std::vector<BigInt>>& seen) {
  if (j > max_degree(n, t)) {
    std::vector<BigInt> f;
    f.emplace_back(1);
    for (int i = 1; i <= max_degree(n, t); ++i)
      f.push_back(count_tspread(n, i, t) - sizes[static_cast<std::size_t>(i)]);
    seen.insert(std::move(f));
    return;
  }
  MonomialSet forced = brute_shadow(prev, t);
  for_each_stable_superset(n, j, t, 1 << 20, forced,
                           [&](const MonomialSet& part) {
                             sizes.push_back(BigInt(part.size()));
                             kk_chain_dfs(n, t, j + 1, part, sizes, seen);
                             sizes.pop_back();
                           });
}

}  // namespace

void for_each_strongly_stable_set(int n, int d, int t, long long guard,
                                  const std::function<void(const MonomialSet&)>& fn) {
  for_each_stable_superset(n, d, t, guard, MonomialSet(n, d, t), fn);
}

std::vector<MonomialSet> enumerate_strongly_stable_sets(int n, int d, int t,
                                                        long long guard) {
  std::vector<MonomialSet> out;
  for_each_strongly_stable_set(n, d, t, guard,
                               [&out](const MonomialSet& s) { out.push_back(s); });
  return out;
}

std::vector<FtVector> brute_kk_universe(int n, int t) {
  int max_n = env_max_n(6);
  if (n < 1 || n > max_n || t < 1 || t > 2)
    throw std::domain_error("size guard exceeded");
  std::set<std::vector<BigInt>> seen;
  std::vector<BigInt> sizes{BigInt(0)};
  kk_chain_dfs(n, t, 1, MonomialSet(n, 0, t), sizes, seen);
  std::vector<FtVector> out;
  out.reserve(seen.size());
  for (const auto& f : seen) out.emplace_back(t, f);
  return out;
}

int env_max_n(int fallback) {
  const char* raw = std::getenv("TSPREAD_MAX_N");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 64) return fallback;
  return static_cast<int>(v);
}

}  // namespace tspread
