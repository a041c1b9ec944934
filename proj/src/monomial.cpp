#include "tspread/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tspread {

Monomial::Monomial(std::vector<int> indices) : idx_(std::move(indices)) {
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    if (idx_[k] < 1)
      throw std::invalid_argument("monomial index must be positive");
    if (k > 0 && idx_[k] <= idx_[k - 1])
      throw std::invalid_argument("monomial indices must be strictly increasing");
  }
}

Monomial Monomial::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty monomial");

  std::vector<int> idx;
  auto push = [&idx, &text](const std::string& tok) {
    if (tok.empty() || tok.size() > 9 ||
        tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad monomial syntax: " + text);
    idx.push_back(std::stoi(tok));
  };

  if (s[0] == 'x' || s[0] == 'X') {
    std::string tok;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] == 'x' || s[i] == 'X') {
        push(tok);
        tok.clear();
      } else {
        tok.push_back(s[i]);
      }
    }
    push(tok);
  } else {
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) push(tok);
  }
  return Monomial(std::move(idx));
}

std::string Monomial::str() const {
  if (idx_.empty()) return "1";
  std::string out;
  for (int i : idx_) {
    out.push_back('x');
    out += std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& u) {
  return os << u.str();
}

bool is_t_spread(const Monomial& u, int t) {
  if (t < 0) throw std::invalid_argument("spread must be nonnegative");
  const auto& idx = u.indices();
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] - idx[k - 1] < t) return false;
  return true;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("lex_compare requires equal degrees");
  const auto& a = u.indices();
  const auto& b = v.indices();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k])
      return a[k] < b[k] ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool lex_greater(const Monomial& u, const Monomial& v) {
  return lex_compare(u, v) == std::strong_ordering::greater;
}

bool divides(const Monomial& u, const Monomial& v) {
  return std::includes(v.indices().begin(), v.indices().end(),
                       u.indices().begin(), u.indices().end());
}

BigInt count_tspread(int n, int d, int t) {
  if (n < 0 || d < 0) throw std::invalid_argument("count_tspread: bad parameters");
  if (t < 1) throw std::invalid_argument("count_tspread: spread must be >= 1");
  if (d == 0) return 1;
  return binomial(BigInt(n) - BigInt(d - 1) * (t - 1), static_cast<unsigned long>(d));
}

int max_degree(int n, int t) {
  if (t < 1) throw std::invalid_argument("max_degree: spread must be >= 1");
  if (n < 1) return 0;
  return 1 + (n - 1) / t;
}

MonomialSet::MonomialSet(int n, int d, int t) : n_(n), d_(d), t_(t) {
  if (n < 0 || d < 0 || t < 1)
    throw std::invalid_argument("MonomialSet: bad parameters");
}

MonomialSet::MonomialSet(int n, int d, int t, std::vector<Monomial> members)
    : MonomialSet(n, d, t) {
  for (const auto& u : members) {
    if (u.degree() != d)
      throw std::invalid_argument("MonomialSet: degree mismatch for " + u.str());
    if (u.degree() > 0 && u.max_index() > n)
      throw std::invalid_argument("MonomialSet: index out of range in " + u.str());
    if (!is_t_spread(u, t))
      throw std::invalid_argument("MonomialSet: " + u.str() + " is not " +
                                  std::to_string(t) + "-spread");
  }
  // Descending lex equals ascending order of index sequences.
  std::sort(members.begin(), members.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.indices() < b.indices();
            });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool MonomialSet::contains(const Monomial& u) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), u,
                             [](const Monomial& a, const Monomial& b) {
                               return a.indices() < b.indices();
                             });
  return it != members_.end() && *it == u;
}

MonomialSet enumerate_tspread(int n, int d, int t) {
  if (n < 1 || d < 1 || t < 1)
    throw std::invalid_argument("enumerate_tspread: bad parameters");
  std::vector<Monomial> out;
  std::vector<int> cur(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == d) {
      out.emplace_back(cur);
      return;
    }
    // Highest start still leaving room for the remaining indices.
    int hi = n - (d - 1 - pos) * t;
    for (int i = lo; i <= hi; ++i) {
      cur[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + t);
    }
  };
  rec(rec, 0, 1);
  return MonomialSet(n, d, t, std::move(out));
}

}  // namespace tspread
