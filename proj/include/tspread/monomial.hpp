#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "tspread/binomial.hpp"

namespace tspread {

// Square-free monomial x_{i_1} x_{i_2} ... x_{i_d}, stored as its strictly
// increasing sequence of 1-based variable indices.  The empty product (the
// monomial 1) is representable but never appears inside a MonomialSet.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> indices);

  // Accepts "x1x3x5" and "1,3,5".
  static Monomial parse(const std::string& text);

  int degree() const { return static_cast<int>(idx_.size()); }
  const std::vector<int>& indices() const { return idx_; }
  int index(int k) const { return idx_[static_cast<std::size_t>(k)]; }
  int min_index() const { return idx_.front(); }
  int max_index() const { return idx_.back(); }

  std::string str() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> idx_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& u);

// True iff every gap between consecutive indices is at least t.
bool is_t_spread(const Monomial& u, int t);

// Lexicographic order on monomials of equal degree: at the first position
// where the index sequences differ, the smaller index wins.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);
bool lex_greater(const Monomial& u, const Monomial& v);

// Square-free divisibility: indices(u) a subset of indices(v).
bool divides(const Monomial& u, const Monomial& v);

// |M_{n,d,t}| = C(n - (d-1)(t-1), d).
BigInt count_tspread(int n, int d, int t);

// Largest degree d with M_{n,d,t} nonempty: 1 + floor((n-1)/t).
int max_degree(int n, int t);

// A finite subset of M_{n,d,t}, stored deduplicated in descending
// lexicographic order (largest element first).
class MonomialSet {
 public:
  MonomialSet(int n, int d, int t);
  MonomialSet(int n, int d, int t, std::vector<Monomial> members);

  int n() const { return n_; }
  int d() const { return d_; }
  int t() const { return t_; }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Monomial>& members() const { return members_; }
  const Monomial& operator[](std::size_t i) const { return members_[i]; }
  bool contains(const Monomial& u) const;

  bool operator==(const MonomialSet&) const = default;

 private:
  int n_, d_, t_;
  std::vector<Monomial> members_;
};

// All of M_{n,d,t} in descending lex order.
MonomialSet enumerate_tspread(int n, int d, int t);

}  // namespace tspread
