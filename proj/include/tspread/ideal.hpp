#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tspread/lexset.hpp"
#include "tspread/monomial.hpp"

namespace tspread {

// f_t-vector: entry j counts the t-spread monomials of degree j lying
// outside the ideal, for j = 0..d_max; zero-extended beyond its length.
class FtVector {
 public:
  FtVector(int t, std::vector<BigInt> entries);

  int t() const { return t_; }
  const std::vector<BigInt>& entries() const { return entries_; }
  BigInt at(int j) const;  // 0 beyond the stored length
  int length() const { return static_cast<int>(entries_.size()) - 1; }

  std::string str() const;  // "1,8,21,10,0"

  bool operator==(const FtVector& other) const;  // zero-extended, same t

 private:
  int t_;
  std::vector<BigInt> entries_;
};

std::vector<BigInt> parse_ft_entries(const std::string& text);

// Monomial ideal generated by t-spread monomials, kept as its unique set of
// minimal generators, sorted by degree then descending lex.
class TSpreadIdeal {
 public:
  TSpreadIdeal(int n, int t, std::vector<Monomial> generators);

  static TSpreadIdeal parse(std::istream& in);
  static TSpreadIdeal parse_file(const std::string& path);

  int n() const { return n_; }
  int t() const { return t_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int max_generator_degree() const;

  bool contains(const Monomial& u) const;
  MonomialSet graded_part(int j) const;
  FtVector ft_vector() const;

  // Ideal file format: "n=<n> t=<t>" then one generator per line.
  std::string str() const;

  bool operator==(const TSpreadIdeal&) const = default;

 private:
  int n_, t_;
  std::vector<Monomial> gens_;
};

bool is_strongly_stable_ideal(const TSpreadIdeal& I);
bool is_lex_ideal(const TSpreadIdeal& I);

// Drops every monomial strictly divisible by another in the collection.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// Smallest t-spread strongly stable ideal containing the given monomials.
TSpreadIdeal strongly_stable_closure(const std::vector<Monomial>& gens, int n, int t);

struct TlexTrace {
  struct Degree {
    int degree;
    LexSegment lex;          // L_j
    BigInt shadow_in;        // |shad_t(L_{j-1})|
    BigInt new_generators;
    std::string basis;       // description of the spanning set B_j
  };
  std::vector<Degree> degrees;
  std::optional<int> failure_degree;  // first degree with |shad| > |L|
  BigInt failure_shadow;
  BigInt failure_part;
};

struct TlexResult {
  std::optional<TSpreadIdeal> ideal;
  TlexTrace trace;
  bool ok() const { return ideal.has_value(); }
};

// The t-spread lex ideal with the same graded part sizes as I, when the
// per-degree lex segments nest under shadows; otherwise the trace reports
// the first obstructed degree.
TlexResult tlex(const TSpreadIdeal& I);

// Lex ideal whose degree-j part is the lex segment of size part_sizes[j]
// (degree-indexed; entries beyond the vector are 0).  Fails like tlex.
TlexResult lex_ideal_from_part_sizes(int n, int t,
                                     const std::vector<BigInt>& part_sizes);

}  // namespace tspread
