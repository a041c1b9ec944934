#include "tspread/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tspread {

FtVector::FtVector(int t, std::vector<BigInt> entries)
    : t_(t), entries_(std::move(entries)) {
  if (t_ < 1) throw std::invalid_argument("FtVector: spread must be >= 1");
  if (entries_.empty()) throw std::invalid_argument("FtVector: no entries");
  for (const auto& e : entries_)
    if (e < 0) throw std::invalid_argument("FtVector: negative entry");
}

BigInt FtVector::at(int j) const {
  if (j < 0 || j >= static_cast<int>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(j)];
}

std::string FtVector::str() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ",";
    out += e.get_str();
  }
  return out;
}

bool FtVector::operator==(const FtVector& other) const {
  if (t_ != other.t_) return false;
  int len = std::max(length(), other.length());
  for (int j = 0; j <= len; ++j)
    if (at(j) != other.at(j)) return false;
  return true;
}

std::vector<BigInt> parse_ft_entries(const std::string& text) {
  std::vector<BigInt> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos ||
        tok.find_first_not_of("0123456789", b) < e + 1)
      throw std::invalid_argument("bad f-vector entry: '" + tok + "'");
    out.emplace_back(tok.substr(b, e - b + 1));
  }
  if (out.empty()) throw std::invalid_argument("empty f-vector");
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.indices() < b.indices();
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.degree() >= g.degree()) break;
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

TSpreadIdeal::TSpreadIdeal(int n, int t, std::vector<Monomial> generators)
    : n_(n), t_(t) {
  if (n < 1 || t < 1) throw std::invalid_argument("TSpreadIdeal: bad parameters");
  for (const auto& g : generators) {
    if (g.degree() < 1)
      throw std::invalid_argument("TSpreadIdeal: the unit monomial cannot generate");
    if (g.max_index() > n)
      throw std::invalid_argument("TSpreadIdeal: index out of range in " + g.str());
    if (!is_t_spread(g, t))
      throw std::invalid_argument("TSpreadIdeal: " + g.str() + " is not " +
                                  std::to_string(t) + "-spread");
  }
  gens_ = minimalize(std::move(generators));
}

TSpreadIdeal TSpreadIdeal::parse(std::istream& in) {
  std::string line;
  int n = 0, t = 0;
  bool have_header = false;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
        trimmed.push_back(c);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty()) continue;
    if (!have_header) {
      std::istringstream hdr(trimmed);
      std::string kn, kt;
      hdr >> kn >> kt;
      if (kn.rfind("n=", 0) != 0 || kt.rfind("t=", 0) != 0 || !hdr.eof())
        throw std::invalid_argument("ideal file must start with 'n=<int> t=<int>'");
      try {
        n = std::stoi(kn.substr(2));
        t = std::stoi(kt.substr(2));
      } catch (const std::exception&) {
        throw std::invalid_argument("ideal file must start with 'n=<int> t=<int>'");
      }
      have_header = true;
      continue;
    }
    std::istringstream toks(trimmed);
    std::string tok;
    while (toks >> tok) gens.push_back(Monomial::parse(tok));
  }
  if (!have_header)
    throw std::invalid_argument("ideal file is missing the 'n=<int> t=<int>' header");
  return TSpreadIdeal(n, t, std::move(gens));
}

TSpreadIdeal TSpreadIdeal::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return parse(in);
}

std::string TSpreadIdeal::str() const {
  std::string out = "n=" + std::to_string(n_) + " t=" + std::to_string(t_) + "\n";
  for (const auto& g : gens_) out += g.str() + "\n";
  return out;
}

int TSpreadIdeal::max_generator_degree() const {
  return gens_.empty() ? 0 : gens_.back().degree();
}

bool TSpreadIdeal::contains(const Monomial& u) const {
  for (const auto& g : gens_)
    if (g.degree() <= u.degree() && divides(g, u)) return true;
  return false;
}

MonomialSet TSpreadIdeal::graded_part(int j) const {
  if (j < 1 || gens_.empty()) return MonomialSet(n_, std::max(j, 0), t_);
  std::vector<Monomial> part;
  MonomialSet universe = enumerate_tspread(n_, j, t_);
  for (const auto& u : universe.members())
    if (contains(u)) part.push_back(u);
  return MonomialSet(n_, j, t_, std::move(part));
}

FtVector TSpreadIdeal::ft_vector() const {
  std::vector<BigInt> f;
  f.emplace_back(1);
  for (int j = 1; j <= max_degree(n_, t_); ++j)
    f.push_back(count_tspread(n_, j, t_) - BigInt(graded_part(j).size()));
  return FtVector(t_, std::move(f));
}

bool is_strongly_stable_ideal(const TSpreadIdeal& I) {
  for (int j = 1; j <= max_degree(I.n(), I.t()); ++j)
    if (!is_strongly_stable_set(I.graded_part(j))) return false;
  return true;
}

bool is_lex_ideal(const TSpreadIdeal& I) {
  for (int j = 1; j <= max_degree(I.n(), I.t()); ++j)
    if (!is_lex_set(I.graded_part(j))) return false;
  return true;
}

TSpreadIdeal strongly_stable_closure(const std::vector<Monomial>& gens, int n, int t) {
  std::vector<std::vector<Monomial>> by_degree(
      static_cast<std::size_t>(max_degree(n, t)) + 1);
  for (const auto& g : gens) {
    if (g.degree() < 1 || g.max_index() > n || !is_t_spread(g, t))
      throw std::invalid_argument("closure: " + g.str() + " is not in M_{" +
                                  std::to_string(n) + ",d," + std::to_string(t) + "}");
    by_degree[static_cast<std::size_t>(g.degree())].push_back(g);
  }

  std::vector<Monomial> minimal_gens;
  MonomialSet prev(n, 0, t);
  for (int j = 1; j <= max_degree(n, t); ++j) {
    std::set<std::vector<int>> closed;
    std::vector<Monomial> queue;
    std::vector<Monomial> forced =
        j == 1 ? std::vector<Monomial>{} : shadow(prev, t).members();
    for (const auto& u : forced)
      if (closed.insert(u.indices()).second) queue.push_back(u);
    std::size_t forced_count = closed.size();
    for (const auto& u : by_degree[static_cast<std::size_t>(j)])
      if (closed.insert(u.indices()).second) queue.push_back(u);
    while (!queue.empty()) {
      Monomial u = std::move(queue.back());
      queue.pop_back();
      for (auto& v : stable_exchanges(u, t))
        if (closed.insert(v.indices()).second) queue.push_back(std::move(v));
    }
    std::vector<Monomial> part;
    for (const auto& idx : closed) part.emplace_back(idx);
    MonomialSet part_set(n, j, t, part);
    if (closed.size() > forced_count) {
      MonomialSet forced_set(n, j, t, std::move(forced));
      for (const auto& u : part_set.members())
        if (!forced_set.contains(u)) minimal_gens.push_back(u);
    }
    prev = std::move(part_set);
  }
  return TSpreadIdeal(n, t, std::move(minimal_gens));
}

TlexResult lex_ideal_from_part_sizes(int n, int t,
                                     const std::vector<BigInt>& part_sizes) {
  int dmax = max_degree(n, t);
  auto size_at = [&part_sizes](int j) -> BigInt {
    if (j < 0 || j >= static_cast<int>(part_sizes.size())) return 0;
    return part_sizes[static_cast<std::size_t>(j)];
  };
  for (int j = 0; j < static_cast<int>(part_sizes.size()); ++j) {
    BigInt cap = j == 0 ? BigInt(0) : count_tspread(n, j, t);
    if (size_at(j) < 0 || size_at(j) > cap)
      throw std::domain_error("part size at degree " + std::to_string(j) +
                              " exceeds |M_{n," + std::to_string(j) + ",t}| = " +
                              cap.get_str());
  }

  TlexResult result;
  std::vector<Monomial> gens;
  bool active = false;
  for (int j = 1; j <= dmax; ++j) {
    BigInt part = size_at(j);
    BigInt shadow_in = j == 1 ? BigInt(0) : lex_shadow_size(n, j - 1, t, size_at(j - 1));
    if (!active && part == 0 && shadow_in == 0) continue;
    if (shadow_in > part) {
      result.trace.failure_degree = j;
      result.trace.failure_shadow = shadow_in;
      result.trace.failure_part = part;
      return result;
    }
    std::string basis = "L_" + std::to_string(j) + " (" + part.get_str() +
                        (part == 1 ? " monomial)" : " monomials)");
    if (active)
      basis += " contains shad_" + std::to_string(t) + " of degree " +
               std::to_string(j - 1) + " (" + shadow_in.get_str() + ")";
    result.trace.degrees.push_back(
        {j, LexSegment{n, j, t, part}, shadow_in, part - shadow_in, basis});
    for (auto& u : materialize_range(n, j, t, shadow_in, part))
      gens.push_back(std::move(u));
    active = true;
  }
  result.ideal = TSpreadIdeal(n, t, std::move(gens));
  return result;
}

TlexResult tlex(const TSpreadIdeal& I) {
  std::vector<BigInt> sizes;
  sizes.emplace_back(0);
  for (int j = 1; j <= max_degree(I.n(), I.t()); ++j)
    sizes.emplace_back(I.graded_part(j).size());
  return lex_ideal_from_part_sizes(I.n(), I.t(), sizes);
}

}  // namespace tspread
