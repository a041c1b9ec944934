#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tspread/expansion.hpp"
#include "tspread/ideal.hpp"
#include "tspread/kk.hpp"
#include "tspread/lexset.hpp"
#include "tspread/monomial.hpp"
#include "tspread/oracle.hpp"

using namespace tspread;

namespace {

BigInt parse_count(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(what) + " must be a nonnegative integer");
  return BigInt(text);
}

nlohmann::json big_json(const BigInt& v) {
  static const BigInt cap("9007199254740992");
  if (v >= -cap && v <= cap)
    return nlohmann::json(static_cast<std::int64_t>(v.get_si()));
  return nlohmann::json(v.get_str());
}

nlohmann::json bound_json(const FeasibilityBound& b) {
  nlohmann::json j;
  j["degree"] = b.degree;
  j["given"] = big_json(b.given);
  j["bound"] = big_json(b.bound);
  return j;
}

int run_expand(const std::string& a_str, int d) {
  std::cout << macaulay_expand(parse_count(a_str, "a"), d).str() << "\n";
  return 0;
}

int run_succ(const std::string& a_str, int d, bool spread_given, int t, int n) {
  BigInt a = parse_count(a_str, "a");
  std::cout << (spread_given ? t_successor(a, d, t, n) : classic_successor(a, d)).get_str()
            << "\n";
  return 0;
}

int run_enum(int n, int d, int t) {
  if (n < 1 || d < 1 || t < 1)
    throw std::invalid_argument("enum needs n, d, t all >= 1");
  MonomialSet universe = enumerate_tspread(n, d, t);
  for (const auto& u : universe.members()) std::cout << u.str() << "\n";
  return 0;
}

int run_shadow(const std::string& path, bool tau_given, int tau) {
  TSpreadIdeal input = TSpreadIdeal::parse_file(path);
  if (!tau_given) tau = input.t();
  if (input.generators().empty()) {
    std::cout << "n=" << input.n() << " t=" << tau << "\n";
    return 0;
  }
  int d = input.generators().front().degree();
  for (const auto& g : input.generators())
    if (g.degree() != d)
      throw std::invalid_argument("shadow input must hold monomials of one degree");
  MonomialSet L(input.n(), d, input.t(), input.generators());
  MonomialSet S = shadow(L, tau);
  std::cout << "n=" << S.n() << " t=" << S.t() << "\n";
  for (const auto& u : S.members()) std::cout << u.str() << "\n";
  return 0;
}

void print_trace(const TlexTrace& trace) {
  for (const auto& step : trace.degrees)
    std::cout << "# degree " << step.degree << ": part " << step.lex.size.get_str()
              << ", shadow carries " << step.shadow_in.get_str()
              << ", new generators " << step.new_generators.get_str() << "\n";
}

int run_tlex(const std::string& path, bool trace) {
  TSpreadIdeal input = TSpreadIdeal::parse_file(path);
  TlexResult result = tlex(input);
  if (trace) print_trace(result.trace);
  if (!result.ok()) {
    if (trace)
      std::cout << "# degree " << *result.trace.failure_degree << ": part "
                << result.trace.failure_part.get_str() << ", shadow needs "
                << result.trace.failure_shadow.get_str() << "\n";
    std::cout << "no t-lex ideal: obstruction at degree "
              << *result.trace.failure_degree << "\n";
    return 3;
  }
  std::cout << result.ideal->str();
  return 0;
}

int run_fvec(const std::string& path) {
  std::cout << TSpreadIdeal::parse_file(path).ft_vector().str() << "\n";
  return 0;
}

int run_check(const std::string& path) {
  TSpreadIdeal input = TSpreadIdeal::parse_file(path);
  std::cout << "strongly-stable: " << (is_strongly_stable_ideal(input) ? "yes" : "no")
            << ", lex: " << (is_lex_ideal(input) ? "yes" : "no") << "\n";
  return 0;
}

int run_kk(const std::string& f_str, int t, const std::string& witness_path,
           bool json_mode) {
  std::vector<BigInt> f = parse_ft_entries(f_str);
  FeasibilityReport report = kk_check(f, t);
  if (report.feasible && !witness_path.empty()) {
    TSpreadIdeal witness = kk_witness(f, t);
    std::ofstream out(witness_path);
    if (!out) throw std::invalid_argument("cannot write " + witness_path);
    out << witness.str();
  }
  if (json_mode) {
    nlohmann::json j;
    j["feasible"] = report.feasible;
    j["n"] = report.n;
    j["t"] = report.t;
    j["bounds"] = nlohmann::json::array();
    for (const auto& b : report.bounds) j["bounds"].push_back(bound_json(b));
    j["violations"] = nlohmann::json::array();
    if (report.first_violation)
      j["violations"].push_back(bound_json(*report.first_violation));
    std::cout << j.dump() << "\n";
  } else if (report.feasible) {
    std::cout << "feasible\n";
  } else if (report.first_violation->degree == 0) {
    std::cout << "infeasible at d=0: f(0) must be 1\n";
  } else {
    std::cout << "infeasible at d=" << report.first_violation->degree << "\n";
  }
  return report.feasible ? 0 : 3;
}

int run_verify(int max_n) {
  long long cases = 0;
  for (int d = 1; d <= 4; ++d)
    for (BigInt a = 0; a <= 400; ++a, ++cases)
      if (macaulay_expand(a, d).value() != a) {
        std::cerr << "mismatch: expansion of " << a.get_str() << " in degree " << d
                  << " does not evaluate back\n";
        return 3;
      }
  for (int t = 1; t <= 3; ++t)
    for (int d = 1; d <= 3; ++d)
      for (int n = 1; n <= max_n; ++n) {
        MonomialSet universe = enumerate_tspread(n, d, t);
        BigInt total = count_tspread(n, d, t);
        if (total != universe.size()) {
          std::cerr << "mismatch: |M_{" << n << "," << d << "," << t
                    << "}| formula disagrees with enumeration\n";
          return 3;
        }
        BigInt rank = total;
        for (const auto& u : universe.members()) {
          --rank;
          ++cases;
          if (complement_count(u, n, t) != brute_complement_count(u, n, t) ||
              complement_count(u, n, t) != rank ||
              !(monomial_from_complement_count(rank, n, d, t) == u)) {
            std::cerr << "mismatch: position of " << u.str() << " in M_{" << n << ","
                      << d << "," << t << "}\n";
            return 3;
          }
        }
        for (BigInt s = 0; s <= total; ++s) {
          ++cases;
          MonomialSet L = materialize(LexSegment{n, d, t, s});
          if (!is_lex_set(L) || !brute_is_lex_set(L)) {
            std::cerr << "mismatch: lex segment of size " << s.get_str() << " in M_{"
                      << n << "," << d << "," << t << "} fails the lex test\n";
            return 3;
          }
          MonomialSet direct = shadow(L, t);
          MonomialSet brute = brute_shadow(L, t);
          if (!(direct == brute)) {
            std::cerr << "mismatch: shadow of the lex segment of size " << s.get_str()
                      << " in M_{" << n << "," << d << "," << t << "}\n";
            return 3;
          }
          BigInt via_bound = t_successor(total - s, d, t, n);
          BigInt via_brute = count_tspread(n, d + 1, t) - BigInt(brute.size());
          if (via_bound != via_brute) {
            std::cerr << "mismatch: successor bound for complement "
                      << BigInt(total - s).get_str() << " in M_{" << n << "," << d
                      << "," << t << "}\n";
            return 3;
          }
        }
      }
  std::cout << "ok: " << cases << " cases agree (n <= " << max_n << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of t-spread monomials"};
  app.require_subcommand(1);
  int code = 0;

  auto* expand = app.add_subcommand("expand", "Macaulay expansion of a in degree d");
  std::string expand_a;
  int expand_d = 0;
  expand->add_option("a", expand_a, "nonnegative integer")->required();
  expand->add_option("d", expand_d, "degree")->required();
  expand->callback([&] { code = run_expand(expand_a, expand_d); });

  auto* succ = app.add_subcommand(
      "succ", "successor bound; classic without --t, t-spread with --t and --n");
  std::string succ_a;
  int succ_d = 0, succ_t = 0, succ_n = 0;
  succ->add_option("a", succ_a, "nonnegative integer")->required();
  succ->add_option("d", succ_d, "degree")->required();
  auto* succ_t_opt = succ->add_option("--t", succ_t, "spread");
  auto* succ_n_opt = succ->add_option("--n", succ_n, "number of variables");
  succ_t_opt->needs(succ_n_opt);
  succ_n_opt->needs(succ_t_opt);
  succ->callback([&] {
    code = run_succ(succ_a, succ_d, succ_t_opt->count() > 0, succ_t, succ_n);
  });

  auto* enum_cmd = app.add_subcommand("enum", "list M_{n,d,t} in descending order");
  int enum_n = 0, enum_d = 0, enum_t = 0;
  enum_cmd->add_option("n", enum_n, "number of variables")->required();
  enum_cmd->add_option("d", enum_d, "degree")->required();
  enum_cmd->add_option("t", enum_t, "spread")->required();
  enum_cmd->callback([&] { code = run_enum(enum_n, enum_d, enum_t); });

  auto* shadow_cmd = app.add_subcommand("shadow", "shadow of the set in a file");
  std::string shadow_file;
  int shadow_tau = 0;
  shadow_cmd->add_option("file", shadow_file, "ideal-format file, one degree")
      ->required();
  auto* tau_opt = shadow_cmd->add_option("--tau", shadow_tau, "spread of the shadow");
  shadow_cmd->callback(
      [&] { code = run_shadow(shadow_file, tau_opt->count() > 0, shadow_tau); });

  auto* tlex_cmd = app.add_subcommand("tlex", "t-spread lex ideal with the same f_t-vector");
  std::string tlex_file;
  bool tlex_trace = false;
  tlex_cmd->add_option("file", tlex_file, "ideal-format file")->required();
  tlex_cmd->add_flag("--trace", tlex_trace, "explain each degree as # comments");
  tlex_cmd->callback([&] { code = run_tlex(tlex_file, tlex_trace); });

  auto* fvec_cmd = app.add_subcommand("fvec", "f_t-vector of the ideal in a file");
  std::string fvec_file;
  fvec_cmd->add_option("file", fvec_file, "ideal-format file")->required();
  fvec_cmd->callback([&] { code = run_fvec(fvec_file); });

  auto* check_cmd = app.add_subcommand("check", "strong stability and lex tests");
  std::string check_file;
  check_cmd->add_option("file", check_file, "ideal-format file")->required();
  check_cmd->callback([&] { code = run_check(check_file); });

  auto* kk_cmd = app.add_subcommand("kk", "feasibility of an f_t-vector");
  std::string kk_f, kk_witness_path;
  int kk_t = 0;
  bool kk_json = false;
  kk_cmd->add_option("f", kk_f, "comma-separated entries, degree 0 first")->required();
  kk_cmd->add_option("--t", kk_t, "spread")->required();
  kk_cmd->add_option("--witness", kk_witness_path, "write the witness ideal here");
  kk_cmd->add_flag("--json", kk_json, "machine-readable report");
  kk_cmd->callback([&] { code = run_kk(kk_f, kk_t, kk_witness_path, kk_json); });

  auto* verify_cmd = app.add_subcommand("verify", "cross-check formulas against enumeration");
  int verify_max_n = env_max_n(7);
  verify_cmd->add_option("--max-n", verify_max_n, "largest ambient n to sweep");
  verify_cmd->callback([&] { code = run_verify(verify_max_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
