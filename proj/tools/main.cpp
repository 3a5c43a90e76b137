// undecim: complete solution of x^2 + 11^(2k) = y^n from the command line.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 internal invariant
// violation. Results go to stdout, diagnostics to stderr.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "undecim/certificate.hpp"
#include "undecim/errors.hpp"
#include "undecim/lucas.hpp"
#include "undecim/ntheory.hpp"
#include "undecim/oracle.hpp"
#include "undecim/pell.hpp"
#include "undecim/primdiv.hpp"
#include "undecim/solver.hpp"

namespace {

using undecim::BigInt;

// Every numeric flag is arbitrary-precision decimal; fixed-width values
// are range-checked after parsing.
BigInt parse_big(const std::string& s, const char* what) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw std::domain_error(std::string(what) + ": not an integer: '" + s +
                            "'");
  }
}

long parse_long(const std::string& s, const char* what) {
  const BigInt v = parse_big(s, what);
  if (!v.fits_slong_p()) {
    throw std::domain_error(std::string(what) + ": out of range: " + s);
  }
  return v.get_si();
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  const BigInt v = parse_big(s, what);
  if (v < 0 || !v.fits_ulong_p()) {
    throw std::domain_error(std::string(what) + ": out of range: " + s);
  }
  return v.get_ui();
}

std::string tuple_line(const undecim::solver::SolutionTuple& t) {
  std::ostringstream os;
  os << t.x << " " << t.y << " " << t.k << " " << t.n;
  return os.str();
}

nlohmann::json tuple_json(const undecim::solver::SolutionTuple& t) {
  nlohmann::json j;
  j["x"] = t.x.get_str();
  j["y"] = t.y.get_str();
  j["k"] = t.k;
  j["n"] = t.n;
  return j;
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_solve(const std::string& lambda_max_s, bool json) {
  const long lambda_max = parse_long(lambda_max_s, "--lambda-max");
  const auto res = undecim::solver::solve_all(lambda_max);
  if (json) {
    nlohmann::json family = nlohmann::json::array();
    for (std::size_t i = 0; i < res.family.size(); ++i) {
      nlohmann::json j = tuple_json(res.family[i]);
      j["lambda"] = static_cast<long>(i);
      family.push_back(std::move(j));
    }
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& c : res.certs) {
      certs.push_back(undecim::solver::to_json(c));
    }
    nlohmann::json out;
    out["family"] = std::move(family);
    out["certificates"] = std::move(certs);
    emit_json(out);
  } else {
    for (const auto& t : res.family) std::cout << tuple_line(t) << "\n";
    for (const auto& c : res.certs) std::cout << undecim::solver::to_text(c);
  }
  return 0;
}

int run_verify(const std::string& xs, const std::string& ys,
               const std::string& ks, const std::string& ns, bool json) {
  const undecim::solver::SolutionTuple t{parse_big(xs, "x"), parse_big(ys, "y"),
                                         parse_long(ks, "k"),
                                         parse_long(ns, "n")};
  const bool ok = undecim::solver::verify_solution(t);
  if (json) {
    nlohmann::json j;
    j["valid"] = ok;
    emit_json(j);
  } else {
    std::cout << (ok ? "valid" : "invalid") << "\n";
  }
  return 0;
}

int run_search(const std::string& x_max_s, const std::string& k_max_s,
               const std::string& n_max_s, const std::string& prime_s,
               const std::string& jobs_s, bool json) {
  const BigInt x_max = parse_big(x_max_s, "--x-max");
  const long k_max = parse_long(k_max_s, "--k-max");
  const long n_max = parse_long(n_max_s, "--n-max");
  const BigInt prime = parse_big(prime_s, "--prime");
  const long jobs = parse_long(jobs_s, "--jobs");
  if (jobs < 1 || jobs > 4096) {
    throw std::domain_error("--jobs: must be in [1, 4096]");
  }
  const auto sols = undecim::oracle::brute_force_search(
      x_max, k_max, n_max, prime, static_cast<unsigned>(jobs));
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : sols) arr.push_back(tuple_json(t));
    nlohmann::json out;
    out["solutions"] = std::move(arr);
    emit_json(out);
  } else {
    for (const auto& t : sols) std::cout << tuple_line(t) << "\n";
  }
  return 0;
}

nlohmann::json quad_json(const undecim::pell::QuadPair& p) {
  nlohmann::json j;
  j["x"] = p.x.get_str();
  j["y"] = p.y.get_str();
  return j;
}

int run_pell(const std::string& d_s, const std::string& n_s,
             const std::string& count_s, bool json) {
  const BigInt d = parse_big(d_s, "--d");
  const BigInt n = parse_big(n_s, "--n");
  const long count = parse_long(count_s, "--count");
  if (count < 1) throw std::domain_error("--count: must be >= 1");
  const auto fu = undecim::pell::fundamental_unit(d);
  // Classes are orbits under the norm +1 unit; stepping by a norm -1
  // fundamental unit would leave the solution set of x^2 - d*y^2 = n.
  const auto step =
      fu.norm == 1 ? fu.u : undecim::pell::mul(fu.u, fu.u, d);
  const auto bases =
      undecim::pell::base_solutions(undecim::pell::PellProblem(d, n));
  if (json) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& b : bases) {
      nlohmann::json cls;
      cls["base"] = quad_json(b);
      nlohmann::json orb = nlohmann::json::array();
      for (const auto& p : undecim::pell::orbit(
               b, step, d, static_cast<std::size_t>(count))) {
        orb.push_back(quad_json(p));
      }
      cls["orbit"] = std::move(orb);
      classes.push_back(std::move(cls));
    }
    nlohmann::json out;
    out["fundamental_unit"] = quad_json(fu.u);
    out["fundamental_unit"]["norm"] = fu.norm;
    out["classes"] = std::move(classes);
    emit_json(out);
  } else {
    std::cout << "fundamental unit: " << fu.u << " norm " << fu.norm << "\n";
    if (bases.empty()) std::cout << "no solutions\n";
    for (const auto& b : bases) {
      std::cout << "class " << b << ":";
      for (const auto& p : undecim::pell::orbit(
               b, step, d, static_cast<std::size_t>(count))) {
        std::cout << " " << p;
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_lucas(const std::string& p_s, const std::string& q_s,
              const std::string& t0_s, const std::string& tm1_s,
              const std::string& term_s, const std::string& mod_s,
              const std::string& zeros_s, bool has_term, bool has_mod,
              bool has_zeros, bool json) {
  if (int(has_term) + int(has_mod) + int(has_zeros) != 1) {
    throw std::domain_error(
        "lucas: exactly one of --term, --mod, --zeros is required");
  }
  const undecim::lucas::BinaryRecurrence seq{
      parse_big(p_s, "--p"), parse_big(q_s, "--q"),
      parse_big(tm1_s, "--tm1"), parse_big(t0_s, "--t0")};
  if (has_term) {
    const long r = parse_long(term_s, "--term");
    const BigInt v = undecim::lucas::term(seq, r);
    if (json) {
      nlohmann::json j;
      j["r"] = r;
      j["term"] = v.get_str();
      emit_json(j);
    } else {
      std::cout << v << "\n";
    }
  } else if (has_mod) {
    // Windows are listed from index -1, matching the seed pair (t_-1, t_0).
    const std::uint64_t m = parse_u64(mod_s, "--mod");
    const auto win = undecim::lucas::residues_mod(seq, m, -1);
    if (json) {
      nlohmann::json j;
      j["period"] = win.period;
      j["r_start"] = -1;
      j["residues"] = win.residues;
      emit_json(j);
    } else {
      std::cout << "period: " << win.period << "\nresidues:";
      for (const auto r : win.residues) std::cout << " " << r;
      std::cout << "\n";
    }
  } else {
    const std::uint64_t m = parse_u64(zeros_s, "--zeros");
    const auto zs = undecim::lucas::zero_classes_mod(seq, m);
    const auto win = undecim::lucas::residues_mod(seq, m, 0);
    if (json) {
      nlohmann::json j;
      j["period"] = win.period;
      j["zero_classes"] = std::vector<std::uint64_t>(zs.begin(), zs.end());
      emit_json(j);
    } else {
      std::cout << "period: " << win.period << "\nzero classes:";
      for (const auto c : zs) std::cout << " " << c;
      std::cout << "\n";
    }
  }
  return 0;
}

void print_verdict(const undecim::primdiv::ScreenVerdict& v, bool json,
                   const std::vector<undecim::primdiv::DirectCheck>* checks) {
  if (json) {
    nlohmann::json j;
    j["excluded"] = v.excluded;
    if (v.reason) {
      j["reason"] = undecim::primdiv::reason_token(*v.reason);
    } else {
      j["reason"] = nullptr;
    }
    j["detail"] = v.detail;
    if (checks) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : *checks) {
        nlohmann::json e;
        e["m"] = c.m;
        e["value"] = c.value.get_str();
        if (c.power_exponent) {
          e["power_exponent"] = *c.power_exponent;
        } else {
          e["power_exponent"] = nullptr;
        }
        arr.push_back(std::move(e));
      }
      j["checks"] = std::move(arr);
    }
    emit_json(j);
  } else {
    if (v.excluded) {
      std::cout << "excluded: " << undecim::primdiv::reason_text(*v.reason)
                << "\n";
    } else {
      std::cout << "not excluded\n";
    }
    if (!v.detail.empty()) std::cerr << v.detail << "\n";
  }
}

int run_screen(const std::string& prime_s, const std::string& exponent_s,
               const std::string& carmd_s, bool has_prime, bool has_exp,
               bool has_carm, bool json) {
  if (has_carm) {
    if (has_prime || has_exp) {
      throw std::domain_error(
          "screen: --carmichael-d excludes --prime/--exponent");
    }
    const BigInt d = parse_big(carmd_s, "--carmichael-d");
    const auto res = undecim::primdiv::carmichael_screen(d, 11);
    print_verdict(res.verdict, json, &res.checks);
  } else {
    if (!has_prime || !has_exp) {
      throw std::domain_error(
          "screen: need --prime and --exponent together, or --carmichael-d");
    }
    const auto v = undecim::primdiv::congruence_screen(
        parse_big(prime_s, "--prime"), parse_big(exponent_s, "--exponent"));
    print_verdict(v, json, nullptr);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "undecim: the complete solution of x^2 + 11^(2k) = y^n with "
      "machine-checkable certificates"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand(
      "solve", "Emit the solution family and every elimination certificate");
  std::string lambda_max;
  bool solve_json = false;
  solve->add_option("--lambda-max", lambda_max,
                    "Largest family index lambda to emit")
      ->required();
  solve->add_flag("--json", solve_json, "JSON output");

  auto* verify =
      app.add_subcommand("verify", "Check a single tuple x y k n exactly");
  std::string vx, vy, vk, vn;
  bool verify_json = false;
  verify->add_option("x", vx, "x >= 1")->required();
  verify->add_option("y", vy, "y >= 1")->required();
  verify->add_option("k", vk, "k >= 1")->required();
  verify->add_option("n", vn, "n >= 3")->required();
  verify->add_flag("--json", verify_json, "JSON output");

  auto* search = app.add_subcommand(
      "search", "Exhaustive oracle search for x^2 + prime^(2k) = y^n");
  std::string x_max, k_max, n_max, prime = "11", jobs = "1";
  bool search_json = false;
  search->add_option("--x-max", x_max, "Largest x")->required();
  search->add_option("--k-max", k_max, "Largest k")->required();
  search->add_option("--n-max", n_max, "Largest exponent n")->required();
  search->add_option("--prime", prime, "Base prime (default 11)");
  search->add_option("--jobs", jobs, "Worker threads (default 1)");
  search->add_flag("--json", search_json, "JSON output");

  auto* pell = app.add_subcommand(
      "pell", "Fundamental unit and solution classes of x^2 - d*y^2 = n");
  std::string pd, pn = "1", pcount;
  bool pell_json = false;
  pell->add_option("--d", pd, "Non-square d >= 2")->required();
  pell->add_option("--n", pn, "Right-hand side (default 1)");
  pell->add_option("--count", pcount, "Orbit elements per class")->required();
  pell->add_flag("--json", pell_json, "JSON output");

  auto* lucas = app.add_subcommand(
      "lucas", "Binary recurrence t_{r+1} = p*t_r - q*t_{r-1} queries");
  std::string lp, lq, lt0, ltm1, lterm, lmod, lzeros;
  bool lucas_json = false;
  lucas->add_option("--p", lp, "Recurrence coefficient p")->required();
  lucas->add_option("--q", lq, "Recurrence coefficient q")->required();
  lucas->add_option("--t0", lt0, "Seed t_0")->required();
  lucas->add_option("--tm1", ltm1, "Seed t_-1")->required();
  auto* lterm_opt = lucas->add_option("--term", lterm, "Exact term at index r");
  auto* lmod_opt =
      lucas->add_option("--mod", lmod, "Residue window mod m from index -1");
  auto* lzeros_opt =
      lucas->add_option("--zeros", lzeros, "Zero index classes mod m");
  lucas->add_flag("--json", lucas_json, "JSON output");

  auto* screen = app.add_subcommand(
      "screen", "Primitive-divisor screens (congruence or Carmichael)");
  std::string sprime, sexp, scarmd;
  bool screen_json = false;
  auto* sprime_opt =
      screen->add_option("--prime", sprime, "Prime p for the congruence");
  auto* sexp_opt =
      screen->add_option("--exponent", sexp, "Prime exponent n >= 5");
  auto* scarmd_opt = screen->add_option("--carmichael-d", scarmd,
                                        "Pell d for the Carmichael screen");
  screen->add_flag("--json", screen_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve->parsed()) return run_solve(lambda_max, solve_json);
    if (verify->parsed()) return run_verify(vx, vy, vk, vn, verify_json);
    if (search->parsed()) {
      return run_search(x_max, k_max, n_max, prime, jobs, search_json);
    }
    if (pell->parsed()) return run_pell(pd, pn, pcount, pell_json);
    if (lucas->parsed()) {
      return run_lucas(lp, lq, lt0, ltm1, lterm, lmod, lzeros,
                       lterm_opt->count() > 0, lmod_opt->count() > 0,
                       lzeros_opt->count() > 0, lucas_json);
    }
    if (screen->parsed()) {
      return run_screen(sprime, sexp, scarmd, sprime_opt->count() > 0,
                        sexp_opt->count() > 0, scarmd_opt->count() > 0,
                        screen_json);
    }
  } catch (const undecim::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
