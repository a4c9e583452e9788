// fdcell: sum-DoF calculator and experiment driver for full-duplex cellular
// networks. Subcommands compute closed-form values, cross-check them against
// the stream-allocation LPs, emit figure sweep data, and run the alignment
// Monte-Carlo and rate-slope experiments.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdcell/closed_form.hpp"
#include "fdcell/errors.hpp"
#include "fdcell/figures.hpp"
#include "fdcell/grid_check.hpp"
#include "fdcell/ia.hpp"
#include "fdcell/lp.hpp"
#include "fdcell/rate_sim.hpp"
#include "fdcell/scheduler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: fdcell <command> [options]

commands:
  dof          sum DoF of one configuration, cross-checked against both LPs
               --hd-users -M1 <n> -M2 <n> -N1 <n> -N2 <n>
               --fd-users -M1 <n> -M2 <n> -N <n>
  verify-grid  exhaustive formula/LP agreement sweep over [1..B]^4
               [-B <bound, default 8>]
  figure       sweep data for a named figure: ex1 | fd-sweep | split-curve |
               optimal-split  [-M <n>] [-M1 <n>] [-M2 <n>] [-N <n>] [--nmax <n>]
  ia           Monte-Carlo check of the alignment construction
               -M2 <n> -N2 <n> [-M1 <n, default 1>] [--trials <n>] [--seed <u64>]
               [--tol <x>]
  slope        empirical DoF as the slope of sum rate vs (1/2)log2 P
               -M2 <n> -N2 <n> [-M1 <n>] [--trials <n>] [--seed <u64>]
               [--pmin <x>] [--pmax <x>] [--points <n>]

common options:
  --format csv|json   figure output format (default csv)
  --out <path>        write output to a file instead of stdout
)";

const std::set<std::string> kValueOptions = {
    "-M",     "-M1",      "-M2",  "-N",    "-N1",    "-N2",     "-B",
    "--nmax", "--seed",   "--trials", "--tol", "--format", "--out",
    "--pmin", "--pmax",   "--points"};
const std::set<std::string> kFlagOptions = {"--hd-users", "--fd-users"};

struct Args {
  std::map<std::string, std::string> opts;
  std::set<std::string> flags;
  std::vector<std::string> positionals;

  bool has(const std::string& name) const {
    return opts.count(name) > 0 || flags.count(name) > 0;
  }
};

Args parse_args(int argc, char** argv, int first) {
  Args args;
  for (int i = first; i < argc; ++i) {
    const std::string a = argv[i];
    if (kFlagOptions.count(a)) {
      args.flags.insert(a);
    } else if (kValueOptions.count(a)) {
      if (i + 1 >= argc) throw UsageError("missing value for option " + a);
      args.opts[a] = argv[++i];
    } else if (!a.empty() && a[0] == '-' && a != "-") {
      throw UsageError("unknown option " + a);
    } else {
      args.positionals.push_back(a);
    }
  }
  return args;
}

long long get_int(const Args& args, const std::string& name, long long min_value,
                  long long fallback = -1, bool required = false) {
  auto it = args.opts.find(name);
  if (it == args.opts.end()) {
    if (required) throw UsageError("missing required option " + name);
    return fallback;
  }
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    if (v < min_value)
      throw UsageError(name + " must be >= " + std::to_string(min_value));
    return v;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad integer for option " + name + ": " + it->second);
  }
}

double get_double(const Args& args, const std::string& name, double fallback) {
  auto it = args.opts.find(name);
  if (it == args.opts.end()) return fallback;
  try {
    std::size_t pos = 0;
    const double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad number for option " + name + ": " + it->second);
  }
}

std::uint64_t get_seed(const Args& args, std::uint64_t fallback) {
  auto it = args.opts.find("--seed");
  if (it == args.opts.end()) return fallback;
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad seed: " + it->second);
  }
}

std::string fmt_rational(const fdcell::Rational& r) {
  return r.to_decimal_string(6) + " (= " + r.to_fraction_string() + ")";
}

std::string fmt_double(double v, const char* fmt = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

void write_output(const Args& args, const std::string& text) {
  auto it = args.opts.find("--out");
  if (it == args.opts.end()) {
    std::cout << text;
    return;
  }
  std::ofstream out(it->second, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + it->second);
  out << text;
}

// ---------------------------------------------------------------- dof ----

int cmd_dof(const Args& args) {
  const bool hd = args.flags.count("--hd-users") > 0;
  const bool fd = args.flags.count("--fd-users") > 0;
  if (hd == fd) throw UsageError("dof needs exactly one of --hd-users / --fd-users");

  std::ostringstream out;
  int exit_code = kExitOk;

  if (fd) {
    const int m1 = static_cast<int>(get_int(args, "-M1", 0, -1, true));
    const int m2 = static_cast<int>(get_int(args, "-M2", 0, -1, true));
    const int n = static_cast<int>(get_int(args, "-N", 0, -1, true));
    const fdcell::Rational v = fdcell::sum_dof_fd_users({m1, m2, n});
    out << "network: FD-BS/FD-users M1=" << m1 << " M2=" << m2 << " N=" << n << "\n";
    out << "sum DoF: " << fmt_rational(v) << "\n";
    out << "binding term: " << (m1 + m2 <= n ? "M1+M2" : "N") << "\n";
  } else {
    const int m1 = static_cast<int>(get_int(args, "-M1", 0, -1, true));
    const int m2 = static_cast<int>(get_int(args, "-M2", 0, -1, true));
    const int n1 = static_cast<int>(get_int(args, "-N1", 0, -1, true));
    const int n2 = static_cast<int>(get_int(args, "-N2", 0, -1, true));
    const fdcell::HdSplitConfig cfg(m1, m2, n1, n2);
    const fdcell::DofBreakdown bd = fdcell::sum_dof_hd_users(cfg);
    out << "network: FD-BS/HD-users M1=" << m1 << " M2=" << m2 << " N1=" << n1
        << " N2=" << n2 << "\n";
    out << "sum DoF: " << fmt_rational(bd.value) << "\n";
    out << "binding term: " << bd.binding_term << "\n";
    if (n1 >= 1 && n2 >= 1) {
      const fdcell::LpSolution ach = fdcell::solve_achievable_lp(cfg);
      const fdcell::LpSolution con = fdcell::solve_converse_lp(cfg);
      out << "achievable LP: " << fmt_rational(ach.value) << " at lambda = ("
          << ach.argmax.x << ", " << ach.argmax.y << "), corners: " << ach.corner_count
          << "\n";
      out << "converse LP: " << fmt_rational(con.value) << " at (d_dl, d_ul) = ("
          << con.argmax.x << ", " << con.argmax.y << "), corners: " << con.corner_count
          << "\n";
      const bool agree = bd.value == ach.value && ach.value == con.value;
      out << "triple equality: " << (agree ? "OK" : "MISMATCH") << "\n";
      if (!agree) exit_code = kExitMismatch;
    } else {
      out << "LP cross-check: skipped (degenerate user set)\n";
    }
  }

  write_output(args, out.str());
  return exit_code;
}

// --------------------------------------------------------- verify-grid ----

int cmd_verify_grid(const Args& args) {
  const int bound = static_cast<int>(get_int(args, "-B", 1, 8));
  const fdcell::GridCheckReport rep = fdcell::run_grid_check(bound);

  std::ostringstream out;
  out << "grid bound: " << rep.bound << "\n";
  for (const auto& [name, count] : rep.property_failures)
    out << name << ": " << count << " failures\n";
  if (!rep.first_counterexample.empty())
    out << "first counterexample: " << rep.first_counterexample << "\n";
  out << rep.configs << " configs, " << rep.mismatches << " mismatches\n";

  write_output(args, out.str());
  return rep.mismatches == 0 ? kExitOk : kExitMismatch;
}

// -------------------------------------------------------------- figure ----

std::string figure_csv(const fdcell::FigureData& fig) {
  std::ostringstream out;
  out << fig.sweep_name << ",fd-bs-hd-user,fd-bs-fd-user,fd-with-si,hd-only\n";
  for (const auto& row : fig.rows)
    out << row.sweep << "," << row.fd_bs_hd_user.to_decimal_string(6) << ","
        << row.fd_bs_fd_user.to_decimal_string(6) << ","
        << row.fd_with_si.to_decimal_string(6) << ","
        << row.hd_only.to_decimal_string(6) << "\n";
  return out.str();
}

nlohmann::ordered_json rational_json(const fdcell::Rational& r) {
  return {{"exact", r.to_fraction_string()}, {"decimal", r.to_decimal_string(6)}};
}

std::string figure_json(const fdcell::FigureData& fig) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : fig.rows) {
    nlohmann::ordered_json o;
    o[fig.sweep_name] = row.sweep;
    o["fd-bs-hd-user"] = rational_json(row.fd_bs_hd_user);
    o["fd-bs-fd-user"] = rational_json(row.fd_bs_fd_user);
    o["fd-with-si"] = rational_json(row.fd_with_si);
    o["hd-only"] = rational_json(row.hd_only);
    rows.push_back(std::move(o));
  }
  return rows.dump(2) + "\n";
}

int cmd_figure(const Args& args) {
  if (args.positionals.empty()) throw UsageError("figure needs a name");
  const std::string& name = args.positionals.front();

  fdcell::FigureData fig;
  if (name == "ex1") {
    const int m = static_cast<int>(get_int(args, "-M", 0, 5));
    const int nmax = static_cast<int>(get_int(args, "--nmax", 1, 20));
    fig = fdcell::figure_ex1(m, nmax);
  } else if (name == "fd-sweep") {
    const int m1 = static_cast<int>(get_int(args, "-M1", 0, 16));
    const int m2 = static_cast<int>(get_int(args, "-M2", 0, 8));
    const int nmax = static_cast<int>(get_int(args, "--nmax", 1, 25));
    fig = fdcell::figure_fd_sweep(m1, m2, nmax);
  } else if (name == "split-curve") {
    const int m1 = static_cast<int>(get_int(args, "-M1", 0, 16));
    const int m2 = static_cast<int>(get_int(args, "-M2", 0, 8));
    const int n = static_cast<int>(get_int(args, "-N", 0, 50));
    fig = fdcell::figure_split_curve(m1, m2, n);
  } else if (name == "optimal-split") {
    const int m1 = static_cast<int>(get_int(args, "-M1", 0, 16));
    const int m2 = static_cast<int>(get_int(args, "-M2", 0, 8));
    const int nmax = static_cast<int>(get_int(args, "--nmax", 1, 50));
    fig = fdcell::figure_optimal_split(m1, m2, nmax);
  } else {
    throw UsageError("unknown figure name: " + name);
  }

  std::string format = "csv";
  if (auto it = args.opts.find("--format"); it != args.opts.end()) format = it->second;
  if (format == "csv")
    write_output(args, figure_csv(fig));
  else if (format == "json")
    write_output(args, figure_json(fig));
  else
    throw UsageError("unknown format: " + format);
  return kExitOk;
}

// ------------------------------------------------------------------ ia ----

int cmd_ia(const Args& args) {
  const int m1 = static_cast<int>(get_int(args, "-M1", 1, 1));
  const int m2 = static_cast<int>(get_int(args, "-M2", 0, -1, true));
  const int n2 = static_cast<int>(get_int(args, "-N2", 1, -1, true));
  const int trials = static_cast<int>(get_int(args, "--trials", 1, 100));
  const std::uint64_t seed = get_seed(args, 1);
  const double tol = get_double(args, "--tol", 1e-12);

  std::ostringstream out;
  if (fdcell::scheme_kind(m2, n2) == fdcell::SchemeKind::uplink_only) {
    out << "unsupported regime: M2 > N2 uses pure UL reception (sum DoF = N2 = " << n2
        << ")\n";
    write_output(args, out.str());
    return kExitOk;
  }

  const fdcell::MonteCarloReport rep =
      fdcell::alignment_monte_carlo(m1, m2, n2, trials, {seed}, tol);
  out << "alignment Monte-Carlo: M1=" << m1 << " M2=" << m2 << " N2=" << n2
      << " trials=" << trials << " seed=" << seed << " tol=" << fmt_double(tol) << "\n";
  out << "failures: " << rep.failures << "\n";
  out << "max alignment residual: " << fmt_double(rep.max_residual, "%.6e") << "\n";
  out << "min DL-user rank: " << rep.min_dl_rank << " (expected " << rep.expected_dl_rank
      << ")\n";
  out << "min BS rank: " << rep.min_bs_rank << " (expected " << rep.expected_bs_rank
      << ")\n";
  out << "symbols/slot: " << fmt_rational(rep.symbols_per_slot) << "\n";
  write_output(args, out.str());
  return rep.failures == 0 ? kExitOk : kExitMismatch;
}

// --------------------------------------------------------------- slope ----

int cmd_slope(const Args& args) {
  const int m1 = static_cast<int>(get_int(args, "-M1", 1, 1));
  const int m2 = static_cast<int>(get_int(args, "-M2", 0, -1, true));
  const int n2 = static_cast<int>(get_int(args, "-N2", 1, -1, true));
  const int trials = static_cast<int>(get_int(args, "--trials", 1, 20));
  const std::uint64_t seed = get_seed(args, 1);
  const double pmin = get_double(args, "--pmin", 1e2);
  const double pmax = get_double(args, "--pmax", 1e10);
  const int points = static_cast<int>(get_int(args, "--points", 2, 9));

  std::ostringstream out;
  if (fdcell::scheme_kind(m2, n2) == fdcell::SchemeKind::uplink_only) {
    out << "unsupported regime: M2 > N2 uses pure UL reception (sum DoF = N2 = " << n2
        << ")\n";
    write_output(args, out.str());
    return kExitOk;
  }
  if (!(pmin > 0.0) || !(pmax > pmin)) throw UsageError("need 0 < pmin < pmax");

  std::vector<double> powers(points);
  for (int i = 0; i < points; ++i)
    powers[i] = pmin * std::pow(pmax / pmin, static_cast<double>(i) / (points - 1));

  const fdcell::SlopeEstimate est =
      fdcell::estimate_dof_slope(m1, m2, n2, powers, {seed}, trials);
  const fdcell::Rational ref = fdcell::sum_dof_single_dl_user(m2, n2);
  const double rel_err = std::abs(est.slope - ref.to_double()) / ref.to_double();

  out << "DoF slope: M1=" << m1 << " M2=" << m2 << " N2=" << n2 << " trials=" << trials
      << " seed=" << seed << "\n";
  out << "P, avg sum rate (bits/slot):\n";
  for (const auto& [p, r] : est.points)
    out << "  " << fmt_double(p, "%.6e") << "  " << fmt_double(r, "%.6f") << "\n";
  out << "slope: " << fmt_double(est.slope, "%.6f") << "\n";
  out << "intercept: " << fmt_double(est.intercept, "%.6f") << "\n";
  out << "r^2: " << fmt_double(est.r_squared, "%.8f") << "\n";
  out << "closed form: " << fmt_rational(ref) << "\n";
  out << "relative error: " << fmt_double(100.0 * rel_err, "%.2f") << "%\n";
  write_output(args, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return kExitUsage;
  }
  const std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    std::cout << kUsage;
    return kExitOk;
  }

  try {
    const Args args = parse_args(argc, argv, 2);
    if (command == "dof") return cmd_dof(args);
    if (command == "verify-grid") return cmd_verify_grid(args);
    if (command == "figure") return cmd_figure(args);
    if (command == "ia") return cmd_ia(args);
    if (command == "slope") return cmd_slope(args);
    throw UsageError("unknown command: " + command);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
