// gamma2: level-2 Eisenstein zero tables, boundary-arc scans, interlacing
// checks, and exact L-value identity reports.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "gamma2/arc_engine.hpp"
#include "gamma2/identities.hpp"
#include "gamma2/lambda_poly.hpp"
#include "gamma2/report.hpp"
#include "gamma2/roots.hpp"
#include "gamma2/sequences.hpp"

using namespace gamma2;

namespace {

struct CliState {
  RunConfig cfg;
  int k = -1;
  int k_max = 5;
  double tol = 1e-6;
  double theta_lo = -1.0;  // <0: default 0.05 pi
  double theta_hi = -1.0;  // <0: default 0.95 pi
  int grid = 0;            // 0: auto
  std::string which;
  int exit_code = 0;
};

void add_common(CLI::App* cmd, CliState& st) {
  cmd->add_option("--prec", st.cfg.precision_bits, "working precision in bits (>= 64)");
  cmd->add_option("--trunc", st.cfg.trunc, "series truncation in grid units of q^(1/8) (>= 64)");
  cmd->add_option("--n-max", st.cfg.n_max, "lattice cutoff: include c^2+d^2 <= n-max");
  cmd->add_option("--format", st.cfg.format, "output format: text, json or csv");
  cmd->add_option("--out", st.cfg.out_path, "write output to this file instead of stdout");
}

void emit(const CliState& st, const std::string& text) {
  if (st.cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(st.cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + st.cfg.out_path);
  f << text;
}

long poly_trunc(const CliState& st, int k_max) {
  return std::max(st.cfg.trunc, 4L * k_max + 64);
}

void run_polys(CliState& st) {
  st.cfg.validate();
  const auto table = cn_polynomials(st.k_max);
  std::vector<Polynomial> oracle;
  if (st.k_max >= 1) oracle = p_poly_oracle_table(st.k_max, poly_trunc(st, st.k_max));
  std::vector<PolyTableRow> rows;
  for (int k = 0; k <= st.k_max; ++k) {
    PolyTableRow r;
    r.k = k;
    r.recursion = table.polys[static_cast<size_t>(k)];
    if (k >= 1) {
      r.oracle = oracle[static_cast<size_t>(k - 1)];
      r.equal = (*r.oracle == r.recursion);
    } else {
      r.equal = (r.recursion == Polynomial::constant(Rat(1)));
    }
    if (!r.equal) st.exit_code = 1;
    rows.push_back(std::move(r));
  }
  emit(st, render_polys(rows, st.cfg));
}

void run_roots(CliState& st) {
  st.cfg.validate();
  if (st.k < 0) throw CLI::ValidationError("--k is required");
  if (st.tol <= 0) throw CLI::ValidationError("--tol must be positive");
  const Polynomial p = cn_polynomials(st.k).polys.back();
  Rat tol_rat(st.tol);
  tol_rat.canonicalize();
  std::vector<RootRow> rows;
  if (!p.is_zero() && p.degree() >= 1) {
    auto roots = sturm_isolate(p);
    int idx = 0;
    for (const auto& r : roots) {
      RootRow row;
      row.index = idx++;
      IsolatedRoot nr = narrow_root(r, tol_rat);
      row.value = nr.exact() ? nr.lo : refine_root(nr, tol_rat);
      row.lo = nr.lo;
      row.hi = nr.hi;
      row.multiplicity = r.multiplicity;
      row.exact = nr.exact();
      rows.push_back(std::move(row));
    }
  }
  const int places =
      std::min(40, std::max(2, static_cast<int>(std::ceil(-std::log10(st.tol)))));
  emit(st, render_roots(st.k, rows, places, st.cfg));
}

void run_scan(CliState& st) {
  st.cfg.validate();
  if (st.k < 0) throw CLI::ValidationError("--k is required");
  LatticeSumSpec spec;
  spec.k = st.k;
  spec.n_max = st.cfg.n_max;
  spec.precision_bits = st.cfg.precision_bits;
  const mpfr_prec_t prec = st.cfg.precision_bits;
  const Real pi = Real::pi(prec);
  const Real lo = st.theta_lo >= 0 ? Real::of(st.theta_lo, prec) : pi * Real::of(Rat(1, 20), prec);
  const Real hi = st.theta_hi >= 0 ? Real::of(st.theta_hi, prec) : pi * Real::of(Rat(19, 20), prec);
  const int grid = st.grid > 0 ? st.grid : 4 * (2 * st.k + 1) + 1;
  ScanResult scan = scan_arc(spec, lo, hi, grid);
  std::optional<RsdResult> rsd;
  if (st.k >= 2) {
    RsdResult r;
    r.count = static_cast<long>(scan.intervals.size());
    r.total = st.k - 1;
    r.fraction = Rat(r.count, r.total);
    r.fraction.canonicalize();
    rsd = std::move(r);
  }
  emit(st, render_scan(st.k, scan, rsd, st.cfg));
}

void run_interlace(CliState& st) {
  st.cfg.validate();
  if (st.k < 0) throw CLI::ValidationError("--k is required");
  InterlaceReport rep = interlace_check(st.k, st.cfg.n_max, st.cfg.precision_bits);
  if (!(rep.disjoint && rep.separated && rep.all_certified)) st.exit_code = 1;
  emit(st, render_interlace(rep, st.cfg));
}

void run_identities(CliState& st) {
  st.cfg.validate();
  const int k_max = st.k_max;
  std::vector<IdentityReport> reps;
  auto zeros = verify_thm_zeros_range(k_max, st.cfg.trunc);
  std::vector<IdentityReport> plus, minus, sums;
  if (k_max >= 1) {
    plus = verify_thm_even_range(k_max, +1, st.cfg.trunc);
    minus = verify_thm_even_range(k_max, -1, st.cfg.trunc);
    sums = verify_cor_even_sum_range(k_max, st.cfg.trunc);
  }
  for (int k = 0; k <= k_max; ++k) {
    reps.push_back(zeros[static_cast<size_t>(k)]);
    if (k >= 1) {
      reps.push_back(verify_cor_32(k, st.cfg.trunc, st.cfg.precision_bits));
      reps.push_back(plus[static_cast<size_t>(k - 1)]);
      reps.push_back(minus[static_cast<size_t>(k - 1)]);
      reps.push_back(sums[static_cast<size_t>(k - 1)]);
      reps.push_back(verify_c_consistency(k, st.cfg.precision_bits));
    }
  }
  for (const auto& r : reps)
    if (!r.pass) st.exit_code = 1;
  emit(st, render_identities(reps, st.cfg));
}

void run_series(CliState& st) {
  st.cfg.validate();
  const long trunc = st.cfg.trunc;
  const int k = std::max(0, st.k);
  QSeries s = QSeries::zero(trunc);
  std::string label = st.which;
  if (st.which == "theta2")
    s = theta_bundle(trunc).theta2;
  else if (st.which == "theta3")
    s = theta_bundle(trunc).theta3;
  else if (st.which == "theta4")
    s = theta_bundle(trunc).theta4;
  else if (st.which == "lambda")
    s = lambda_series(trunc).series;
  else if (st.which == "g") {
    EisensteinSeries g = g_normalized(k, trunc);
    s = g.data.scalar * g.data.series;
    label = "g (times i^" + std::to_string(g.data.unit_power) + ")";
  } else if (st.which == "eodd")
    s = eisenstein_odd(k, trunc).data.series;
  else if (st.which == "eplus")
    s = eisenstein_even(std::max(1, k), +1, trunc).data.series;
  else if (st.which == "eminus")
    s = eisenstein_even(std::max(1, k), -1, trunc).data.series;
  else
    throw CLI::ValidationError(
        "--which must be one of theta2, theta3, theta4, lambda, g, eodd, eplus, eminus");
  emit(st, render_series(label, st.k, s, st.cfg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-2 Eisenstein series: zero polynomials, arc scans, L-value identities"};
  app.require_subcommand(1);
  CliState st;

  auto* polys = app.add_subcommand("polys", "zero polynomials from the recursion and the q-series oracle");
  polys->add_option("--k-max", st.k_max, "largest series index k");
  add_common(polys, st);
  polys->callback([&] { run_polys(st); });

  auto* roots = app.add_subcommand("roots", "isolated and refined lambda-zeros, ascending");
  roots->add_option("--k", st.k, "series index k (weight 2k+1)");
  roots->add_option("--tol", st.tol, "refinement tolerance");
  add_common(roots, st);
  roots->callback([&] { run_roots(st); });

  auto* scan = app.add_subcommand("scan", "certified sign scan of Im F along the boundary arc");
  scan->add_option("--k", st.k, "series index k (weight 2k+1)");
  scan->add_option("--theta-lo", st.theta_lo, "scan start in radians (default pi/20)");
  scan->add_option("--theta-hi", st.theta_hi, "scan end in radians (default 19 pi/20)");
  scan->add_option("--grid", st.grid, "number of grid points (default 4(2k+1)+1)");
  add_common(scan, st);
  scan->callback([&] { run_scan(st); });

  auto* inter = app.add_subcommand("interlace", "interval interlacing check (k > 15)");
  inter->add_option("--k", st.k, "series index k");
  add_common(inter, st);
  inter->callback([&] { run_interlace(st); });

  auto* ident = app.add_subcommand("identities", "exact and numeric identity reports");
  ident->add_option("--k-max", st.k_max, "largest series index k");
  add_common(ident, st);
  ident->callback([&] { run_identities(st); });

  auto* series = app.add_subcommand("series", "coefficient dump of a q-expansion");
  series->add_option("--which", st.which, "theta2|theta3|theta4|lambda|g|eodd|eplus|eminus")
      ->required();
  series->add_option("--k", st.k, "series index k where applicable");
  add_common(series, st);
  series->callback([&] { run_series(st); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return st.exit_code;
}
