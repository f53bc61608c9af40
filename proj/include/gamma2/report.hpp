#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma2/arc_engine.hpp"
#include "gamma2/identities.hpp"
#include "gamma2/polynomial.hpp"
#include "gamma2/qseries.hpp"

namespace gamma2 {

struct RunConfig {
  int precision_bits = 128;
  long trunc = 256;
  long n_max = 10000;
  std::string format = "text";  // text | json | csv
  std::string out_path;         // empty: stdout

  void validate() const;  // precision_bits >= 64, trunc >= 64, known format
};

// Exact decimal rendering of a rational, `places` digits after the point,
// round half away from zero.
std::string rat_decimal(const Rat& x, int places);

struct PolyTableRow {
  int k = 0;
  Polynomial recursion;
  std::optional<Polynomial> oracle;
  bool equal = false;
};

struct RootRow {
  int index = 0;
  Rat value;
  Rat lo, hi;
  int multiplicity = 1;
  bool exact = false;
};

std::string render_polys(const std::vector<PolyTableRow>& rows, const RunConfig& cfg);
std::string render_roots(int k, const std::vector<RootRow>& rows, int places,
                         const RunConfig& cfg);
std::string render_scan(int k, const ScanResult& scan, const std::optional<RsdResult>& rsd,
                        const RunConfig& cfg);
std::string render_interlace(const InterlaceReport& rep, const RunConfig& cfg);
std::string render_identities(const std::vector<IdentityReport>& reps, const RunConfig& cfg);
std::string render_series(const std::string& which, int k, const QSeries& s,
                          const RunConfig& cfg);

}  // namespace gamma2
