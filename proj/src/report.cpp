#include "gamma2/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace gamma2 {

using json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (precision_bits < 64) throw std::invalid_argument("precision_bits must be >= 64");
  if (trunc < 64) throw std::invalid_argument("trunc must be >= 64");
  if (format != "text" && format != "json" && format != "csv")
    throw std::invalid_argument("format must be text, json or csv");
}

std::string rat_decimal(const Rat& x, int places) {
  if (places < 0) throw std::invalid_argument("rat_decimal: places must be >= 0");
  Int scale = int_pow(Int(10), static_cast<unsigned long>(places));
  Int num = x.get_num() * scale;
  const Int& den = x.get_den();
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // round half away from zero
  Int r2 = Int(abs(r)) * 2;
  if (r2 >= den) q += (sgn(x) < 0) ? -1 : 1;
  bool neg = sgn(q) < 0;
  std::string digits = Int(abs(q)).get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<size_t>(places) - digits.size() + 1, '0');
  std::string out = neg ? "-" : "";
  out += digits.substr(0, digits.size() - static_cast<size_t>(places));
  if (places > 0) out += "." + digits.substr(digits.size() - static_cast<size_t>(places));
  return out;
}

namespace {

json poly_json(const Polynomial& p) {
  json a = json::array();
  for (long i = 0; i <= p.degree(); ++i) a.push_back(rat_str(p.coeff(i)));
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string render_polys(const std::vector<PolyTableRow>& rows, const RunConfig& cfg) {
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      json e;
      e["k"] = r.k;
      e["weight"] = 2 * r.k + 1;
      e["recursion"] = poly_json(r.recursion);
      if (r.oracle) e["oracle"] = poly_json(*r.oracle);
      e["equal"] = r.equal;
      j.push_back(e);
    }
    return dump(j);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "k,weight,recursion,oracle,equal\n";
    for (const auto& r : rows)
      os << r.k << "," << 2 * r.k + 1 << ",\"" << r.recursion.str("L") << "\",\""
         << (r.oracle ? r.oracle->str("L") : "") << "\"," << (r.equal ? "true" : "false") << "\n";
    return os.str();
  }
  for (const auto& r : rows) {
    os << "p_" << 2 * r.k + 1 << "(L) = " << r.recursion.str("L");
    if (r.oracle) os << "   [q-series oracle " << (r.equal ? "agrees" : "DISAGREES: " + r.oracle->str("L")) << "]";
    os << "\n";
  }
  return os.str();
}

std::string render_roots(int k, const std::vector<RootRow>& rows, int places,
                         const RunConfig& cfg) {
  if (cfg.format == "json") {
    json j;
    j["k"] = k;
    j["weight"] = 2 * k + 1;
    j["roots"] = json::array();
    for (const auto& r : rows) {
      json e;
      e["index"] = r.index;
      e["value"] = rat_decimal(r.value, places);
      e["value_rational"] = rat_str(r.value);
      e["lo"] = rat_str(r.lo);
      e["hi"] = rat_str(r.hi);
      e["multiplicity"] = r.multiplicity;
      e["exact"] = r.exact;
      j["roots"].push_back(e);
    }
    return dump(j);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "k,index,value,lo,hi,multiplicity,exact\n";
    for (const auto& r : rows)
      os << k << "," << r.index << "," << rat_decimal(r.value, places) << "," << rat_str(r.lo)
         << "," << rat_str(r.hi) << "," << r.multiplicity << "," << (r.exact ? "true" : "false")
         << "\n";
    return os.str();
  }
  os << "lambda-zeros of p_" << 2 * k + 1 << " (ascending):\n";
  for (const auto& r : rows) {
    os << "  " << rat_decimal(r.value, places);
    if (r.exact) os << " (exact " << rat_str(r.value) << ")";
    if (r.multiplicity > 1) os << " (multiplicity " << r.multiplicity << ")";
    os << "\n";
  }
  return os.str();
}

std::string render_scan(int k, const ScanResult& scan, const std::optional<RsdResult>& rsd,
                        const RunConfig& cfg) {
  const int digits = 25;
  if (cfg.format == "json") {
    json j;
    j["k"] = k;
    j["weight"] = 2 * k + 1;
    j["points"] = json::array();
    for (const auto& p : scan.points) {
      json e;
      e["theta_rad"] = p.theta.str(digits);
      e["imF"] = p.value_im.str(digits);
      e["sign"] = p.sign;
      e["certified"] = p.certified;
      e["tail_bound"] = p.tail_bound.str(8);
      j["points"].push_back(e);
    }
    j["intervals"] = json::array();
    for (const auto& iv : scan.intervals) {
      json e;
      e["theta_lo"] = iv.theta_lo.str(digits);
      e["theta_hi"] = iv.theta_hi.str(digits);
      e["sign_lo"] = iv.sign_lo;
      e["sign_hi"] = iv.sign_hi;
      j["intervals"].push_back(e);
    }
    j["uncertified"] = json::array();
    for (const auto& t : scan.uncertified) j["uncertified"].push_back(t.str(digits));
    j["zeros_found"] = scan.intervals.size();
    if (rsd) {
      j["fraction"] = rat_str(rsd->fraction);
      j["total_nontrivial_zeros"] = rsd->total;
    }
    return dump(j);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "theta_rad,imF,sign,certified,tail_bound\n";
    for (const auto& p : scan.points)
      os << p.theta.str(digits) << "," << p.value_im.str(digits) << "," << p.sign << ","
         << (p.certified ? "true" : "false") << "," << p.tail_bound.str(8) << "\n";
    os << "# zeros_found=" << scan.intervals.size();
    if (rsd) os << " fraction=" << rat_str(rsd->fraction) << " total=" << rsd->total;
    os << " uncertified=" << scan.uncertified.size() << "\n";
    return os.str();
  }
  os << "scan weight " << 2 * k + 1 << ": " << scan.points.size() << " grid points, "
     << scan.intervals.size() << " certified sign changes, " << scan.uncertified.size()
     << " uncertified points\n";
  for (const auto& iv : scan.intervals)
    os << "  zero in [" << iv.theta_lo.str(20) << ", " << iv.theta_hi.str(20) << "]  signs "
       << iv.sign_lo << " -> " << iv.sign_hi << "\n";
  if (rsd)
    os << "fraction of located zeros: " << rat_str(rsd->fraction) << " (count " << rsd->count
       << " of " << rsd->total << ")\n";
  return os.str();
}

namespace {

json interval_json(const ClippedInterval& iv) {
  json e;
  e["weight"] = iv.weight;
  e["j"] = iv.j;
  e["lo_pi"] = rat_str(iv.lo_pi);
  e["hi_pi"] = rat_str(iv.hi_pi);
  e["clipped_lo"] = iv.clipped_lo;
  e["clipped_hi"] = iv.clipped_hi;
  e["sign_lo"] = iv.sign_lo;
  e["sign_hi"] = iv.sign_hi;
  e["certified"] = iv.cert_lo && iv.cert_hi;
  e["opposite_signs"] = iv.opposite;
  e["pattern_ok"] = iv.pattern_ok;
  return e;
}

void interval_text(std::ostringstream& os, const ClippedInterval& iv) {
  os << "  I_{" << iv.j << "," << iv.weight << "} = [" << rat_str(iv.lo_pi) << " pi, "
     << rat_str(iv.hi_pi) << " pi]  signs (" << iv.sign_lo << "," << iv.sign_hi << ")"
     << (iv.pattern_ok ? "" : "  PATTERN MISMATCH") << "\n";
}

}  // namespace

std::string render_interlace(const InterlaceReport& rep, const RunConfig& cfg) {
  if (cfg.format == "json") {
    json j;
    j["k"] = rep.k;
    j["half_width_pi"] = rat_str(rep.half_width_pi);
    j["lower"] = json::array();
    for (const auto& iv : rep.lower) j["lower"].push_back(interval_json(iv));
    j["upper"] = json::array();
    for (const auto& iv : rep.upper) j["upper"].push_back(interval_json(iv));
    j["disjoint"] = rep.disjoint;
    j["separated"] = rep.separated;
    j["all_certified"] = rep.all_certified;
    return dump(j);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "weight,j,lo_pi,hi_pi,clipped_lo,clipped_hi,sign_lo,sign_hi,certified,pattern_ok\n";
    auto row = [&](const ClippedInterval& iv) {
      os << iv.weight << "," << iv.j << "," << rat_str(iv.lo_pi) << "," << rat_str(iv.hi_pi) << ","
         << iv.clipped_lo << "," << iv.clipped_hi << "," << iv.sign_lo << "," << iv.sign_hi << ","
         << (iv.cert_lo && iv.cert_hi ? "true" : "false") << ","
         << (iv.pattern_ok ? "true" : "false") << "\n";
    };
    for (const auto& iv : rep.lower) row(iv);
    for (const auto& iv : rep.upper) row(iv);
    os << "# disjoint=" << (rep.disjoint ? "true" : "false")
       << " separated=" << (rep.separated ? "true" : "false")
       << " all_certified=" << (rep.all_certified ? "true" : "false") << "\n";
    return os.str();
  }
  os << "interlacing report k=" << rep.k << " (half-width " << rat_str(rep.half_width_pi)
     << " pi)\n";
  os << " weight " << 2 * rep.k - 1 << " intervals:\n";
  for (const auto& iv : rep.lower) interval_text(os, iv);
  os << " weight " << 2 * rep.k + 1 << " intervals:\n";
  for (const auto& iv : rep.upper) interval_text(os, iv);
  os << " disjoint: " << (rep.disjoint ? "true" : "false")
     << "\n separated: " << (rep.separated ? "true" : "false")
     << "\n all endpoints certified: " << (rep.all_certified ? "true" : "false") << "\n";
  return os.str();
}

std::string render_identities(const std::vector<IdentityReport>& reps, const RunConfig& cfg) {
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& r : reps) {
      json e;
      e["identity"] = identity_name(r.identity);
      e["k"] = r.k;
      e["mode"] = r.exact_mode ? "exact" : "numeric";
      e["lhs"] = r.lhs_str();
      e["rhs"] = r.rhs_str();
      if (!r.exact_mode) e["tolerance"] = r.tolerance.str(6);
      e["pass"] = r.pass;
      if (!r.note.empty()) e["note"] = r.note;
      j.push_back(e);
    }
    return dump(j);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "identity,k,mode,lhs,rhs,pass\n";
    for (const auto& r : reps)
      os << identity_name(r.identity) << "," << r.k << "," << (r.exact_mode ? "exact" : "numeric")
         << "," << r.lhs_str() << "," << r.rhs_str() << "," << (r.pass ? "true" : "false") << "\n";
    return os.str();
  }
  for (const auto& r : reps) {
    os << identity_name(r.identity) << " k=" << r.k << ": lhs=" << r.lhs_str()
       << " rhs=" << r.rhs_str() << " (" << (r.exact_mode ? "exact" : "numeric") << ") "
       << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << "\n";
  }
  return os.str();
}

std::string render_series(const std::string& which, int k, const QSeries& s,
                          const RunConfig& cfg) {
  const auto terms = s.nonzero_terms();
  if (cfg.format == "json") {
    json j;
    j["which"] = which;
    if (k >= 0) j["k"] = k;
    j["grid_denominator"] = QSeries::kGridDen;
    j["trunc"] = s.trunc();
    j["terms"] = json::array();
    for (const auto& [n, c] : terms) {
      json e;
      e["n"] = n;
      e["coeff"] = rat_str(c);
      j["terms"].push_back(e);
    }
    return dump(j);
  }
  std::ostringstream os;
  if (cfg.format == "csv") {
    os << "n,coeff\n";
    for (const auto& [n, c] : terms) os << n << "," << rat_str(c) << "\n";
    return os.str();
  }
  os << which;
  if (k >= 0) os << " (k=" << k << ")";
  os << ", coefficient of q^(n/8), truncation " << s.trunc() << ":\n";
  for (const auto& [n, c] : terms) os << "  " << n << "  " << rat_str(c) << "\n";
  return os.str();
}

}  // namespace gamma2
