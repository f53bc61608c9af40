#include "gamma2/real.hpp"

#include <cstdlib>
#include <sstream>

namespace gamma2 {

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  // mantissa is 0.mant * 10^e; render as d.ddd...e<exp>
  std::ostringstream os;
  if (neg) os << "-";
  os << mant[0];
  if (mant.size() > 1) os << "." << mant.substr(1);
  os << "e" << (e - 1);
  return os.str();
}

}  // namespace gamma2
