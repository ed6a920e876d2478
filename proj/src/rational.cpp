#include "arithdyn/rational.hpp"

#include <cmath>

#include "arithdyn/error.hpp"

namespace arithdyn {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) {
    fail(ErrorKind::Parse, "not a rational number: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) {
    fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
  }
  r.canonicalize();
  return r;
}

double log_abs(const Integer& z) {
  if (mpz_sgn(z.get_mpz_t()) == 0) {
    fail(ErrorKind::Structural, "log of zero");
  }
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
}

std::size_t decimal_digits(const Integer& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 10);
}

}  // namespace arithdyn
