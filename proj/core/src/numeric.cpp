#include "p1/numeric.hpp"

#include "p1/error.hpp"

namespace p1 {

long to_long(const Integer& v, const char* what) {
  if (!v.fits_slong_p()) throw Error(std::string(what) + ": value out of machine range");
  return v.get_si();
}

std::size_t to_size(const Integer& v, const char* what) {
  if (sgn(v) < 0) throw Error(std::string(what) + ": negative value");
  if (!v.fits_ulong_p()) throw Error(std::string(what) + ": value out of machine range");
  return static_cast<std::size_t>(v.get_ui());
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace p1
