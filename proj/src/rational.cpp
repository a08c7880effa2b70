#include "slope_lab/rational.hpp"

#include "slope_lab/errors.hpp"

#include <cctype>
#include <climits>

namespace slope_lab {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw Error(ErrorCode::ParseError, "denominator must be unsigned: '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  result.canonicalize();
  return result;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer result;
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
  return result;
}

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw Error(ErrorCode::Overflow, "integer " + value.get_str() + " exceeds machine range");
  }
  return value.get_si();
}

}  // namespace slope_lab
