#include "thermores/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "thermores/errors.hpp"

namespace thermores {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

double log_abs(const mpz_class& z) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(num, 1);
  value_ /= den;
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s, true)) {
      throw Error(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
    }
    return Rat(mpq_class(to_mpz(s)));
  }
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(ErrorCode::ParseError, "malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class d = to_mpz(den);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rat(mpq_class(to_mpz(num), d));
}

std::string Rat::str() const { return value_.get_str(10); }

double Rat::to_double() const { return value_.get_d(); }

double Rat::log() const {
  if (sign() == 0) return -std::numeric_limits<double>::infinity();
  if (sign() < 0) return std::numeric_limits<double>::quiet_NaN();
  return log_abs(value_.get_num()) - log_abs(value_.get_den());
}

bool Rat::is_integer() const { return value_.get_den() == 1; }

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::reciprocal() const { return Rat(1) / *this; }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat best_rational_approximation(double x, std::uint64_t max_denominator) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot approximate a non-finite value");
  if (max_denominator == 0) throw Error(ErrorCode::InvalidArgument, "max_denominator must be positive");
  const bool negative = x < 0;
  long double value = std::fabs(static_cast<long double>(x));
  const long double target = value;

  // Convergents h/k of the continued fraction expansion.
  mpz_class h_prev = 1, h_prev2 = 0;
  mpz_class k_prev = 0, k_prev2 = 1;
  const mpz_class kmax(static_cast<unsigned long>(max_denominator));
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(value);
    if (a_ld > 1e18L) break;
    const mpz_class a(static_cast<unsigned long>(a_ld));
    const mpz_class k_next = a * k_prev + k_prev2;
    if (k_next > kmax) {
      // Largest admissible semiconvergent; keep it only if strictly closer.
      const mpz_class m = (kmax - k_prev2) / k_prev;
      const mpz_class h_semi = m * h_prev + h_prev2;
      const mpz_class k_semi = m * k_prev + k_prev2;
      if (m > 0 && k_semi > 0) {
        const long double semi = static_cast<long double>(h_semi.get_d()) / k_semi.get_d();
        const long double conv = static_cast<long double>(h_prev.get_d()) / k_prev.get_d();
        if (std::fabs(semi - target) < std::fabs(conv - target)) {
          h_prev = h_semi;
          k_prev = k_semi;
        }
      }
      break;
    }
    const mpz_class h_next = a * h_prev + h_prev2;
    h_prev2 = h_prev;
    h_prev = h_next;
    k_prev2 = k_prev;
    k_prev = k_next;
    const long double frac = value - a_ld;
    if (frac < 1e-18L) break;
    value = 1.0L / frac;
  }
  Rat out(mpq_class(h_prev, k_prev));
  return negative ? -out : out;
}

}  // namespace thermores
