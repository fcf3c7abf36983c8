#include "askey/rat.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace askey {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_.canonicalize();
}

Rat::Rat(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false))) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpq_class v;
  v.get_num() = mpz_class(n, 10);
  v.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  v.canonicalize();
  return Rat(std::move(v));
}

std::string Rat::str() const { return v_.get_str(10); }

long double Rat::to_long_double() const {
  // Exact enough for the float companion: numerator and denominator are
  // converted separately when they fit, otherwise fall back to double.
  const mpz_class& n = v_.get_num();
  const mpz_class& d = v_.get_den();
  if (mpz_sizeinbase(n.get_mpz_t(), 2) < 60 && mpz_sizeinbase(d.get_mpz_t(), 2) < 60) {
    return static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
  }
  return v_.get_d();
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(v_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rat(std::move(r));
}

Rat Rat::numerator() const { return Rat(mpq_class(v_.get_num())); }
Rat Rat::denominator() const { return Rat(mpq_class(v_.get_den())); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rat(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace askey
