#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace askey {

/// Exact rational number, always gcd-reduced with a positive denominator.
///
/// Backed by GMP's mpq_class. Division by zero throws std::domain_error.
class Rat {
public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class value);

  /// Parses "p/q" or "p" (optional sign on p). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  /// Renders as "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rat abs() const;
  Rat inverse() const;
  Rat numerator() const;
  Rat denominator() const;

  const mpq_class& raw() const { return v_; }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_;
};

/// b^e for any integer e; throws std::domain_error for 0 to a negative power.
Rat pow(const Rat& base, long exponent);

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace askey
