#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "askey/rat.hpp"

namespace askey {

/// Sparse Laurent polynomial in z over Rat. No stored coefficient is zero.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(const Rat& coeff, long exponent);

  bool is_zero() const { return terms_.empty(); }
  Rat coeff(long exponent) const;
  const std::map<long, Rat>& terms() const { return terms_; }
  long max_exponent() const;  // 0 for the zero polynomial
  long min_exponent() const;

  void add_term(long exponent, const Rat& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rat& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
  friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// "c_k z^k + ..." with exponents descending; "0" for the zero polynomial.
  std::string str() const;

private:
  std::map<long, Rat> terms_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

/// Σ c_k z0^k. Throws ZeroArgument for z0 = 0.
Rat eval_at(const LaurentPoly& p, const Rat& z0);

/// p(1/z).
LaurentPoly invert_variable(const LaurentPoly& p);

/// p(-z).
LaurentPoly negate_variable(const LaurentPoly& p);

/// Laurent polynomial invariant under z -> 1/z; validated on construction.
class SymmetricLaurent {
public:
  SymmetricLaurent() = default;
  /// Throws std::invalid_argument if p(z) != p(1/z).
  explicit SymmetricLaurent(LaurentPoly p);

  const LaurentPoly& poly() const { return p_; }
  operator const LaurentPoly&() const { return p_; }  // NOLINT(google-explicit-constructor)
  long degree() const { return p_.max_exponent(); }
  std::string str() const { return p_.str(); }

  friend bool operator==(const SymmetricLaurent& a, const SymmetricLaurent& b) { return a.p_ == b.p_; }

private:
  LaurentPoly p_;
};

/// ∏_{j<k} (1 - qbase^j a z^direction), direction ∈ {+1, -1}.
LaurentPoly qpoch_laurent(const Rat& a, int direction, const Rat& qbase, std::size_t k);

/// Σ coeffs[k] x^k with x = (z + 1/z)/2, lowest degree first.
SymmetricLaurent x_embed(std::span<const Rat> coeffs);

/// Inverse of x_embed: the coefficient sequence in x, lowest degree first.
std::vector<Rat> x_coefficients(const SymmetricLaurent& s);

/// Dense polynomial in one variable, lowest degree first, no trailing zeros.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  static Poly x();

  const std::vector<Rat>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

  Rat operator()(const Rat& x) const;
  /// p(a + b y) as a polynomial in y.
  Poly compose_linear(const Rat& a, const Rat& b) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// "c_k x^k + ..." descending.
  std::string str() const;

private:
  void trim();
  std::vector<Rat> c_;
};

Poly pow(const Poly& p, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace askey
