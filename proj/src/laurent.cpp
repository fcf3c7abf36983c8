#include "askey/laurent.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "askey/errors.hpp"

namespace askey {

LaurentPoly::LaurentPoly(const Rat& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const Rat& coeff, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

Rat LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

long LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
long LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

void LaurentPoly::add_term(long exponent, const Rat& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    os << c.abs().str();
    if (e == 1) os << " z";
    else if (e != 0) os << " z^" << e;
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
  LaurentPoly r(Rat(1));
  for (unsigned i = 0; i < exponent; ++i) r *= p;
  return r;
}

Rat eval_at(const LaurentPoly& p, const Rat& z0) {
  if (z0.is_zero()) throw ZeroArgument();
  Rat r(0);
  for (const auto& [e, c] : p.terms()) r += c * pow(z0, e);
  return r;
}

LaurentPoly invert_variable(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

LaurentPoly negate_variable(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, e % 2 == 0 ? c : -c);
  return r;
}

SymmetricLaurent::SymmetricLaurent(LaurentPoly p) : p_(std::move(p)) {
  for (const auto& [e, c] : p_.terms()) {
    if (p_.coeff(-e) != c) {
      throw std::invalid_argument("Laurent polynomial is not symmetric under z -> 1/z at exponent " +
                                  std::to_string(e));
    }
  }
}

LaurentPoly qpoch_laurent(const Rat& a, int direction, const Rat& qbase, std::size_t k) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  LaurentPoly r(Rat(1));
  Rat f = a;
  for (std::size_t j = 0; j < k; ++j) {
    LaurentPoly factor(Rat(1));
    factor.add_term(direction, -f);
    r *= factor;
    f *= qbase;
  }
  return r;
}

SymmetricLaurent x_embed(std::span<const Rat> coeffs) {
  LaurentPoly x = LaurentPoly::monomial(Rat(1, 2), 1) + LaurentPoly::monomial(Rat(1, 2), -1);
  // Horner in x.
  LaurentPoly r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    r *= x;
    r += LaurentPoly(*it);
  }
  return SymmetricLaurent(std::move(r));
}

std::vector<Rat> x_coefficients(const SymmetricLaurent& s) {
  // Peel off the top power: c z^d + ... matches 2^d c x^d + lower.
  LaurentPoly rest = s.poly();
  const long d = rest.max_exponent();
  std::vector<Rat> out(static_cast<std::size_t>(d) + 1, Rat(0));
  const LaurentPoly x = LaurentPoly::monomial(Rat(1, 2), 1) + LaurentPoly::monomial(Rat(1, 2), -1);
  for (long k = d; k >= 0; --k) {
    const Rat top = rest.coeff(k);
    if (top.is_zero()) continue;
    const Rat ck = top * pow(Rat(2), k);
    out[static_cast<std::size_t>(k)] = ck;
    rest -= pow(x, static_cast<unsigned>(k)) * ck;
  }
  if (!rest.is_zero()) throw std::logic_error("x_coefficients: residual after peeling");
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Rat& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::compose_linear(const Rat& a, const Rat& b) const {
  const Poly lin(std::vector<Rat>{a, b});
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + Poly(*it);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  for (auto& v : c_) v *= c;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    os << c.abs().str();
    if (i == 1) os << " x";
    else if (i > 1) os << " x^" << i;
  }
  return os.str();
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly r(Rat(1));
  for (unsigned i = 0; i < exponent; ++i) r = r * p;
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace askey
