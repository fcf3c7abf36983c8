#include <string>

#include "askey/errors.hpp"
#include "askey/identities.hpp"
#include "askey/series.hpp"

namespace askey {

namespace {

long sl(std::size_t v) { return static_cast<long>(v); }

Rat factorial(std::size_t n) { return pochhammer(Rat(1), n); }

Rat binomial(std::size_t n, std::size_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

std::string at(const char* a, std::size_t i) { return std::string(a) + "=" + std::to_string(i); }

Rat racah_quotient(const Rat& alpha, std::size_t l, std::size_t m, std::size_t j) {
  const RacahParams rp = racah_linearization_params(alpha, l, m);
  return racah_weight(j, rp) / racah_norms(0, rp).h0;
}

// (alpha+k)/(alpha+k/2), taken as 1 at k = 0
Rat gegenbauer_ratio(const Rat& alpha, std::size_t k) {
  if (k == 0) return Rat(1);
  return (alpha + Rat(sl(k))) / (alpha + Rat(sl(k), 2));
}

Poly chebyshev_t(std::size_t k) {
  Poly prev(Rat(1)), cur = Poly::x();
  if (k == 0) return prev;
  for (std::size_t i = 1; i < k; ++i) {
    Poly next = Poly::x() * cur * Rat(2) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void require_alpha(const Rat& alpha, const Rat& bound, const char* what) {
  if (alpha <= bound) throw InadmissibleParams(std::string(what) + ": alpha out of range");
}

}  // namespace

Rat legendre_linearization_coefficient(std::size_t l, std::size_t m, std::size_t j) {
  const Rat h(1, 2);
  return pochhammer(h, j) * pochhammer(h, l - j) * pochhammer(h, m - j) * factorial(l + m - j) /
         (factorial(j) * factorial(l - j) * factorial(m - j) * pochhammer(Rat(3, 2), l + m - j)) *
         Rat(2 * sl(l + m - 2 * j) + 1);
}

CheckReport check_linearization_classical(const Rat& alpha, std::size_t l, std::size_t m, const CheckOptions& opt) {
  if (m > l) throw std::invalid_argument("linearization: need m <= l");
  require_alpha(alpha, Rat(-1, 2), "linearization");
  Comparator cmp(opt.mutation);
  const Rat h = alpha + Rat(1, 2);
  const Rat a2 = Rat(2) * alpha + Rat(1);
  const Rat pre = factorial(l) * factorial(m) / (pochhammer(a2, l) * pochhammer(a2, m));
  Poly rhs5, rhs6;
  for (std::size_t j = 0; j <= m; ++j) {
    const Rat c5 = pre * (Rat(sl(l + m - 2 * j)) + h) / h * pochhammer(h, j) * pochhammer(h, l - j) *
                   pochhammer(h, m - j) * pochhammer(a2, l + m - j) /
                   (factorial(j) * factorial(l - j) * factorial(m - j) * pochhammer(h + Rat(1), l + m - j));
    const Rat c6 = racah_quotient(alpha, l, m, j);
    cmp.equal(at("j", j) + " coefficient", c5, c6);
    cmp.nonnegative(at("j", j) + " coefficient", c5);
    const Poly r = ultraspherical_poly(l + m - 2 * j, alpha);
    rhs5 += r * c5;
    rhs6 += r * c6;
  }
  const Poly lhs = ultraspherical_poly(l, alpha) * ultraspherical_poly(m, alpha);
  cmp.equal("explicit form", lhs, rhs5);
  cmp.equal("weight form", lhs, rhs6);
  return cmp.report("linearization.classical",
                    {{"alpha", alpha.str()}, {"l", std::to_string(l)}, {"m", std::to_string(m)}});
}

CheckReport check_linearization_legendre(std::size_t l, std::size_t m, const CheckOptions& opt) {
  if (m > l) throw std::invalid_argument("linearization: need m <= l");
  Comparator cmp(opt.mutation);
  Poly rhs;
  for (std::size_t j = 0; j <= m; ++j) {
    const Rat c = legendre_linearization_coefficient(l, m, j);
    cmp.equal(at("j", j) + " coefficient", c, racah_quotient(Rat(0), l, m, j));
    cmp.nonnegative(at("j", j) + " coefficient", c);
    rhs += ultraspherical_poly(l + m - 2 * j, Rat(0)) * c;
  }
  cmp.equal("P_l P_m", ultraspherical_poly(l, Rat(0)) * ultraspherical_poly(m, Rat(0)), rhs);
  return cmp.report("linearization.legendre", {{"l", std::to_string(l)}, {"m", std::to_string(m)}});
}

CheckReport check_dual_addition_classical(const Rat& alpha, std::size_t l, std::size_t m, std::size_t j,
                                          const CheckOptions& opt) {
  if (m > l || j > m) throw std::invalid_argument("dual addition: need j <= m <= l");
  require_alpha(alpha, Rat(-1, 2), "dual addition");
  Comparator cmp(opt.mutation);
  const RacahParams rp = racah_linearization_params(alpha, l, m);
  const Poly x2m1 = Poly::x() * Poly::x() - Poly(Rat(1));
  const Rat a2 = Rat(2) * alpha + Rat(1);
  Poly sum;
  Poly pw(Rat(1));
  for (std::size_t k = 0; k <= m; ++k) {
    const Rat ak = alpha + Rat(sl(k));
    const Rat c = gegenbauer_ratio(alpha, k) * pochhammer(Rat(-sl(l)), k) * pochhammer(Rat(-sl(m)), k) *
                  pochhammer(a2, k) /
                  (pow(Rat(4), sl(k)) * pochhammer(alpha + Rat(1), k) * pochhammer(alpha + Rat(1), k) *
                   factorial(k)) *
                  racah(k, j, rp);
    sum += pw * ultraspherical_poly(l - k, ak) * ultraspherical_poly(m - k, ak) * c;
    pw = pw * x2m1;
  }
  cmp.equal("sum over k", ultraspherical_poly(l + m - 2 * j, alpha), sum);
  return cmp.report("dual-addition.classical", {{"alpha", alpha.str()},
                                                {"l", std::to_string(l)},
                                                {"m", std::to_string(m)},
                                                {"j", std::to_string(j)}});
}

CheckReport check_addition_classical(const Rat& alpha, std::size_t n, const PythagoreanPair& x,
                                     const PythagoreanPair& y, const CheckOptions& opt) {
  require_alpha(alpha, Rat(-1, 2), "addition formula");
  const Rat rr = x.r * y.r;
  if (rr.is_zero()) throw InadmissiblePoint("addition formula: sin x sin y must be nonzero");
  Comparator cmp(opt.mutation);
  const Rat xy = x.x * y.x;
  const Rat a2 = Rat(2) * alpha + Rat(1);
  Poly rhs_t, rhs_z;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rat ak = alpha + Rat(sl(k));
    const Rat c = binomial(n, k) * gegenbauer_ratio(alpha, k) * pochhammer(Rat(sl(n)) + a2, k) * pochhammer(a2, k) /
                  (pow(Rat(4), sl(k)) * pochhammer(alpha + Rat(1), k) * pochhammer(alpha + Rat(1), k)) *
                  pow(rr, sl(k)) * ultraspherical_r(n - k, ak, x.x) * ultraspherical_r(n - k, ak, y.x);
    const Poly rk = ultraspherical_poly(k, alpha - Rat(1, 2));
    rhs_t += rk * c;
    rhs_z += rk.compose_linear(-xy / rr, rr.inverse()) * c;
  }
  const Poly rn = ultraspherical_poly(n, alpha);
  cmp.equal("polynomial in t", rn.compose_linear(xy, rr), rhs_t);
  cmp.equal("polynomial in z", rn, rhs_z);
  return cmp.report("addition.classical",
                    {{"alpha", alpha.str()}, {"n", std::to_string(n)}, {"x", x.str()}, {"y", y.str()}});
}

CheckReport check_addition_legendre(std::size_t n, const PythagoreanPair& t1, const PythagoreanPair& t2,
                                    const PythagoreanPair& phi, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const Rat zero(0);
  const Rat nf = factorial(n);
  Poly rhs;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rat kk(sl(k));
    const JacobiParams jp(kk, kk);
    const Rat norm = pochhammer(kk + Rat(1), n - k) / factorial(n - k);
    Rat c = k == 0 ? Rat(1)
                   : Rat(2) * factorial(n - k) * factorial(n + k) / (pow(Rat(4), sl(k)) * nf * nf);
    c *= pow(t1.r, sl(k)) * norm * jacobi_r(n - k, jp, t1.x) * pow(t2.r, sl(k)) * norm * jacobi_r(n - k, jp, t2.x);
    rhs += chebyshev_t(k) * c;
  }
  const Poly pn = ultraspherical_poly(n, zero);
  cmp.equal("polynomial in cos phi", pn.compose_linear(t1.x * t2.x, t1.r * t2.r), rhs);
  cmp.equal("at phi", pn(t1.x * t2.x + t1.r * t2.r * phi.x), rhs(phi.x));
  return cmp.report("addition.legendre",
                    {{"n", std::to_string(n)}, {"t1", t1.str()}, {"t2", t2.str()}, {"phi", phi.str()}});
}

std::vector<Rat> ultraspherical_moments(const Rat& alpha, std::size_t count) {
  require_alpha(alpha, Rat(-1, 2), "moments");
  std::vector<Rat> mu;
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0) mu.emplace_back(1);
    else if (i % 2) mu.emplace_back(0);
    else mu.push_back(mu[i - 2] * Rat(sl(i) - 1) / (Rat(sl(i)) + Rat(2) * alpha));
  }
  return mu;
}

CheckReport check_product_formula_classical(const Rat& alpha, std::size_t n, const PythagoreanPair& x,
                                            const PythagoreanPair& y, const CheckOptions& opt) {
  require_alpha(alpha, Rat(-1, 2), "product formula");
  Comparator cmp(opt.mutation);
  const std::vector<Rat> mu = ultraspherical_moments(alpha, n + 1);
  // Beta-function ratio B(k+1/2, alpha+1/2)/B(1/2, alpha+1/2)
  Rat beta_ratio(1);
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    beta_ratio *= (Rat(sl(k)) - Rat(1, 2)) / (Rat(sl(k)) + alpha);
    cmp.equal(at("moment", 2 * k), mu[2 * k], beta_ratio);
  }
  const Poly p = ultraspherical_poly(n, alpha).compose_linear(x.x * y.x, x.r * y.r);
  Rat integral(0);
  for (std::size_t i = 0; i < p.size(); ++i) integral += p.coeff(i) * mu[i];
  cmp.equal("integral", integral, ultraspherical_r(n, alpha, x.x) * ultraspherical_r(n, alpha, y.x));
  return cmp.report("product-formula.classical",
                    {{"alpha", alpha.str()}, {"n", std::to_string(n)}, {"x", x.str()}, {"y", y.str()}});
}

}  // namespace askey
