#include "askey/families.hpp"

#include "askey/errors.hpp"
#include "askey/series.hpp"

namespace askey {

namespace {

long sl(std::size_t v) { return static_cast<long>(v); }

void require(bool ok, const char* what) {
  if (!ok) throw InadmissibleParams(what);
}

Rat factorial(std::size_t k) { return pochhammer(Rat(1), k); }

}  // namespace

QParams::QParams(Rat t, Rat s) : t_(std::move(t)), s_(std::move(s)) {
  require(t_ > Rat(0) && t_ < Rat(1), "QParams: need 0 < t < 1");
  require(s_ > Rat(0), "QParams: need s > 0");
  require(s_ * t_ < Rat(1), "QParams: need s t < 1");
}

QParams QParams::shifted(long k) const { return QParams(t_, pow(t_, 2 * k) * s_); }

JacobiParams::JacobiParams(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {
  require(alpha > Rat(-1) && beta > Rat(-1), "Jacobi: need alpha, beta > -1");
}

KrawtchoukParams::KrawtchoukParams(Rat p_, std::size_t N_) : p(std::move(p_)), N(N_) {
  require(p > Rat(0) && p < Rat(1), "Krawtchouk: need 0 < p < 1");
  require(N >= 1, "Krawtchouk: need N >= 1");
}

HahnParams::HahnParams(Rat a, Rat b, std::size_t N_) : alpha(std::move(a)), beta(std::move(b)), N(N_) {
  require(alpha > Rat(-1) && beta > Rat(-1), "Hahn: need alpha, beta > -1");
  require(N >= 1, "Hahn: need N >= 1");
}

// N = 0 is accepted: the linearization grids include m = 0.
RacahParams::RacahParams(Rat a, Rat b, std::size_t N_, Rat d)
    : alpha(std::move(a)), beta(std::move(b)), N(N_), delta(std::move(d)) {}

WilsonParams WilsonParams::dual() const {
  const Rat ap = (a + b + c + d - Rat(1)) / Rat(2);
  return WilsonParams{ap, a + b - ap, a + c - ap, a + d - ap};
}

AWParams::AWParams(Rat a_, Rat b_, Rat c_, Rat d_, Rat q_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), qbase(std::move(q_)) {
  require(qbase > Rat(0) && qbase < Rat(1), "Askey-Wilson: need 0 < q < 1");
  const Rat one(1);
  require(a * b != one && a * c != one && a * d != one && b * c != one && b * d != one && c * d != one,
          "Askey-Wilson: pairwise products must differ from 1");
}

QRacahParams::QRacahParams(Rat a, Rat b, Rat d, std::size_t N_, Rat q_)
    : alpha(std::move(a)), beta(std::move(b)), delta(std::move(d)), N(N_), qbase(std::move(q_)) {
  require(qbase > Rat(0) && qbase < Rat(1), "q-Racah: need 0 < q < 1");
  for (std::size_t x = 0; x <= N; ++x) (void)qracah_weight(x, *this);
}

// Jacobi

Rat jacobi_r(std::size_t n, const JacobiParams& jp, const Rat& x) {
  return hyper_f({Rat(-sl(n)), Rat(sl(n) + 1) + jp.alpha + jp.beta}, {jp.alpha + Rat(1)},
                 (Rat(1) - x) / Rat(2), n);
}

Poly jacobi_poly(std::size_t n, const JacobiParams& jp) {
  // sum_k c_k ((1-x)/2)^k with c_k the 2F1 term
  const Poly u(std::vector<Rat>{Rat(1, 2), Rat(-1, 2)});
  Poly result;
  Poly upow(Rat(1));
  Rat term(1);
  const Rat ab1 = jp.alpha + jp.beta + Rat(1);
  for (std::size_t k = 0; k <= n; ++k) {
    result += upow * term;
    if (k == n) break;
    term *= Rat(sl(k) - sl(n)) * (Rat(sl(n + k)) + ab1) / ((jp.alpha + Rat(sl(k) + 1)) * Rat(sl(k) + 1));
    upow = upow * u;
  }
  return result;
}

Rat ultraspherical_r(std::size_t n, const Rat& alpha, const Rat& x) {
  return jacobi_r(n, JacobiParams(alpha, alpha), x);
}

Poly ultraspherical_poly(std::size_t n, const Rat& alpha) {
  return jacobi_poly(n, JacobiParams(alpha, alpha));
}

std::vector<Rat> ultraspherical_coeffs(std::size_t n, const Rat& alpha) {
  return ultraspherical_poly(n, alpha).coeffs();
}

// Krawtchouk, Hahn

Rat krawtchouk(std::size_t n, std::size_t x, const KrawtchoukParams& kp) {
  return hyper_f({Rat(-sl(n)), Rat(-sl(x))}, {Rat(-sl(kp.N))}, kp.p.inverse(), n);
}

Rat krawtchouk_weight(std::size_t x, const KrawtchoukParams& kp) {
  const Rat binom = factorial(kp.N) / (factorial(x) * factorial(kp.N - x));
  return binom * pow(kp.p, sl(x)) * pow(Rat(1) - kp.p, sl(kp.N - x));
}

Rat hahn(std::size_t n, std::size_t x, const HahnParams& hp) {
  return hyper_f({Rat(-sl(n)), Rat(sl(n) + 1) + hp.alpha + hp.beta, Rat(-sl(x))},
                 {hp.alpha + Rat(1), Rat(-sl(hp.N))}, Rat(1), n);
}

Rat hahn_weight(std::size_t x, const HahnParams& hp) {
  return pochhammer(hp.alpha + Rat(1), x) * pochhammer(hp.beta + Rat(1), hp.N - x) /
         (factorial(x) * factorial(hp.N - x));
}

Rat dual_hahn(std::size_t n, std::size_t x, const HahnParams& hp) {
  return hyper_f({Rat(-sl(n)), Rat(-sl(x)), Rat(sl(x) + 1) + hp.alpha + hp.beta},
                 {hp.alpha + Rat(1), Rat(-sl(hp.N))}, Rat(1), n);
}

// Racah

Rat racah_series(std::size_t n, std::size_t x, const Rat& alpha, const Rat& beta, const Rat& gamma,
                 const Rat& delta) {
  return hyper_f({Rat(-sl(n)), Rat(sl(n) + 1) + alpha + beta, Rat(-sl(x)), Rat(sl(x) + 1) + gamma + delta},
                 {alpha + Rat(1), beta + delta + Rat(1), gamma + Rat(1)}, Rat(1), n);
}

Rat racah(std::size_t n, std::size_t x, const RacahParams& rp) {
  return racah_series(n, x, rp.alpha, rp.beta, rp.gamma(), rp.delta);
}

Rat racah_weight(std::size_t x, const RacahParams& rp) {
  const Rat& a = rp.alpha;
  const Rat& b = rp.beta;
  const Rat g = rp.gamma();
  const Rat& d = rp.delta;
  const Rat one(1);
  const Rat den = pochhammer(g + d + one - a, x) * pochhammer(g + one - b, x) * pochhammer(d + one, x) *
                  factorial(x) * (g + d + one);
  if (den.is_zero()) throw VanishingDenominator("Racah weight denominator vanished", x);
  return pochhammer(a + one, x) * pochhammer(b + d + one, x) * pochhammer(g + one, x) *
         pochhammer(g + d + one, x) * (g + d + one + Rat(2 * sl(x))) / den;
}

Norms racah_norms(std::size_t n, const RacahParams& rp) {
  const Rat& a = rp.alpha;
  const Rat& b = rp.beta;
  const Rat g = rp.gamma();
  const Rat& d = rp.delta;
  const Rat one(1);
  const std::size_t N = rp.N;

  const Rat h0den = pochhammer(a - d + one, N) * pochhammer(b + one, N);
  if (h0den.is_zero()) throw VanishingDenominator("Racah h_0 denominator vanished", N);
  const Rat h0 = pochhammer(a + b + Rat(2), N) * pochhammer(-d, N) / h0den;

  // (a+b+1)/((a+b+2n+1)(a+b+1)_n) = 1/((a+b+2n+1)(a+b+2)_{n-1}) for n >= 1
  Rat lead(1);
  if (n > 0) {
    const Rat l = (a + b + Rat(2 * sl(n) + 1)) * pochhammer(a + b + Rat(2), n - 1);
    if (l.is_zero()) throw VanishingDenominator("Racah norm ratio denominator vanished", n);
    lead = l.inverse();
  }
  const Rat den = pochhammer(a + one, n) * pochhammer(b + d + one, n) * pochhammer(g + one, n);
  if (den.is_zero()) throw VanishingDenominator("Racah norm ratio denominator vanished", n);
  const Rat ratio = lead * pochhammer(b + one, n) * pochhammer(a + b - g + one, n) *
                    pochhammer(a - d + one, n) * factorial(n) / den;
  return {ratio, h0};
}

Rat wilson_dual_phi(std::size_t n, std::size_t m, const WilsonParams& wp) {
  // a + ix = -m, a - ix = 2a + m
  return hyper_f({Rat(-sl(n)), Rat(sl(n) - 1) + wp.a + wp.b + wp.c + wp.d, Rat(-sl(m)),
                  Rat(2) * wp.a + Rat(sl(m))},
                 {wp.a + wp.b, wp.a + wp.c, wp.a + wp.d}, Rat(1), n);
}

// Askey-Wilson type

SymmetricLaurent laurent_4phi3(std::size_t n, const Rat& num0, const Rat& num1, const Rat& a,
                               const Rat& den0, const Rat& den1, const Rat& den2, const Rat& qbase) {
  const Rat one(1);
  LaurentPoly total;
  LaurentPoly block(one);  // (az, a/z; q)_k
  Rat coef(1);
  Rat qk(1);
  for (std::size_t k = 0;; ++k) {
    total += block * coef;
    if (k == n) break;
    const Rat num = (one - num0 * qk) * (one - num1 * qk);
    if (num.is_zero()) break;
    const Rat den = (one - qk * qbase) * (one - den0 * qk) * (one - den1 * qk) * (one - den2 * qk);
    if (den.is_zero()) throw DenominatorVanished(k);
    coef *= num * qbase / den;
    LaurentPoly f1(one), f2(one);
    f1.add_term(1, -a * qk);
    f2.add_term(-1, -a * qk);
    block *= f1;
    block *= f2;
    qk *= qbase;
  }
  return SymmetricLaurent(std::move(total));
}

SymmetricLaurent askey_wilson_r(std::size_t n, const AWParams& p) {
  const Rat& q = p.qbase;
  return laurent_4phi3(n, pow(q, -sl(n)), pow(q, sl(n) - 1) * p.a * p.b * p.c * p.d, p.a, p.a * p.b,
                       p.a * p.c, p.a * p.d, q);
}

Rat askey_wilson_value(std::size_t n, const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                       const Rat& qbase, const Rat& z) {
  if (z.is_zero()) throw ZeroArgument();
  const Rat one(1);
  const Rat n0 = pow(qbase, -sl(n));
  const Rat n1 = pow(qbase, sl(n) - 1) * a * b * c * d;
  const Rat az = a * z;
  const Rat aoz = a / z;
  const Rat ab = a * b, ac = a * c, ad = a * d;
  std::vector<Rat> qpow{one};
  auto qk = [&](std::size_t k) -> const Rat& {
    while (qpow.size() <= k) qpow.push_back(qpow.back() * qbase);
    return qpow[k];
  };
  return sum_terminating<Rat>(
      n,
      [&](std::size_t k) {
        const Rat& x = qk(k);
        return (one - n0 * x) * (one - n1 * x) * (one - az * x) * (one - aoz * x) * qbase;
      },
      [&](std::size_t k) {
        const Rat& x = qk(k);
        return (one - x * qbase) * (one - ab * x) * (one - ac * x) * (one - ad * x);
      });
}

SymmetricLaurent cqu_r(std::size_t n, const QParams& qp) {
  const Rat& t = qp.t();
  const Rat& s = qp.s();
  const Rat t3s = pow(t, 3) * s;
  return askey_wilson_r(n, AWParams(t * s, t3s, -(t * s), -t3s, qp.q()));
}

SymmetricLaurent cqu_r_alt(std::size_t n, const QParams& qp) {
  const Rat p = qp.qhalf();
  const Rat beta = qp.beta();
  const Rat t2s = qp.qhalf() * qp.s();
  return laurent_4phi3(n, pow(p, -sl(n)), pow(p, sl(n) + 1) * beta, qp.a(), -(p * beta), t2s, -t2s, p);
}

Rat cqu_value(std::size_t n, const QParams& qp, const Rat& z) {
  const Rat& t = qp.t();
  const Rat& s = qp.s();
  const Rat t3s = pow(t, 3) * s;
  return askey_wilson_value(n, t * s, t3s, -(t * s), -t3s, qp.q(), z);
}

// q-Racah

Rat qracah_series(std::size_t n, std::size_t x, const Rat& alpha, const Rat& beta, const Rat& gamma,
                  const Rat& delta, const Rat& q) {
  return hyper_phi({pow(q, -sl(n)), pow(q, sl(n) + 1) * alpha * beta, pow(q, -sl(x)),
                    pow(q, sl(x) + 1) * gamma * delta},
                   {q * alpha, q * beta * delta, q * gamma}, q, q, n);
}

Rat qracah(std::size_t n, std::size_t x, const QRacahParams& p) {
  return qracah_series(n, x, p.alpha, p.beta, p.gamma(), p.delta, p.qbase);
}

Rat qracah_weight_general(std::size_t x, const Rat& a, const Rat& b, const Rat& g, const Rat& d,
                          const Rat& q) {
  const Rat one(1);
  const Rat gd = g * d;
  const Rat den = pow(a * b * q, sl(x)) * (one - gd * q) * qpochhammer(q, q, x) *
                  qpochhammer(gd * q / a, q, x) * qpochhammer(g * q / b, q, x) * qpochhammer(d * q, q, x);
  if (den.is_zero()) throw VanishingDenominator("q-Racah weight denominator vanished", x);
  return (one - gd * pow(q, 2 * sl(x) + 1)) * qpochhammer(a * q, q, x) * qpochhammer(b * d * q, q, x) *
         qpochhammer(g * q, q, x) * qpochhammer(gd * q, q, x) / den;
}

Rat qracah_weight(std::size_t x, const QRacahParams& p) {
  return qracah_weight_general(x, p.alpha, p.beta, p.gamma(), p.delta, p.qbase);
}

Norms qracah_norms(std::size_t n, const QRacahParams& p) {
  const Rat& a = p.alpha;
  const Rat& b = p.beta;
  const Rat g = p.gamma();
  const Rat& d = p.delta;
  const Rat& q = p.qbase;
  const Rat one(1);
  const std::size_t N = p.N;

  const Rat h0den = qpochhammer(q * a / d, q, N) * qpochhammer(q * b, q, N);
  if (h0den.is_zero()) throw VanishingDenominator("q-Racah h_0 denominator vanished", N);
  const Rat h0 = qpochhammer(q * q * a * b, q, N) * qpochhammer(d.inverse(), q, N) / h0den;

  // (1 - abq)/((1 - abq^{2n+1})(qab; q)_n) = 1/((1 - abq^{2n+1})(q^2 ab; q)_{n-1})
  Rat lead(1);
  if (n > 0) {
    const Rat l = (one - a * b * pow(q, 2 * sl(n) + 1)) * qpochhammer(q * q * a * b, q, n - 1);
    if (l.is_zero()) throw VanishingDenominator("q-Racah norm ratio denominator vanished", n);
    lead = l.inverse();
  }
  const Rat den = qpochhammer(q * a, q, n) * qpochhammer(q * g, q, n) * qpochhammer(q * b * d, q, n);
  if (den.is_zero()) throw VanishingDenominator("q-Racah norm ratio denominator vanished", n);
  const Rat ratio = lead * pow(q * g * d, sl(n)) * qpochhammer(q, q, n) * qpochhammer(q * b, q, n) *
                    qpochhammer(q * a * b / g, q, n) * qpochhammer(q * a / d, q, n) / den;
  return {ratio, h0};
}

QRacahParams qracah_linearization_params(const QParams& qp, std::size_t l, std::size_t m) {
  const Rat& t = qp.t();
  const Rat br = qp.beta() / (t * t);
  const Rat delta = (qp.beta() * pow(t, 4 * sl(l) + 2)).inverse();
  return QRacahParams(br, br, delta, m, qp.q());
}

RacahParams racah_linearization_params(const Rat& alpha, std::size_t l, std::size_t m) {
  const Rat h(1, 2);
  return RacahParams(alpha - h, alpha - h, m, Rat(-sl(l)) - alpha - h);
}

const std::vector<std::string_view>& family_ids() {
  static const std::vector<std::string_view> ids{"jacobi", "ultraspherical", "krawtchouk", "hahn",
                                                 "dual-hahn", "racah", "wilson-dual", "askey-wilson",
                                                 "cqu", "cqu-alt", "q-racah"};
  return ids;
}

}  // namespace askey
