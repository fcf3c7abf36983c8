#include <string>

#include "askey/errors.hpp"
#include "askey/identities.hpp"
#include "askey/series.hpp"

namespace askey {

namespace {

long sl(std::size_t v) { return static_cast<long>(v); }

std::string idx(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

// x^2 = (z + 1/z)^2 / 4
LaurentPoly x_squared() {
  LaurentPoly x2 = LaurentPoly::monomial(Rat(1, 4), 2) + LaurentPoly::monomial(Rat(1, 4), -2);
  x2.add_term(0, Rat(1, 2));
  return x2;
}

std::vector<SymmetricLaurent> cqu_table(const QParams& qp, std::size_t nmax) {
  std::vector<SymmetricLaurent> r;
  for (std::size_t n = 0; n <= nmax; ++n) r.push_back(cqu_r(n, qp));
  return r;
}

// coefficient of x^n
Rat cqu_leading_x(std::size_t n, const QParams& qp) {
  return pow(Rat(2) * qp.a(), sl(n)) * qpochhammer(qp.qhalf() * qp.beta(), qp.q(), n) /
         qpochhammer(qp.q() * qp.beta() * qp.beta(), qp.q(), n);
}

// (±ts z, ±ts/z; t^2)_k
LaurentPoly pm_block(const QParams& qp, std::size_t k) {
  const Rat a = qp.a();
  const Rat p = qp.qhalf();
  return qpoch_laurent(a, 1, p, k) * qpoch_laurent(-a, 1, p, k) * qpoch_laurent(a, -1, p, k) *
         qpoch_laurent(-a, -1, p, k);
}

LaurentPoly S_brute(std::size_t k, std::size_t l, std::size_t m, const QParams& qp,
                    const std::vector<SymmetricLaurent>& R) {
  const QRacahParams p = qracah_linearization_params(qp, l, m);
  LaurentPoly total;
  for (std::size_t j = 0; j <= m; ++j) {
    total += R[l + m - 2 * j].poly() * (qracah_weight(j, p) * qracah(k, j, p));
  }
  return total;
}

LaurentPoly S_closed(std::size_t k, std::size_t l, std::size_t m, const QParams& qp) {
  const Rat& t = qp.t();
  const Rat q = qp.q();
  const Rat beta = qp.beta();
  const Rat qh = qp.qhalf();
  Rat c = pow(pow(t, 2 * sl(l + m + 1)) * beta, sl(k)) *
          qpochhammer(pow(t, -4 * sl(l + m) + 2) / beta, q, k) /
          (qpochhammer(-(qh * beta), q, k) * pm_qpochhammer(q * beta, q, k));
  const Rat b2 = pow(q, 2 * sl(k) + 1) * beta * beta;
  c *= qpochhammer(b2, q, l - k) * qpochhammer(b2, q, m - k) / qpochhammer(b2, q, l + m - 2 * k);
  const Rat b1 = pow(q, sl(k)) * qh * beta;
  c *= qpochhammer(b1, q, l + m - 2 * k) / (qpochhammer(b1, q, l - k) * qpochhammer(b1, q, m - k));
  const QParams sk = qp.shifted(sl(k));
  return pm_block(qp, k) * cqu_r(l - k, sk).poly() * cqu_r(m - k, sk).poly() * c;
}

void theorem_5_1_into(Comparator& cmp, const QParams& qp, std::size_t l, std::size_t m, const std::string& pre) {
  const auto R = cqu_table(qp, l + m);
  for (std::size_t k = 0; k <= m; ++k) {
    cmp.equal(pre + idx({{"k", k}}), S_brute(k, l, m, qp, R), S_closed(k, l, m, qp));
  }
  const Rat h0 = qracah_norms(0, qracah_linearization_params(qp, l, m)).h0;
  cmp.equal(pre + "k=0 h0 R_l R_m", S_closed(0, l, m, qp), R[l].poly() * R[m].poly() * h0);
}

}  // namespace

CheckReport check_leading_coefficient(const QParams& qp, std::size_t nmax, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  for (std::size_t n = 0; n <= nmax; ++n) {
    const SymmetricLaurent r = cqu_r(n, qp);
    const std::vector<Rat> xc = x_coefficients(r);
    cmp.equal(idx({{"n", n}}) + " x^n", xc.size() == n + 1 ? xc.back() : Rat(0), cqu_leading_x(n, qp));
    cmp.equal(idx({{"n", n}}) + " R_n[ts]", eval_at(r, qp.a()), Rat(1));
  }
  ParamList p = qparams_list(qp);
  p.emplace_back("nmax", std::to_string(nmax));
  return cmp.report("structure.leading-coefficient", std::move(p));
}

CheckReport check_weight_ratio(const QParams& qp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const Rat c = qp.qhalf() * qp.beta();
  LaurentPoly f1(Rat(1)), f2(Rat(1));
  f1.add_term(2, -c);
  f2.add_term(-2, -c);
  const LaurentPoly lhs = f1 * f2;
  const LaurentPoly x2 = x_squared();
  const LaurentPoly rhs1 = LaurentPoly((Rat(1) + c) * (Rat(1) + c)) - x2 * (Rat(4) * c);
  const Rat a = (qp.a() + qp.a().inverse()) / Rat(2);
  const LaurentPoly rhs2 = (LaurentPoly(a * a) - x2) * (Rat(4) * c);
  cmp.equal("first form", lhs, rhs1);
  cmp.equal("second form", lhs, rhs2);
  return cmp.report("structure.weight-ratio", qparams_list(qp));
}

CheckReport check_difference_formula(const QParams& qp, std::size_t nmax, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const Rat& t = qp.t();
  const Rat q = qp.q();
  const Rat beta = qp.beta();
  const Rat qh = qp.qhalf();
  const Rat a = (qp.a() + qp.a().inverse()) / Rat(2);
  const LaurentPoly factor = x_squared() - LaurentPoly(a * a);
  const QParams shifted = qp.shifted(1);
  const auto R = cqu_table(qp, nmax);
  for (std::size_t n = 2; n <= nmax; ++n) {
    const Rat pre = Rat(4) * pow(t, 6 - 2 * sl(n)) * beta / ((Rat(1) + qh * beta) * (Rat(1) + q * beta)) *
                    (Rat(1) - pow(t, 4 * sl(n) - 2) * beta) / (Rat(1) - q * beta);
    const LaurentPoly lhs = R[n].poly() - R[n - 2].poly();
    cmp.equal(idx({{"n", n}}), lhs, factor * cqu_r(n - 2, shifted).poly() * pre);
    cmp.equal(idx({{"n", n}}) + " at x=a", eval_at(lhs, qp.a()), Rat(0));
    cmp.equal(idx({{"n", n}}) + " at x=a via 1/z", eval_at(lhs, qp.a().inverse()), Rat(0));
    cmp.equal(idx({{"n", n}}) + " k_n/k'_{n-2}", pre, cqu_leading_x(n, qp) / cqu_leading_x(n - 2, shifted));
  }
  ParamList p = qparams_list(qp);
  p.emplace_back("nmax", std::to_string(nmax));
  return cmp.report("structure.difference", std::move(p));
}

CheckReport check_qracah_at_N(const QRacahParams& p, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const Rat& q = p.qbase;
  for (std::size_t n = 0; n <= p.N; ++n) {
    const Rat rhs = qpochhammer(q * p.beta, q, n) * qpochhammer(q * p.alpha / p.delta, q, n) /
                    (qpochhammer(q * p.alpha, q, n) * qpochhammer(q * p.beta * p.delta, q, n)) *
                    pow(p.delta, sl(n));
    cmp.equal(idx({{"n", n}}) + " x=N", qracah(n, p.N, p), rhs);
    cmp.equal(idx({{"n", n}}) + " x=0", qracah(n, 0, p), Rat(1));
  }
  return cmp.report("structure.q-racah-at-N", {{"alpha", p.alpha.str()},
                                               {"beta", p.beta.str()},
                                               {"delta", p.delta.str()},
                                               {"N", std::to_string(p.N)},
                                               {"q", q.str()}});
}

CheckReport check_backward_shift(const QRacahParams& p, std::size_t nmax, const CheckOptions& opt) {
  if (nmax < 1 || nmax > p.N) throw std::invalid_argument("backward shift: need 1 <= nmax <= N");
  Comparator cmp(opt.mutation);
  const Rat& q = p.qbase;
  const Rat g = p.gamma();
  const Rat gd = g * p.delta;
  const Rat one(1);
  const Rat a1 = q * p.alpha, b1 = q * p.beta, g1 = q * g;
  const std::size_t N = p.N;
  auto w1 = [&](std::size_t x) { return qracah_weight_general(x, a1, b1, g1, p.delta, q); };
  auto r1 = [&](std::size_t n, std::size_t x) { return qracah_series(n, x, a1, b1, g1, p.delta, q); };
  auto c1 = [&](std::size_t x) {
    return (one - q * q * gd) / (pow(q, -sl(x)) - gd * pow(q, sl(x) + 2));
  };
  auto c2 = [&](std::size_t x) {
    return (one - q * q * gd) / (pow(q, 1 - sl(x)) - gd * pow(q, sl(x) + 1));
  };
  cmp.equal("shifted w(N) = 0", w1(N), Rat(0));
  for (std::size_t n = 1; n <= nmax; ++n) {
    for (std::size_t x = 0; x <= N; ++x) {
      const Rat lhs = qracah_weight(x, p) * qracah(n, x, p);
      Rat rhs(0);
      if (x < N) rhs += c1(x) * w1(x) * r1(n - 1, x);
      if (x > 0) rhs -= c2(x) * w1(x - 1) * r1(n - 1, x - 1);
      cmp.equal(idx({{"n", n}, {"x", x}}), lhs, rhs);
    }
    for (int which = 0; which < 2; ++which) {
      auto f = [&](std::size_t x) { return which == 0 ? Rat(sl(x)) : pow(q, sl(x)); };
      Rat lhs(0), rhs(0);
      for (std::size_t x = 0; x <= N; ++x) lhs += qracah_weight(x, p) * qracah(n, x, p) * f(x);
      for (std::size_t x = 0; x < N; ++x) rhs += c1(x) * w1(x) * r1(n - 1, x) * (f(x) - f(x + 1));
      cmp.equal(idx({{"n", n}}) + (which == 0 ? " sum f=x" : " sum f=q^x"), lhs, rhs);
    }
  }
  return cmp.report("structure.backward-shift", {{"alpha", p.alpha.str()},
                                                 {"beta", p.beta.str()},
                                                 {"delta", p.delta.str()},
                                                 {"N", std::to_string(N)},
                                                 {"q", q.str()},
                                                 {"nmax", std::to_string(nmax)}});
}

SymmetricLaurent compute_S(std::size_t k, std::size_t l, std::size_t m, const QParams& qp, SMode mode) {
  if (!(k <= m && m <= l)) throw std::invalid_argument("compute_S: need k <= m <= l");
  if (mode == SMode::brute) return SymmetricLaurent(S_brute(k, l, m, qp, cqu_table(qp, l + m)));
  return SymmetricLaurent(S_closed(k, l, m, qp));
}

CheckReport check_theorem_5_1(const QParams& qp, std::size_t l, std::size_t m, const CheckOptions& opt) {
  if (m > l) throw std::invalid_argument("theorem 5.1: need m <= l");
  Comparator cmp(opt.mutation);
  theorem_5_1_into(cmp, qp, l, m, "");
  ParamList p = qparams_list(qp);
  p.emplace_back("l", std::to_string(l));
  p.emplace_back("m", std::to_string(m));
  return cmp.report("theorem-5-1", std::move(p));
}

CheckReport check_theorem_5_1(const ParamGrid& grid, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  for (const QParams& qp : grid.qparams) {
    for (std::size_t l = 0; l <= grid.q_lmax; ++l) {
      for (std::size_t m = 0; m <= l; ++m) {
        theorem_5_1_into(cmp, qp, l, m, "t,s=" + qp.str() + " " + idx({{"l", l}, {"m", m}}) + " ");
      }
    }
  }
  return cmp.report("theorem-5-1.grid", {{"lmax", std::to_string(grid.q_lmax)},
                                         {"qparams", std::to_string(grid.qparams.size())}});
}

CheckReport check_linearization_q(const QParams& qp, std::size_t l, std::size_t m, const CheckOptions& opt) {
  if (m > l) throw std::invalid_argument("linearization: need m <= l");
  Comparator cmp(opt.mutation);
  const Rat q = qp.q();
  const Rat beta = qp.beta();
  const Rat qh = qp.qhalf();
  const Rat c = qh * beta;
  const Rat qb2 = q * beta * beta;
  const auto R = cqu_table(qp, l + m);
  const QRacahParams p = qracah_linearization_params(qp, l, m);
  const Rat h0 = qracah_norms(0, p).h0;
  Rat wsum(0);
  for (std::size_t j = 0; j <= m; ++j) wsum += qracah_weight(j, p);
  const Rat h05 = qpochhammer(qb2, q, l) * qpochhammer(qb2, q, m) / qpochhammer(qb2, q, l + m) *
                  qpochhammer(c, q, l + m) / (qpochhammer(c, q, l) * qpochhammer(c, q, m));
  cmp.equal("h0 closed", h05, h0);
  cmp.equal("h0 sum", wsum, h0);

  LaurentPoly rhs4, rhs6;
  const Rat pre = qpochhammer(q, q, l) * qpochhammer(q, q, m) / (qpochhammer(qb2, q, l) * qpochhammer(qb2, q, m));
  for (std::size_t j = 0; j <= m; ++j) {
    const Rat c4 = pre * (Rat(1) - pow(q, sl(l + m - 2 * j)) * c) / (Rat(1) - c) * qpochhammer(c, q, j) /
                   qpochhammer(q, q, j) * qpochhammer(c, q, l - j) / qpochhammer(q, q, l - j) *
                   qpochhammer(c, q, m - j) / qpochhammer(q, q, m - j) * qpochhammer(qb2, q, l + m - j) /
                   qpochhammer(q * c, q, l + m - j) * pow(c, sl(j));
    const Rat c6 = qracah_weight(j, p) / h0;
    cmp.equal(idx({{"j", j}}) + " coefficient", c4, c6);
    cmp.nonnegative(idx({{"j", j}}) + " coefficient", c4);
    rhs4 += R[l + m - 2 * j].poly() * c4;
    rhs6 += R[l + m - 2 * j].poly() * c6;
  }
  const LaurentPoly lhs = R[l].poly() * R[m].poly();
  cmp.equal("explicit form", lhs, rhs4);
  cmp.equal("weight form", lhs, rhs6);
  ParamList pl = qparams_list(qp);
  pl.emplace_back("l", std::to_string(l));
  pl.emplace_back("m", std::to_string(m));
  return cmp.report("linearization.q", std::move(pl));
}

SymmetricLaurent dual_addition_term(const QParams& qp, std::size_t l, std::size_t m, std::size_t k) {
  const Rat& t = qp.t();
  const Rat q = qp.q();
  const Rat beta = qp.beta();
  const Rat qh = qp.qhalf();
  const Rat b2 = beta * beta;
  Rat c = pow(t, 2 * sl(k) * sl(k + l + m + 2)) * pow(beta, sl(k));
  if (k > 0) c *= (Rat(1) - b2 * pow(q, 2 * sl(k))) / (Rat(1) - b2 * pow(q, sl(k)));
  const Rat qbk = qpochhammer(q * beta, q, k);
  c *= qpochhammer(pow(q, -sl(l)), q, k) * qpochhammer(pow(q, -sl(m)), q, k) * qpochhammer(q * b2, q, k) /
       (qbk * qbk * qpochhammer(q, q, k));
  const Rat d = qpochhammer(-(qh * beta), qh, 2 * k);
  c /= d * d;
  const LaurentPoly x2 = x_squared();
  LaurentPoly prod(Rat(1));
  for (std::size_t i = 0; i < k; ++i) {
    const Rat ci = pow(t, 4 * sl(i) + 2) * beta;
    prod *= x2 * (Rat(4) * ci) - LaurentPoly((Rat(1) + ci) * (Rat(1) + ci));
  }
  const QParams sk = qp.shifted(sl(k));
  return SymmetricLaurent(prod * cqu_r(l - k, sk).poly() * cqu_r(m - k, sk).poly() * c);
}

CheckReport check_dual_addition_q(const QParams& qp, std::size_t l, std::size_t m, std::size_t j, DualMode mode,
                                  const CheckOptions& opt) {
  if (m > l || j > m) throw std::invalid_argument("dual addition: need j <= m <= l");
  Comparator cmp(opt.mutation);
  const QRacahParams p = qracah_linearization_params(qp, l, m);
  const LaurentPoly target = cqu_r(l + m - 2 * j, qp).poly();
  LaurentPoly sum;
  if (mode == DualMode::direct) {
    for (std::size_t k = 0; k <= m; ++k) sum += dual_addition_term(qp, l, m, k).poly() * qracah(k, j, p);
    cmp.equal("sum over k", target, sum);
  } else {
    const auto R = cqu_table(qp, l + m);
    const Rat h0 = qracah_norms(0, p).h0;
    for (std::size_t k = 0; k <= m; ++k) {
      const Rat hk = qracah_norms(k, p).ratio * h0;
      const LaurentPoly inv = S_brute(k, l, m, qp, R) * hk.inverse();
      cmp.equal(idx({{"k", k}}) + " coefficient", inv, dual_addition_term(qp, l, m, k).poly());
      sum += inv * qracah(k, j, p);
    }
    cmp.equal("sum over k", target, sum);
  }
  ParamList pl = qparams_list(qp);
  pl.emplace_back("l", std::to_string(l));
  pl.emplace_back("m", std::to_string(m));
  pl.emplace_back("j", std::to_string(j));
  pl.emplace_back("mode", mode == DualMode::direct ? "direct" : "inversion");
  return cmp.report("dual-addition.q", std::move(pl));
}

LaurentPoly addition_kernel(const QParams& qp, std::size_t k, const Rat& u, const Rat& v) {
  const Rat q = qp.q();
  const Rat a = qp.a();
  const Rat one(1);
  const Rat A = a * u * v, B = a / (u * v);
  const Rat AB = A * B;
  const Rat abcd = pow(a, 4);
  const Rat au2 = a * a * u * u, av2 = a * a * v * v;
  LaurentPoly total;
  LaurentPoly block(one);
  Rat coef(1);
  for (std::size_t i = 0; i <= k; ++i) {
    const Rat qi = pow(q, sl(i));
    total += block * (coef * qpochhammer(qi * au2, q, k - i) * qpochhammer(qi * av2, q, k - i));
    if (i == k) break;
    const Rat den = (one - qi * q) * (one - AB * qi);
    if (den.is_zero()) throw DenominatorVanished(i);
    coef *= (one - pow(q, sl(i) - sl(k))) * (one - pow(q, sl(k) - 1) * abcd * qi) * q / den;
    LaurentPoly f1(one), f2(one);
    f1.add_term(1, -A * qi);
    f2.add_term(-1, -A * qi);
    block *= f1;
    block *= f2;
  }
  return total * pow(u * v, -sl(k));
}

CheckReport check_addition_q(const QParams& qp, std::size_t n, const Rat& u, const Rat& v, const CheckOptions& opt) {
  if (u.is_zero() || v.is_zero()) throw InadmissiblePoint("addition formula: u and v must be nonzero");
  Comparator cmp(opt.mutation);
  const Rat& t = qp.t();
  const Rat q = qp.q();
  const Rat qh = qp.qhalf();
  const Rat a = qp.a();
  const Rat a2 = a * a;
  const Rat a4q = pow(a, 4) / q;
  LaurentPoly rhs;
  for (std::size_t k = 0; k <= n; ++k) {
    Rat c = pow(t, 2 * sl(k) * sl(k + 1)) * qpochhammer(pow(q, -sl(n)), q, k) * qpochhammer(a2, q, k) *
            qpochhammer(pow(q, sl(n)) * pow(a, 4), q, k) * qpochhammer(a4q, q, k);
    if (k % 2) c = -c;
    const Rat den = qpochhammer(q, q, k) * qpochhammer(qh * a2, q, k) * qpochhammer(-(qh * a2), q, k) *
                    qpochhammer(-a2, q, k) * qpochhammer(a4q, q, 2 * k);
    if (den.is_zero()) throw DenominatorVanished(k);
    c /= den;
    const QParams sk = qp.shifted(sl(k));
    c *= cqu_value(n - k, sk, u) * cqu_value(n - k, sk, v);
    rhs += addition_kernel(qp, k, u, v) * c;
  }
  cmp.equal("Laurent identity", cqu_r(n, qp).poly(), rhs);
  ParamList pl = qparams_list(qp);
  pl.emplace_back("n", std::to_string(n));
  pl.emplace_back("u", u.str());
  pl.emplace_back("v", v.str());
  return cmp.report("addition.q", std::move(pl));
}

CheckReport check_restriction_equivalence(const QParams& qp, std::size_t l, std::size_t m, std::size_t j,
                                          std::size_t n, const CheckOptions& opt) {
  if (!(j <= m && m <= l && m <= n)) throw std::invalid_argument("restriction: need j <= m <= l, m <= n");
  Comparator cmp(opt.mutation);
  const Rat& t = qp.t();
  const Rat q = qp.q();
  const Rat qh = qp.qhalf();
  const Rat a = qp.a();
  const Rat a2 = a * a;
  const Rat a4 = pow(a, 4);
  const Rat one(1);
  const Rat z = pow(t, -2 * sl(l + m - 2 * j)) / a;
  const Rat u = pow(t, -2 * sl(l)) / a;
  const Rat v = pow(t, -2 * sl(m)) / a;
  const Rat A = pow(t, -2 * sl(l + m)) / a, B = pow(t, 2 * sl(l + m)) * pow(a, 3);
  const Rat C = pow(t, 2 * (sl(l) - sl(m))) * a, D = pow(t, 2 * (sl(m) - sl(l))) * a;
  Rat sum13(0), sum14(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const Rat common = pow(t, 2 * sl(k) * sl(k + l + m + 1)) * pow(a, 2 * sl(k)) * (k % 2 ? Rat(-1) : Rat(1)) *
                       qpochhammer(pow(q, -sl(n)), q, k) * qpochhammer(pow(q, -sl(l)), q, k) *
                       qpochhammer(pow(q, -sl(m)), q, k) * qpochhammer(pow(q, sl(n)) * a4, q, k);
    Rat c13 = common * qpochhammer(a4, q, k);
    if (k > 0) c13 *= (one - a4 * pow(q, 2 * sl(k) - 1)) / (one - a4 * pow(q, sl(k) - 1));
    const Rat qa2 = qpochhammer(qh * a2, q, k);
    const Rat d = qpochhammer(-a2, qh, 2 * k);
    c13 /= qa2 * qa2 * qpochhammer(q, q, k) * d * d;
    const Rat c14 = common * qpochhammer(a2, q, k) * qpochhammer(a4 / q, q, k) /
                    (qpochhammer(q, q, k) * qa2 * qpochhammer(-(qh * a2), q, k) * qpochhammer(-a2, q, k) *
                     qpochhammer(a4 / q, q, 2 * k));
    Rat f(0);
    if (!c13.is_zero() || !c14.is_zero()) {
      const QParams sk = qp.shifted(sl(k));
      f = cqu_value(n - k, sk, u) * cqu_value(n - k, sk, v) * askey_wilson_value(k, A, B, C, D, q, z);
    }
    cmp.equal(idx({{"k", k}}) + " term", c13 * f, c14 * f);
    sum13 += c13 * f;
    sum14 += c14 * f;
  }
  const Rat lhs = cqu_value(n, qp, z);
  const Rat dual = cqu_value(l + m - 2 * j, qp, pow(t, -2 * sl(n)) / a);
  cmp.equal("lhs vs duality", lhs, dual);
  cmp.equal("sum squared-denominator form", dual, sum13);
  cmp.equal("sum split-denominator form", dual, sum14);
  ParamList pl = qparams_list(qp);
  pl.emplace_back("l", std::to_string(l));
  pl.emplace_back("m", std::to_string(m));
  pl.emplace_back("j", std::to_string(j));
  pl.emplace_back("n", std::to_string(n));
  return cmp.report("restriction", std::move(pl));
}

}  // namespace askey
