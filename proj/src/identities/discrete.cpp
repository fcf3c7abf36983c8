#include <string>

#include "askey/errors.hpp"
#include "askey/identities.hpp"

namespace askey {

namespace {

std::string at(const char* a, std::size_t i, const char* b, std::size_t j) {
  return std::string(a) + "=" + std::to_string(i) + " " + b + "=" + std::to_string(j);
}

template <class W>
std::vector<Rat> positive_weights(std::size_t N, W weight) {
  std::vector<Rat> w;
  for (std::size_t x = 0; x <= N; ++x) {
    w.push_back(weight(x));
    if (w.back().sign() <= 0) throw NonPositiveWeight(x);
  }
  return w;
}

}  // namespace

CheckReport check_duality_cqu(const QParams& qp, std::size_t mmax, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const Rat& t = qp.t();
  const Rat& s = qp.s();
  for (std::size_t m = 0; m <= mmax; ++m) {
    for (std::size_t n = 0; n <= mmax; ++n) {
      const Rat zm = pow(t, -2 * static_cast<long>(m) - 1) / s;
      const Rat zn = pow(t, -2 * static_cast<long>(n) - 1) / s;
      cmp.equal(at("m", m, "n", n), cqu_value(n, qp, zm), cqu_value(m, qp, zn));
    }
  }
  ParamList p = qparams_list(qp);
  p.emplace_back("mmax", std::to_string(mmax));
  return cmp.report("duality.cqu", std::move(p));
}

CheckReport check_duality_krawtchouk(const KrawtchoukParams& kp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  for (std::size_t n = 0; n <= kp.N; ++n) {
    for (std::size_t x = 0; x <= kp.N; ++x) cmp.equal(at("n", n, "x", x), krawtchouk(n, x, kp), krawtchouk(x, n, kp));
  }
  return cmp.report("duality.krawtchouk", {{"p", kp.p.str()}, {"N", std::to_string(kp.N)}});
}

CheckReport check_duality_hahn(const HahnParams& hp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  for (std::size_t n = 0; n <= hp.N; ++n) {
    for (std::size_t x = 0; x <= hp.N; ++x) cmp.equal(at("n", n, "x", x), hahn(n, x, hp), dual_hahn(x, n, hp));
  }
  return cmp.report("duality.hahn",
                    {{"alpha", hp.alpha.str()}, {"beta", hp.beta.str()}, {"N", std::to_string(hp.N)}});
}

CheckReport check_duality_racah(const RacahParams& rp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  for (std::size_t n = 0; n <= rp.N; ++n) {
    for (std::size_t x = 0; x <= rp.N; ++x) {
      cmp.equal(at("n", n, "x", x), racah(n, x, rp), racah_series(x, n, rp.gamma(), rp.delta, rp.alpha, rp.beta));
    }
  }
  return cmp.report("duality.racah", {{"alpha", rp.alpha.str()},
                                      {"beta", rp.beta.str()},
                                      {"N", std::to_string(rp.N)},
                                      {"delta", rp.delta.str()}});
}

CheckReport check_duality_wilson(const WilsonParams& wp, std::size_t nmax, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const WilsonParams dp = wp.dual();
  for (std::size_t n = 0; n <= nmax; ++n) {
    for (std::size_t m = 0; m <= nmax; ++m) {
      cmp.equal(at("n", n, "m", m), wilson_dual_phi(n, m, wp), wilson_dual_phi(m, n, dp));
    }
  }
  return cmp.report("duality.wilson", {{"a", wp.a.str()},
                                       {"b", wp.b.str()},
                                       {"c", wp.c.str()},
                                       {"d", wp.d.str()},
                                       {"nmax", std::to_string(nmax)}});
}

CheckReport check_orthogonality_krawtchouk(const KrawtchoukParams& kp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const auto w = positive_weights(kp.N, [&](std::size_t x) { return krawtchouk_weight(x, kp); });
  const Rat top = pow(Rat(1) - kp.p, static_cast<long>(kp.N));
  for (std::size_t m = 0; m <= kp.N; ++m) {
    for (std::size_t n = 0; n <= kp.N; ++n) {
      Rat g(0);
      for (std::size_t x = 0; x <= kp.N; ++x) g += krawtchouk(m, x, kp) * krawtchouk(n, x, kp) * w[x];
      cmp.equal(at("m", m, "n", n), g, m == n ? top / w[n] : Rat(0));
    }
  }
  return cmp.report("orthogonality.krawtchouk", {{"p", kp.p.str()}, {"N", std::to_string(kp.N)}});
}

CheckReport check_orthogonality_hahn(const HahnParams& hp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const auto w = positive_weights(hp.N, [&](std::size_t x) { return hahn_weight(x, hp); });
  for (std::size_t m = 0; m <= hp.N; ++m) {
    for (std::size_t n = 0; n <= hp.N; ++n) {
      if (m == n) continue;
      Rat g(0);
      for (std::size_t x = 0; x <= hp.N; ++x) g += hahn(m, x, hp) * hahn(n, x, hp) * w[x];
      cmp.equal(at("m", m, "n", n), g, Rat(0));
    }
  }
  return cmp.report("orthogonality.hahn",
                    {{"alpha", hp.alpha.str()}, {"beta", hp.beta.str()}, {"N", std::to_string(hp.N)}});
}

CheckReport check_orthogonality_racah(const RacahParams& rp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const auto w = positive_weights(rp.N, [&](std::size_t x) { return racah_weight(x, rp); });
  Rat sum(0);
  for (const Rat& v : w) sum += v;
  const Rat h0 = racah_norms(0, rp).h0;
  cmp.equal("sum w", sum, h0);
  for (std::size_t m = 0; m <= rp.N; ++m) {
    for (std::size_t n = 0; n <= rp.N; ++n) {
      Rat g(0);
      for (std::size_t x = 0; x <= rp.N; ++x) g += racah(m, x, rp) * racah(n, x, rp) * w[x];
      cmp.equal(at("m", m, "n", n), g, m == n ? racah_norms(n, rp).ratio * h0 : Rat(0));
    }
  }
  return cmp.report("orthogonality.racah", {{"alpha", rp.alpha.str()},
                                            {"beta", rp.beta.str()},
                                            {"N", std::to_string(rp.N)},
                                            {"delta", rp.delta.str()}});
}

CheckReport check_orthogonality_qracah(const QRacahParams& qrp, const CheckOptions& opt) {
  Comparator cmp(opt.mutation);
  const auto w = positive_weights(qrp.N, [&](std::size_t x) { return qracah_weight(x, qrp); });
  Rat sum(0);
  for (const Rat& v : w) sum += v;
  const Rat h0 = qracah_norms(0, qrp).h0;
  cmp.equal("sum w", sum, h0);
  for (std::size_t m = 0; m <= qrp.N; ++m) {
    for (std::size_t n = 0; n <= qrp.N; ++n) {
      Rat g(0);
      for (std::size_t x = 0; x <= qrp.N; ++x) g += qracah(m, x, qrp) * qracah(n, x, qrp) * w[x];
      cmp.equal(at("m", m, "n", n), g, m == n ? qracah_norms(n, qrp).ratio * h0 : Rat(0));
    }
  }
  return cmp.report("orthogonality.q-racah", {{"alpha", qrp.alpha.str()},
                                              {"beta", qrp.beta.str()},
                                              {"delta", qrp.delta.str()},
                                              {"N", std::to_string(qrp.N)},
                                              {"q", qrp.qbase.str()}});
}

}  // namespace askey
