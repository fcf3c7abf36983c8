#include "doctest.h"

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/series.hpp"

using namespace askey;

namespace {
const QParams kQ(Rat(1, 2), Rat(2, 3));
LaurentPoly z(long e, Rat c) { return LaurentPoly::monomial(c, e); }
}  // namespace

TEST_CASE("QParams") {
  CHECK(kQ.q() == Rat(1, 16));
  CHECK(kQ.qhalf() == Rat(1, 4));
  CHECK(kQ.beta() == Rat(4, 9));
  CHECK(kQ.a() == Rat(1, 3));
  CHECK(kQ.shifted(1).s() == Rat(1, 6));
  CHECK_THROWS_AS(QParams(Rat(3, 2), Rat(1)), InadmissibleParams);
  CHECK_THROWS_AS(QParams(Rat(1, 2), Rat(0)), InadmissibleParams);
  CHECK_THROWS_AS(QParams(Rat(1, 2), Rat(2)), InadmissibleParams);
}

TEST_CASE("Jacobi and ultraspherical") {
  const JacobiParams jp(Rat(1, 2), Rat(1, 3));
  for (std::size_t n = 0; n < 6; ++n) CHECK(jacobi_r(n, jp, Rat(1)) == Rat(1));
  CHECK(jacobi_r(0, jp, Rat(2, 7)) == Rat(1));
  CHECK(jacobi_r(1, JacobiParams(Rat(0), Rat(0)), Rat(3, 11)) == Rat(3, 11));
  // frozen from an independent rational implementation
  CHECK(jacobi_poly(3, jp).coeffs() ==
        std::vector<Rat>{Rat(-19, 648), Rat(-203, 216), Rat(29, 216), Rat(1189, 648)});
  CHECK(ultraspherical_coeffs(2, Rat(0)) == std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(3, 2)});
  CHECK(ultraspherical_r(2, Rat(0), Rat(1, 2)) == Rat(-1, 8));
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const Rat& x : {Rat(1, 3), Rat(-2, 5), Rat(7, 4)}) {
      const Rat sign = n % 2 ? Rat(-1) : Rat(1);
      CHECK(ultraspherical_r(n, Rat(3, 4), -x) == sign * ultraspherical_r(n, Rat(3, 4), x));
      CHECK(ultraspherical_poly(n, Rat(3, 4))(x) == ultraspherical_r(n, Rat(3, 4), x));
    }
  }
  CHECK_THROWS_AS(JacobiParams(Rat(-1), Rat(0)), InadmissibleParams);
}

TEST_CASE("Krawtchouk and Hahn") {
  CHECK(krawtchouk(0, 2, KrawtchoukParams(Rat(1, 2), 2)) == Rat(1));
  CHECK(krawtchouk(1, 1, KrawtchoukParams(Rat(1, 2), 2)) == Rat(0));
  const KrawtchoukParams k3(Rat(1, 3), 3);
  CHECK(krawtchouk(1, 2, k3) == Rat(-1));
  CHECK(krawtchouk(2, 1, k3) == Rat(-1));
  const HahnParams h00(Rat(0), Rat(0), 2);
  CHECK(hahn(0, 1, h00) == Rat(1));
  CHECK(hahn(2, 0, h00) == Rat(1));
  CHECK(hahn(1, 1, h00) == Rat(0));
  const HahnParams hp(Rat(1, 2), Rat(2, 3), 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(dual_hahn(n, 0, hp) == Rat(1));
    for (std::size_t x = 0; x <= 4; ++x) CHECK(dual_hahn(n, x, hp) == hahn(x, n, hp));
  }
  CHECK_THROWS_AS(KrawtchoukParams(Rat(1), 2), InadmissibleParams);
}

TEST_CASE("Racah") {
  const RacahParams rp(Rat(1, 2), Rat(1, 3), 3, Rat(1, 5));
  CHECK(rp.gamma() == Rat(-4));
  CHECK(racah(0, 2, rp) == Rat(1));
  CHECK(racah(2, 0, rp) == Rat(1));
  CHECK(racah(2, 1, rp) == Rat(3));
  CHECK(racah(3, 2, rp) == Rat(77, 19));
  CHECK(racah_weight(0, rp) == Rat(1));
  CHECK(racah_weight(1, rp) == Rat(23, 55));
  CHECK(racah_weight(2, rp) == Rat(-513, 847));
  CHECK(racah_weight(3, rp) == Rat(-3021, 3146));
  CHECK(racah_norms(0, rp).ratio == Rat(1));
  CHECK(racah_norms(0, rp).h0 == Rat(-1479, 10010));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t x = 0; x <= 3; ++x) {
      CHECK(racah(n, x, rp) == racah_series(x, n, Rat(-4), rp.delta, rp.alpha, rp.beta));
    }
  }
  for (const auto& [a, b, d] : {std::tuple{Rat(1, 2), Rat(1, 3), Rat(1, 5)},
                                std::tuple{Rat(2), Rat(3, 4), Rat(-7, 2)},
                                std::tuple{Rat(1, 7), Rat(5), Rat(9, 4)}}) {
    const RacahParams r(a, b, 3, d);
    Rat sum(0);
    for (std::size_t x = 0; x <= 3; ++x) sum += racah_weight(x, r);
    CHECK(sum == racah_norms(0, r).h0);
  }
}

TEST_CASE("Wilson duality form") {
  const WilsonParams wp{Rat(1), Rat(3, 2), Rat(2), Rat(5, 2)};
  const WilsonParams dp = wp.dual();
  CHECK(dp.a == Rat(3));
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(wilson_dual_phi(n, 0, wp) == Rat(1));
    CHECK(wilson_dual_phi(0, n, wp) == Rat(1));
    for (std::size_t m = 0; m <= 4; ++m) CHECK(wilson_dual_phi(n, m, wp) == wilson_dual_phi(m, n, dp));
  }
}

TEST_CASE("Askey-Wilson") {
  const AWParams awp(Rat(1, 3), Rat(1, 2), Rat(-1, 4), Rat(2, 5), Rat(1, 3));
  CHECK(askey_wilson_r(0, awp).poly() == LaurentPoly(Rat(1)));
  CHECK(askey_wilson_r(2, awp).poly() ==
        z(2, Rat(3525156, 22854715)) + z(1, Rat(-4704552, 22854715)) + z(0, Rat(6418467, 22854715)) +
            z(-1, Rat(-4704552, 22854715)) + z(-2, Rat(3525156, 22854715)));
  for (std::size_t n = 0; n <= 6; ++n) {
    const SymmetricLaurent r = askey_wilson_r(n, awp);
    CHECK(eval_at(r, awp.a) == Rat(1));
    CHECK(r.degree() == static_cast<long>(n));
    CHECK(askey_wilson_value(n, awp.a, awp.b, awp.c, awp.d, awp.qbase, Rat(7, 5)) == eval_at(r, Rat(7, 5)));
  }
  CHECK_THROWS_AS(AWParams(Rat(2), Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 2)), InadmissibleParams);
}

TEST_CASE("continuous q-ultraspherical") {
  CHECK(cqu_r(2, kQ).poly() == z(2, Rat(1287, 12950)) + z(0, Rat(612, 6475)) + z(-2, Rat(1287, 12950)));
  CHECK(cqu_r(3, kQ).poly() == z(3, Rat(8883, 268250)) + z(1, Rat(4212, 134125)) +
                                   z(-1, Rat(4212, 134125)) + z(-3, Rat(8883, 268250)));
  for (const QParams& qp : {kQ, QParams(Rat(2, 3), Rat(1, 2)), QParams(Rat(1, 2), Rat(1, 3))}) {
    for (std::size_t n = 0; n <= 8; ++n) {
      const SymmetricLaurent r = cqu_r(n, qp);
      CHECK(eval_at(r, qp.a()) == Rat(1));
      CHECK(r.degree() == static_cast<long>(n));
      CHECK(r.poly().coeff(static_cast<long>(n)) == pow(qp.a(), static_cast<long>(n)) *
                                                        qpochhammer(qp.qhalf() * qp.beta(), qp.q(), n) /
                                                        qpochhammer(qp.q() * qp.beta() * qp.beta(), qp.q(), n));
      CHECK(cqu_r_alt(n, qp) == r);
      const Rat sign = n % 2 ? Rat(-1) : Rat(1);
      CHECK(negate_variable(r.poly()) == r.poly() * sign);
      CHECK(cqu_value(n, qp, Rat(5, 3)) == eval_at(r, Rat(5, 3)));
    }
  }
}

TEST_CASE("q-Racah") {
  const Rat q(1, 16);
  const QRacahParams qrp(Rat(1, 3), Rat(1, 2), Rat(1, 5), 3, q);
  CHECK(qrp.gamma() == pow(q, -4));
  CHECK(qracah(2, 1, qrp) == Rat(137503589, 32642064));
  CHECK(qracah_weight(0, qrp) == Rat(1));
  CHECK(qracah_weight(1, qrp) == Rat(359062704, 7948194187));
  CHECK(qracah_norms(0, qrp).ratio == Rat(1));
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(qracah(n, 0, qrp) == Rat(1));
    CHECK(qracah(0, n, qrp) == Rat(1));
    const Rat at_n = qpochhammer(q * qrp.beta, q, n) * qpochhammer(q * qrp.alpha / qrp.delta, q, n) /
                     (qpochhammer(q * qrp.alpha, q, n) * qpochhammer(q * qrp.beta * qrp.delta, q, n)) *
                     pow(qrp.delta, static_cast<long>(n));
    CHECK(qracah(n, 3, qrp) == at_n);
  }
  for (const QRacahParams& p : {qrp, QRacahParams(Rat(2, 5), Rat(3, 7), Rat(4), 3, Rat(1, 3))}) {
    Rat sum(0);
    for (std::size_t x = 0; x <= 3; ++x) sum += qracah_weight(x, p);
    CHECK(sum == qracah_norms(0, p).h0);
  }
}

TEST_CASE("q-Racah agrees with Askey-Wilson on the q-quadratic lattice") {
  for (const QParams& qp : {kQ, QParams(Rat(2, 3), Rat(1, 2))}) {
    for (const auto& [l, m] : {std::pair<std::size_t, std::size_t>{4, 4}, {5, 3}}) {
      const QRacahParams p = qracah_linearization_params(qp, l, m);
      const Rat& t = qp.t();
      const Rat& q = p.qbase;
      // A^2 = q gamma delta
      const Rat A = pow(t, -2 * static_cast<long>(l + m) - 1) / qp.s();
      CHECK(A * A == q * p.gamma() * p.delta);
      const Rat B = q * p.alpha / A, C = q * p.beta * p.delta / A, D = q * p.gamma() / A;
      for (std::size_t n = 0; n <= std::min<std::size_t>(4, m); ++n) {
        for (std::size_t x = 0; x <= m; ++x) {
          CHECK(qracah(n, x, p) == askey_wilson_value(n, A, B, C, D, q, A * pow(q, static_cast<long>(x))));
        }
      }
    }
  }
}

TEST_CASE("family ids") {
  CHECK(family_ids().size() == 11);
  CHECK(family_ids().front() == "jacobi");
}
