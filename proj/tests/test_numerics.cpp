#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>
#include <json.hpp>

#include "askey/numerics.hpp"

using namespace askey;

namespace {

Flt rel(Flt a, Flt b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

const CquFloat kC = to_float(QParams(Rat(1, 2), Rat(2, 3)));

}  // namespace

TEST_CASE("Bessel special cases") {
  for (Flt x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    CHECK(std::abs(bessel_script_j(-0.5, x) - std::cos(x)) < 1e-12);
    CHECK(std::abs(bessel_script_j(0.5, x) - std::sin(x) / x) < 1e-12);
  }
  CHECK(bessel_script_j(1.5, 0.0) == 1.0);
  CHECK(bessel_special_case_error() < 1e-12);
}

TEST_CASE("Bessel is even and rejects bad input") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<Flt> xs(0, 12), as(-0.9, 4);
  for (int i = 0; i < 50; ++i) {
    const Flt a = as(rng), x = xs(rng);
    CHECK(bessel_script_j(a, -x) == bessel_script_j(a, x));
  }
  CHECK_THROWS_AS(bessel_script_j(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_script_j(-1, 1), InadmissibleParams);
  CHECK_THROWS_AS(bessel_script_j(0, 1e4), NonConvergence);
}

TEST_CASE("float evaluators agree with exact values") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(-20, 20);
  for (const QParams& qp : {QParams(Rat(1, 2), Rat(2, 3)), QParams(Rat(2, 3), Rat(1, 2)), QParams(Rat(1, 2), Rat(1, 3))}) {
    const CquFloat c = to_float(qp);
    for (std::size_t n = 0; n <= 8; ++n) {
      const Poly p(x_coefficients(cqu_r(n, qp)));
      for (int i = 0; i < 5; ++i) {
        const Rat x(num(rng), 21);
        const Flt exact = p(x).to_double();
        if (std::abs(exact) < 1e-6) continue;
        CHECK(rel(cqu_x<Flt>(n, c.q, c.beta, x.to_double()), exact) < 1e-12);
      }
    }
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    const Rat x(3, 7);
    CHECK(rel(ultraspherical_x<Flt>(n, 0.75, x.to_double()), ultraspherical_r(n, Rat(3, 4), x).to_double()) < 1e-12);
  }
  const HahnParams hp(Rat(1, 2), Rat(1, 3), 6);
  const RacahParams rp(Rat(1, 2), Rat(1, 3), 4, Rat(1, 5));
  const QRacahParams qrp(Rat(1, 3), Rat(1, 2), Rat(1, 5), 3, Rat(1, 16));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t x = 0; x <= 3; ++x) {
      CHECK(rel(hahn_x<Flt>(n, Flt(x), 0.5, 1.0 / 3, 6), hahn(n, x, hp).to_double()) < 1e-12);
      CHECK(rel(racah_x<Flt>(n, x, 0.5, 1.0 / 3, -5, 0.2), racah(n, x, rp).to_double()) < 1e-12);
      CHECK(rel(qracah_x<Flt>(n, x, 1.0 / 3, 0.5, std::pow(1.0 / 16, -4), 0.2, 1.0 / 16), qracah(n, x, qrp).to_double()) <
            1e-10);
    }
  }
}

TEST_CASE("Askey-Wilson float series matches exact values at moderate q") {
  const AWParams p(Rat(1, 3), Rat(1, 2), Rat(-1, 4), Rat(2, 5), Rat(1, 3));
  const AWFloat f = to_float(p);
  for (std::size_t n = 0; n <= 4; ++n) {
    const Poly poly(x_coefficients(askey_wilson_r(n, p)));
    CHECK(rel(aw_x<Flt>(n, f.a, f.b, f.c, f.d, f.q, 0.3), poly(Rat(3, 10)).to_double()) < 1e-10);
  }
}

TEST_CASE("weights") {
  const CquFloat up{kC.q, kC.q * kC.beta};
  const Flt c = std::sqrt(kC.q) * kC.beta;
  for (Flt th : {0.2, 0.7, 1.5, 2.4, 3.0}) {
    const Flt exact = 1 - 2 * c * std::cos(2 * th) + c * c;
    CHECK(rel(numeric_weight(up, th) / numeric_weight(kC, th), exact) < 1e-10);
    CHECK(rel(numeric_weight(kC, std::numbers::pi - th), numeric_weight(kC, th)) < 1e-12);
    CHECK(rel(numeric_weight(kC.aw(), th), numeric_weight(kC, th) * std::sin(th)) < 1e-10);
  }
  CHECK_THROWS_AS(numeric_weight(kC, 0.0), NonFinite);
}

TEST_CASE("numeric orthogonality") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 0; n < m; ++n) CHECK(numeric_orthogonality_cqu(kC, m, n).residual < 1e-8);
  }
  CHECK(numeric_orthogonality_cqu(kC, 0, 0).integral > 0);
  CHECK(numeric_orthogonality_aw_h0(kC.aw()) < 1e-8);
  CHECK_THROWS_AS(numeric_orthogonality_cqu(kC, 1, 0, 32), std::invalid_argument);
}

TEST_CASE("limits") {
  const LimitReport hahn = limit_check(default_limit_spec(LimitKind::hahn_to_jacobi));
  CHECK(hahn.verdict == Verdict::pass);
  CHECK(hahn.ratios.back() == doctest::Approx(0.5).epsilon(0.01));
  const LimitReport bessel = limit_check(default_limit_spec(LimitKind::jacobi_to_bessel));
  CHECK(bessel.verdict == Verdict::pass);
  CHECK(bessel.errors.back() < 1e-3);

  // second order in 1 - q, outside the first-order band
  for (LimitKind k : {LimitKind::cqu_to_ultra, LimitKind::dual_addition_q_to_1}) {
    const LimitReport r = limit_check(default_limit_spec(k));
    for (std::size_t i = 1; i < r.errors.size(); ++i) CHECK(r.errors[i] < r.errors[i - 1]);
    CHECK(r.ratios.back() == doctest::Approx(0.25).epsilon(0.01));
    CHECK(r.verdict == Verdict::fail);
  }

  for (LimitKind k : {LimitKind::cqu_to_ultra, LimitKind::hahn_to_jacobi}) {
    LimitSpec s = default_limit_spec(k);
    s.n = 0;
    const LimitReport r = limit_check(s);
    for (Flt e : r.errors) CHECK(e == 0);
    CHECK(r.verdict == Verdict::pass);
  }
}

TEST_CASE("limit verdict rules") {
  LimitReport r;
  r.kind = LimitKind::hahn_to_jacobi;
  r.schedule = {16, 32, 64, 128, 256};
  r.errors = {0.16, 0.08, 0.04, 0.02, 0.01};
  assess_limit(r);
  CHECK(r.verdict == Verdict::pass);
  r.errors[3] = 0.05;
  assess_limit(r);
  CHECK(r.verdict == Verdict::fail);
  CHECK(r.failing_index == 3u);
  r.errors = {0.16, 0.08, 0.04, 0.02, 0.002};
  assess_limit(r);
  CHECK(r.verdict == Verdict::fail);

  const auto j = nlohmann::json::parse(limit_check(default_limit_spec(LimitKind::hahn_to_jacobi)).to_json());
  CHECK(j["kind"] == "hahn-to-jacobi");
  CHECK(j["errors"].size() == 7);
  CHECK(j["ratios"].size() == 6);
  CHECK(j["verdict"] == "pass");
}
