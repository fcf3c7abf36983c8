#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "askey/errors.hpp"
#include "askey/families.hpp"
#include "askey/identities.hpp"
#include "askey/series.hpp"

namespace askey {

using Flt = double;

// Float evaluators. Same series as the exact families, run on T.

/// 4phi3(q^{-n}, q^{n-1}abcd, a e^{i th}, a e^{-i th}; ab, ac, ad; q, q) at x = cos th.
/// (a e^{i th}, a e^{-i th}; q)_k is expanded as a real product. Loses
/// accuracy for small q and moderate n.
template <class T>
T aw_x(std::size_t n, T a, T b, T c, T d, T q, T x) {
  const T qn = std::pow(q, -static_cast<T>(n));
  const T top = std::pow(q, static_cast<T>(n) - 1) * a * b * c * d;
  T qk(1);
  return sum_terminating<T>(
      n,
      [&](std::size_t k) {
        qk = std::pow(q, static_cast<T>(k));
        return (1 - qn * qk) * (1 - top * qk) * (1 - 2 * a * qk * x + a * a * qk * qk) * q;
      },
      [&](std::size_t) { return (1 - qk * q) * (1 - a * b * qk) * (1 - a * c * qk) * (1 - a * d * qk); });
}

/// Chebyshev T_j(x) by the three-term recurrence.
template <class T>
T chebyshev_x(std::size_t j, T x) {
  T prev(1), cur = x;
  if (j == 0) return prev;
  for (std::size_t i = 1; i < j; ++i) {
    const T next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Continuous q-ultraspherical R_n^{beta;q}(x) from the Fourier expansion
/// C_n(cos th; b | q) = sum_k (b;q)_k (b;q)_{n-k} / ((q;q)_k (q;q)_{n-k}) cos((n-2k) th),
/// b = q^{1/2} beta. All terms share one sign for 0 < b < 1, unlike the
/// 4phi3, which cancels badly in floating point once q^{-n} is large.
template <class T>
T cqu_x(std::size_t n, T q, T beta, T x) {
  const T b = std::sqrt(q) * beta;
  T c(0);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t j = n >= 2 * k ? n - 2 * k : 2 * k - n;
    c += qpochhammer(b, q, k) * qpochhammer(b, q, n - k) / (qpochhammer(q, q, k) * qpochhammer(q, q, n - k)) *
         chebyshev_x(j, x);
  }
  const T nn = static_cast<T>(n);
  return c * std::pow(q, nn / 4) * std::pow(beta, nn / 2) * qpochhammer(q, q, n) / qpochhammer(q * beta * beta, q, n);
}

/// 2F1(-n, n+alpha+beta+1; alpha+1; u).
template <class T>
T jacobi_u(std::size_t n, T alpha, T beta, T u) {
  const T nn = static_cast<T>(n);
  return sum_terminating<T>(
      n, [&](std::size_t k) { return (static_cast<T>(k) - nn) * (nn + alpha + beta + 1 + static_cast<T>(k)) * u; },
      [&](std::size_t k) { return (alpha + 1 + static_cast<T>(k)) * static_cast<T>(k + 1); });
}

/// Jacobi R_n^{(alpha,beta)}(x) = P_n(x)/P_n(1).
template <class T>
T jacobi_x(std::size_t n, T alpha, T beta, T x) {
  return jacobi_u<T>(n, alpha, beta, (1 - x) / 2);
}

template <class T>
T ultraspherical_x(std::size_t n, T alpha, T x) {
  return jacobi_x<T>(n, alpha, alpha, x);
}

/// Hahn Q_n(x; alpha, beta, N) at real x.
template <class T>
T hahn_x(std::size_t n, T x, T alpha, T beta, std::size_t N) {
  const T nn = static_cast<T>(n), NN = static_cast<T>(N);
  return sum_terminating<T>(
      n,
      [&](std::size_t k) {
        const T kk = static_cast<T>(k);
        return (kk - nn) * (nn + alpha + beta + 1 + kk) * (kk - x);
      },
      [&](std::size_t k) {
        const T kk = static_cast<T>(k);
        return (alpha + 1 + kk) * (kk - NN) * (kk + 1);
      });
}

/// Racah 4F3 at integer x with general gamma.
template <class T>
T racah_x(std::size_t n, std::size_t x, T alpha, T beta, T gamma, T delta) {
  const T nn = static_cast<T>(n), xx = static_cast<T>(x);
  return sum_terminating<T>(
      std::min(n, x),
      [&](std::size_t k) {
        const T kk = static_cast<T>(k);
        return (kk - nn) * (nn + alpha + beta + 1 + kk) * (kk - xx) * (xx + gamma + delta + 1 + kk);
      },
      [&](std::size_t k) {
        const T kk = static_cast<T>(k);
        return (alpha + 1 + kk) * (beta + delta + 1 + kk) * (gamma + 1 + kk) * (kk + 1);
      });
}

/// q-Racah 4phi3 at integer x with general gamma.
template <class T>
T qracah_x(std::size_t n, std::size_t x, T alpha, T beta, T gamma, T delta, T q) {
  const T qn = std::pow(q, -static_cast<T>(n)), qx = std::pow(q, -static_cast<T>(x));
  const T top = alpha * beta * std::pow(q, static_cast<T>(n) + 1);
  const T gdx = gamma * delta * std::pow(q, static_cast<T>(x) + 1);
  T qk(1);
  return sum_terminating<T>(
      std::min(n, x),
      [&](std::size_t k) {
        qk = std::pow(q, static_cast<T>(k));
        return (1 - qn * qk) * (1 - top * qk) * (1 - qx * qk) * (1 - gdx * qk) * q;
      },
      [&](std::size_t) {
        return (1 - q * qk) * (1 - alpha * q * qk) * (1 - beta * delta * q * qk) * (1 - gamma * q * qk);
      });
}

/// Script J_alpha(x) = 0F1(; alpha+1; -x^2/4), summed in long double until a
/// term drops below tol times the partial sum. Throws NonConvergence past
/// 1000 terms.
Flt bessel_script_j(Flt alpha, Flt x, Flt tol = 1e-17);

/// Largest deviation of J_{-1/2} from cos and J_{1/2} from sin x/x over
/// x in {0.5, 1, 2, 5, 10}.
Flt bessel_special_case_error();

// Continuous weights

struct AWFloat {
  Flt a, b, c, d, q;
};
struct CquFloat {
  Flt q, beta;
  AWFloat aw() const;
};

AWFloat to_float(const AWParams& p);
CquFloat to_float(const QParams& qp);

/// (3.15) in x = cos theta, including (1 - x^2)^{-1/2}.
Flt numeric_weight(const CquFloat& p, Flt theta);
/// w[e^{i theta}] of the Askey-Wilson weight.
Flt numeric_weight(const AWFloat& p, Flt theta);
/// 4 pi (abcd; q)_inf / (q, ab, ac, ad, bc, bd, cd; q)_inf, truncated.
Flt aw_h0(const AWFloat& p);

struct QuadResult {
  Flt integral;  // int R_m R_n w dx
  Flt residual;  // |I_mn| / sqrt(I_mm I_nn)
  std::size_t nodes;
};

/// Trapezoid rule in theta with node doubling until successive values agree
/// to 1e-9. Throws NonConvergence past 2^20 nodes.
QuadResult numeric_orthogonality_cqu(const CquFloat& p, std::size_t m, std::size_t n, std::size_t quad_points = 64);
/// Relative deviation of the numeric integral of w over the circle from aw_h0.
Flt numeric_orthogonality_aw_h0(const AWFloat& p, std::size_t quad_points = 64);

// Limits

enum class LimitKind { cqu_to_ultra, hahn_to_jacobi, jacobi_to_bessel, dual_addition_q_to_1 };
std::string_view to_string(LimitKind k);
const std::vector<LimitKind>& limit_kinds();

struct LimitSpec {
  LimitKind kind = LimitKind::cqu_to_ultra;
  std::size_t n = 3;
  Flt alpha = 0.5;
  Flt beta = 0.5;  // second Jacobi/Hahn parameter
  std::size_t l = 3, m = 2, j = 1;
  std::vector<Flt> points;
  std::vector<int> exponents{4, 5, 6, 7, 8, 9, 10};  // q = 1 - 2^{-e} or N = 2^e
};

/// Defaults used by the limits suite.
LimitSpec default_limit_spec(LimitKind kind);

struct LimitReport {
  LimitKind kind;
  ParamList params;
  std::vector<Flt> schedule;
  std::vector<Flt> errors;
  std::vector<Flt> ratios;
  Verdict verdict = Verdict::pass;
  std::string message;
  std::optional<std::size_t> failing_index;  // schedule entry blamed on fail

  std::string to_json() const;
  std::string to_text() const;
};

/// Throws NonFinite if an evaluation overflows.
LimitReport limit_check(const LimitSpec& spec);
/// Recomputes ratios and verdict from the errors.
void assess_limit(LimitReport& r);

}  // namespace askey
