#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "askey/laurent.hpp"
#include "askey/rat.hpp"

namespace askey {

/// q = t^4 and beta = s^2, so that q^{1/4}, q^{1/2}, beta^{1/2} and a = ts
/// are all rational.
class QParams {
public:
  /// Requires 0 < t < 1, s > 0, st < 1. Throws InadmissibleParams.
  QParams(Rat t, Rat s);

  const Rat& t() const { return t_; }
  const Rat& s() const { return s_; }
  Rat q() const { return pow(t_, 4); }
  Rat qhalf() const { return t_ * t_; }
  const Rat& qquarter() const { return t_; }
  Rat beta() const { return s_ * s_; }
  const Rat& betahalf() const { return s_; }
  Rat a() const { return t_ * s_; }

  /// Parameters of the q^k beta family: (t, t^{2k} s).
  QParams shifted(long k) const;

  std::string str() const { return t_.str() + "," + s_.str(); }
  friend bool operator==(const QParams&, const QParams&) = default;

private:
  Rat t_, s_;
};

struct JacobiParams {
  JacobiParams(Rat alpha, Rat beta);
  Rat alpha, beta;
};

struct KrawtchoukParams {
  KrawtchoukParams(Rat p, std::size_t N);
  Rat p;
  std::size_t N;
};

struct HahnParams {
  HahnParams(Rat alpha, Rat beta, std::size_t N);
  Rat alpha, beta;
  std::size_t N;
};

/// gamma = -N-1.
struct RacahParams {
  RacahParams(Rat alpha, Rat beta, std::size_t N, Rat delta);
  Rat gamma() const { return Rat(-static_cast<long>(N) - 1); }
  Rat alpha, beta;
  std::size_t N;
  Rat delta;
};

struct WilsonParams {
  Rat a, b, c, d;
  /// a' = (a+b+c+d-1)/2, b' = a+b-a', c' = a+c-a', d' = a+d-a'.
  WilsonParams dual() const;
};

struct AWParams {
  /// Requires 0 < qbase < 1 and no pairwise product equal to 1.
  AWParams(Rat a, Rat b, Rat c, Rat d, Rat qbase);
  Rat a, b, c, d, qbase;
};

/// gamma = q^{-N-1}. Weight denominators are checked for x = 0..N.
struct QRacahParams {
  QRacahParams(Rat alpha, Rat beta, Rat delta, std::size_t N, Rat qbase);
  Rat gamma() const { return pow(qbase, -static_cast<long>(N) - 1); }
  Rat alpha, beta, delta;
  std::size_t N;
  Rat qbase;
};

struct Norms {
  Rat ratio;  // h_n / h_0
  Rat h0;
};

// Jacobi / ultraspherical, normalized to 1 at x = 1.
Rat jacobi_r(std::size_t n, const JacobiParams& jp, const Rat& x);
Poly jacobi_poly(std::size_t n, const JacobiParams& jp);
Rat ultraspherical_r(std::size_t n, const Rat& alpha, const Rat& x);
Poly ultraspherical_poly(std::size_t n, const Rat& alpha);
std::vector<Rat> ultraspherical_coeffs(std::size_t n, const Rat& alpha);

Rat krawtchouk(std::size_t n, std::size_t x, const KrawtchoukParams& kp);
Rat krawtchouk_weight(std::size_t x, const KrawtchoukParams& kp);

Rat hahn(std::size_t n, std::size_t x, const HahnParams& hp);
Rat hahn_weight(std::size_t x, const HahnParams& hp);
Rat dual_hahn(std::size_t n, std::size_t x, const HahnParams& hp);

/// 4F3(-n, n+a+b+1, -x, x+g+d+1; a+1, b+d+1, g+1; 1) for arbitrary gamma.
Rat racah_series(std::size_t n, std::size_t x, const Rat& alpha, const Rat& beta, const Rat& gamma,
                 const Rat& delta);
Rat racah(std::size_t n, std::size_t x, const RacahParams& rp);
Rat racah_weight(std::size_t x, const RacahParams& rp);
Norms racah_norms(std::size_t n, const RacahParams& rp);

Rat wilson_dual_phi(std::size_t n, std::size_t m, const WilsonParams& wp);

/// Generic terminating 4phi3 in z:
/// 4phi3(num0, num1, a z, a/z; den0, den1, den2; qbase, qbase), cut at n.
SymmetricLaurent laurent_4phi3(std::size_t n, const Rat& num0, const Rat& num1, const Rat& a,
                               const Rat& den0, const Rat& den1, const Rat& den2, const Rat& qbase);

SymmetricLaurent askey_wilson_r(std::size_t n, const AWParams& awp);
/// Point value of R_n[z; a, b, c, d | q] by term ratios; no pairwise-product
/// check, so it also serves degenerate kernels that terminate early.
Rat askey_wilson_value(std::size_t n, const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                       const Rat& qbase, const Rat& z);

SymmetricLaurent cqu_r(std::size_t n, const QParams& qp);
SymmetricLaurent cqu_r_alt(std::size_t n, const QParams& qp);
Rat cqu_value(std::size_t n, const QParams& qp, const Rat& z);

Rat qracah_series(std::size_t n, std::size_t x, const Rat& alpha, const Rat& beta, const Rat& gamma,
                  const Rat& delta, const Rat& qbase);
Rat qracah(std::size_t n, std::size_t x, const QRacahParams& qrp);
Rat qracah_weight_general(std::size_t x, const Rat& alpha, const Rat& beta, const Rat& gamma,
                          const Rat& delta, const Rat& qbase);
Rat qracah_weight(std::size_t x, const QRacahParams& qrp);
Norms qracah_norms(std::size_t n, const QRacahParams& qrp);

/// q-Racah parameters of the cqu linearization weights:
/// (beta q^{-1/2}, beta q^{-1/2}, q^{-m-1}, beta^{-1} q^{-l-1/2}), N = m.
QRacahParams qracah_linearization_params(const QParams& qp, std::size_t l, std::size_t m);
/// Racah parameters of the ultraspherical linearization weights:
/// (alpha-1/2, alpha-1/2, -m-1, -l-alpha-1/2), N = m.
RacahParams racah_linearization_params(const Rat& alpha, std::size_t l, std::size_t m);

/// Stable identifiers accepted by the CLI.
const std::vector<std::string_view>& family_ids();

}  // namespace askey
