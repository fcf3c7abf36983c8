#include "askey/numerics.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <iomanip>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace askey {

namespace {

using Cx = std::complex<Flt>;

constexpr Flt kTruncation = 1e-18;
constexpr Flt kQuadTolerance = 1e-9;
constexpr std::size_t kMaxNodes = std::size_t(1) << 20;
constexpr Flt kBandLow = 0.35;
constexpr Flt kBandHigh = 0.65;
constexpr Flt kBesselTarget = 1e-3;

// first K with q^K < 1e-18
std::size_t truncation_index(Flt q) {
  std::size_t K = 0;
  for (Flt qk = 1; qk >= kTruncation; qk *= q) ++K;
  return K;
}

// (c z; q)_inf truncated
Cx qpoch_inf(Cx cz, Flt q, std::size_t K) {
  Cx r(1);
  for (std::size_t k = 0; k < K; ++k, cz *= q) r *= Cx(1) - cz;
  return r;
}

Flt qpoch_inf(Flt c, Flt q, std::size_t K) {
  Flt r = 1;
  for (std::size_t k = 0; k < K; ++k, c *= q) r *= 1 - c;
  return r;
}

void require_finite(Flt v, const char* what) {
  if (!std::isfinite(v)) throw NonFinite(std::string(what) + ": non-finite value");
}

// |(e^{2i th}; q)_inf / (c e^{2i th}; q)_inf|^2
Flt cqu_density(const CquFloat& p, Flt theta, std::size_t K) {
  const Flt c = std::sqrt(p.q) * p.beta;
  auto f = [&](Cx z) { return qpoch_inf(z, p.q, K) / qpoch_inf(c * z, p.q, K); };
  const Cx z = std::polar(Flt(1), 2 * theta);
  return (f(z) * f(std::conj(z))).real();
}

Flt aw_density(const AWFloat& p, Flt theta, std::size_t K) {
  auto f = [&](Cx z) {
    return qpoch_inf(z * z, p.q, K) /
           (qpoch_inf(p.a * z, p.q, K) * qpoch_inf(p.b * z, p.q, K) * qpoch_inf(p.c * z, p.q, K) *
            qpoch_inf(p.d * z, p.q, K));
  };
  const Cx z = std::polar(Flt(1), theta);
  return (f(z) * f(std::conj(z))).real();
}

// trapezoid on [0, pi] with N panels; integrands vanish at both ends
template <class F>
Flt trapezoid(F&& f, std::size_t N) {
  const Flt h = std::numbers::pi_v<Flt> / static_cast<Flt>(N);
  Flt sum = 0.5 * (f(Flt(0)) + f(std::numbers::pi_v<Flt>));
  for (std::size_t i = 1; i < N; ++i) sum += f(h * static_cast<Flt>(i));
  return sum * h;
}

std::string fmt(Flt v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

Flt sup_error(const std::vector<Flt>& points, auto&& diff) {
  Flt e = 0;
  for (Flt x : points) {
    const Flt d = std::abs(static_cast<Flt>(diff(x)));
    require_finite(d, "limit check");
    e = std::max(e, d);
  }
  return e;
}

// k-th term of the q dual addition expansion, q-Racah factor included
Flt dual_term_q(const LimitSpec& s, Flt q, std::size_t k, Flt x) {
  const Flt t = std::pow(q, 0.25);
  const Flt beta = std::pow(q, s.alpha);
  const Flt b2 = beta * beta;
  const Flt qh = std::sqrt(q);
  const Flt kk = static_cast<Flt>(k);
  Flt c = std::pow(t, 2 * kk * static_cast<Flt>(k + s.l + s.m + 2)) * std::pow(beta, kk);
  if (k > 0) c *= (1 - b2 * std::pow(q, 2 * kk)) / (1 - b2 * std::pow(q, kk));
  const Flt qbk = qpochhammer(q * beta, q, k);
  c *= qpochhammer(std::pow(q, -static_cast<Flt>(s.l)), q, k) * qpochhammer(std::pow(q, -static_cast<Flt>(s.m)), q, k) *
       qpochhammer(q * b2, q, k) / (qbk * qbk * qpochhammer(q, q, k));
  const Flt d = qpochhammer(-qh * beta, qh, 2 * k);
  c /= d * d;
  for (std::size_t i = 0; i < k; ++i) {
    const Flt ci = std::pow(t, 4 * static_cast<Flt>(i) + 2) * beta;
    c *= 4 * ci * x * x - (1 + ci) * (1 + ci);
  }
  const Flt bk = std::pow(q, kk) * beta;
  c *= cqu_x<Flt>(s.l - k, q, bk, x) * cqu_x<Flt>(s.m - k, q, bk, x);
  const Flt ar = beta / qh;
  const Flt delta = 1 / (beta * std::pow(q, static_cast<Flt>(s.l) + 0.5));
  return c * qracah_x<Flt>(k, s.j, ar, ar, std::pow(q, -static_cast<Flt>(s.m) - 1), delta, q);
}

Flt dual_term_classical(const LimitSpec& s, std::size_t k, Flt x) {
  const Flt al = s.alpha;
  const Flt kk = static_cast<Flt>(k);
  Flt c = k == 0 ? 1 : (al + kk) / (al + kk / 2);
  const Flt ap = pochhammer(al + 1, k);
  c *= pochhammer(-static_cast<Flt>(s.l), k) * pochhammer(-static_cast<Flt>(s.m), k) * pochhammer(2 * al + 1, k) /
       (std::pow(4.0, kk) * ap * ap * pochhammer(1.0, k));
  c *= std::pow(x * x - 1, kk) * ultraspherical_x<Flt>(s.l - k, al + kk, x) *
       ultraspherical_x<Flt>(s.m - k, al + kk, x);
  return c * racah_x<Flt>(k, s.j, al - 0.5, al - 0.5, -static_cast<Flt>(s.m) - 1,
                          -static_cast<Flt>(s.l) - al - 0.5);
}

}  // namespace

Flt bessel_script_j(Flt alpha, Flt x, Flt tol) {
  if (!(tol > 0)) throw std::invalid_argument("bessel_script_j: tol must be positive");
  if (!(alpha > -1)) throw InadmissibleParams("bessel_script_j: alpha must exceed -1");
  using L = long double;
  const L y = -static_cast<L>(x) * static_cast<L>(x) / 4;
  L sum = 1, term = 1;
  for (std::size_t k = 0; k < 1000; ++k) {
    term *= y / ((static_cast<L>(alpha) + 1 + k) * (k + 1));
    sum += term;
    if (std::abs(term) < static_cast<L>(tol) * std::abs(sum)) return static_cast<Flt>(sum);
  }
  throw NonConvergence("bessel_script_j: more than 1000 terms");
}

Flt bessel_special_case_error() {
  Flt e = 0;
  for (Flt x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    e = std::max(e, std::abs(bessel_script_j(-0.5, x) - std::cos(x)));
    e = std::max(e, std::abs(bessel_script_j(0.5, x) - std::sin(x) / x));
  }
  return e;
}

AWFloat CquFloat::aw() const {
  const Flt a = std::pow(q, 0.25) * std::sqrt(beta);
  const Flt qh = std::sqrt(q);
  return {a, qh * a, -a, -qh * a, q};
}

AWFloat to_float(const AWParams& p) {
  return {p.a.to_double(), p.b.to_double(), p.c.to_double(), p.d.to_double(), p.qbase.to_double()};
}

CquFloat to_float(const QParams& qp) { return {qp.q().to_double(), qp.beta().to_double()}; }

Flt numeric_weight(const CquFloat& p, Flt theta) {
  const Flt sn = std::sin(theta);
  const Flt w = cqu_density(p, theta, truncation_index(p.q)) / sn;
  require_finite(w, "cqu weight");
  return w;
}

Flt numeric_weight(const AWFloat& p, Flt theta) {
  const Flt w = aw_density(p, theta, truncation_index(p.q));
  require_finite(w, "Askey-Wilson weight");
  return w;
}

Flt aw_h0(const AWFloat& p) {
  const std::size_t K = truncation_index(p.q);
  auto P = [&](Flt c) { return qpoch_inf(c, p.q, K); };
  return 4 * std::numbers::pi_v<Flt> * P(p.a * p.b * p.c * p.d) /
         (P(p.q) * P(p.a * p.b) * P(p.a * p.c) * P(p.a * p.d) * P(p.b * p.c) * P(p.b * p.d) * P(p.c * p.d));
}

QuadResult numeric_orthogonality_cqu(const CquFloat& p, std::size_t m, std::size_t n, std::size_t quad_points) {
  if (quad_points < 64) throw std::invalid_argument("numeric orthogonality: need at least 64 points");
  const std::size_t K = truncation_index(p.q);
  auto integrals = [&](std::size_t N) {
    Flt imm = 0, inn = 0, imn = 0;
    const Flt h = std::numbers::pi_v<Flt> / static_cast<Flt>(N);
    for (std::size_t i = 1; i < N; ++i) {
      const Flt th = h * static_cast<Flt>(i);
      const Flt x = std::cos(th);
      const Flt g = cqu_density(p, th, K);
      const Flt rm = cqu_x<Flt>(m, p.q, p.beta, x);
      const Flt rn = cqu_x<Flt>(n, p.q, p.beta, x);
      imm += rm * rm * g;
      inn += rn * rn * g;
      imn += rm * rn * g;
    }
    return std::array<Flt, 3>{imm * h, inn * h, imn * h};
  };
  std::size_t N = quad_points;
  auto prev = integrals(N);
  while (true) {
    N *= 2;
    if (N > kMaxNodes) throw NonConvergence("numeric orthogonality: node doubling exceeded 2^20");
    const auto cur = integrals(N);
    const Flt scale = std::max(cur[0], cur[1]);
    bool done = true;
    for (int i = 0; i < 3; ++i) done = done && std::abs(cur[i] - prev[i]) <= kQuadTolerance * scale;
    for (Flt v : cur) require_finite(v, "numeric orthogonality");
    if (done) return {cur[2], std::abs(cur[2]) / std::sqrt(cur[0] * cur[1]), N};
    prev = cur;
  }
}

Flt numeric_orthogonality_aw_h0(const AWFloat& p, std::size_t quad_points) {
  if (quad_points < 64) throw std::invalid_argument("numeric orthogonality: need at least 64 points");
  const std::size_t K = truncation_index(p.q);
  auto integral = [&](std::size_t N) { return 2 * trapezoid([&](Flt th) { return aw_density(p, th, K); }, N); };
  std::size_t N = quad_points;
  Flt prev = integral(N);
  while (true) {
    N *= 2;
    if (N > kMaxNodes) throw NonConvergence("numeric orthogonality: node doubling exceeded 2^20");
    const Flt cur = integral(N);
    require_finite(cur, "numeric orthogonality");
    if (std::abs(cur - prev) <= kQuadTolerance * std::abs(cur)) {
      const Flt h0 = aw_h0(p);
      return std::abs(cur - h0) / std::abs(h0);
    }
    prev = cur;
  }
}

std::string_view to_string(LimitKind k) {
  switch (k) {
    case LimitKind::cqu_to_ultra: return "cqu-to-ultra";
    case LimitKind::hahn_to_jacobi: return "hahn-to-jacobi";
    case LimitKind::jacobi_to_bessel: return "jacobi-to-bessel";
    case LimitKind::dual_addition_q_to_1: return "dual-addition-q-to-1";
  }
  return "?";
}

const std::vector<LimitKind>& limit_kinds() {
  static const std::vector<LimitKind> kinds{LimitKind::cqu_to_ultra, LimitKind::hahn_to_jacobi,
                                            LimitKind::jacobi_to_bessel, LimitKind::dual_addition_q_to_1};
  return kinds;
}

LimitSpec default_limit_spec(LimitKind kind) {
  LimitSpec s;
  s.kind = kind;
  switch (kind) {
    case LimitKind::cqu_to_ultra:
      s.n = 3;
      s.alpha = 0.5;
      s.points = {0, 0.3, -0.3, 0.7, -0.7};
      break;
    case LimitKind::hahn_to_jacobi:
      s.n = 2;
      s.alpha = 0;
      s.beta = 0;
      s.points = {0.1, 0.5, 0.9};
      break;
    case LimitKind::jacobi_to_bessel:
      s.alpha = 0;
      s.beta = 0;
      s.points = {0.5, 1, 2};
      break;
    case LimitKind::dual_addition_q_to_1:
      s.alpha = 0.5;
      s.l = 3;
      s.m = 2;
      s.j = 1;
      s.points = {0, 0.3, -0.3, 0.7, -0.7};
      break;
  }
  return s;
}

LimitReport limit_check(const LimitSpec& s) {
  LimitReport r;
  r.kind = s.kind;
  switch (s.kind) {
    case LimitKind::cqu_to_ultra:
      r.params = {{"alpha", fmt(s.alpha)}, {"n", std::to_string(s.n)}};
      break;
    case LimitKind::hahn_to_jacobi:
      r.params = {{"alpha", fmt(s.alpha)}, {"beta", fmt(s.beta)}, {"n", std::to_string(s.n)}};
      break;
    case LimitKind::jacobi_to_bessel:
      r.params = {{"alpha", fmt(s.alpha)}, {"beta", fmt(s.beta)}};
      break;
    case LimitKind::dual_addition_q_to_1:
      r.params = {{"alpha", fmt(s.alpha)}, {"l", std::to_string(s.l)}, {"m", std::to_string(s.m)},
                  {"j", std::to_string(s.j)}};
      break;
  }
  for (int e : s.exponents) {
    const Flt p2 = std::ldexp(1.0, e);
    Flt err = 0;
    switch (s.kind) {
      case LimitKind::cqu_to_ultra: {
        const Flt q = 1 - 1 / p2;
        r.schedule.push_back(q);
        err = sup_error(s.points, [&](Flt x) {
          return cqu_x<Flt>(s.n, q, std::pow(q, s.alpha), x) - ultraspherical_x<Flt>(s.n, s.alpha, x);
        });
        break;
      }
      case LimitKind::hahn_to_jacobi: {
        const auto N = static_cast<std::size_t>(p2);
        r.schedule.push_back(p2);
        err = sup_error(s.points, [&](Flt x) {
          return hahn_x<Flt>(s.n, p2 * x, s.alpha, s.beta, N) - jacobi_u<Flt>(s.n, s.alpha, s.beta, x);
        });
        break;
      }
      case LimitKind::jacobi_to_bessel: {
        using L = long double;
        const auto n = static_cast<std::size_t>(p2);
        r.schedule.push_back(p2);
        err = sup_error(s.points, [&](Flt x) {
          const L sh = std::sin(static_cast<L>(x) / (2 * static_cast<L>(n)));
          return jacobi_u<L>(n, s.alpha, s.beta, sh * sh) - static_cast<L>(bessel_script_j(s.alpha, x));
        });
        break;
      }
      case LimitKind::dual_addition_q_to_1: {
        const Flt q = 1 - 1 / p2;
        r.schedule.push_back(q);
        for (std::size_t k = 0; k <= s.m; ++k) {
          err = std::max(err, sup_error(s.points, [&](Flt x) {
                           return dual_term_q(s, q, k, x) - dual_term_classical(s, k, x);
                         }));
        }
        break;
      }
    }
    r.errors.push_back(err);
  }
  assess_limit(r);
  return r;
}

void assess_limit(LimitReport& r) {
  r.ratios.clear();
  r.verdict = Verdict::pass;
  r.message.clear();
  r.failing_index.reset();
  for (std::size_t i = 1; i < r.errors.size(); ++i) {
    r.ratios.push_back(r.errors[i - 1] == 0 ? 0 : r.errors[i] / r.errors[i - 1]);
  }
  const auto& e = r.errors;
  auto fail = [&](std::size_t i, std::string msg) {
    r.verdict = Verdict::fail;
    r.failing_index = i;
    r.message = std::move(msg);
  };
  if (std::all_of(e.begin(), e.end(), [](Flt v) { return v == 0; })) return;
  if (e.size() < 4) return fail(0, "fewer than four schedule entries");
  for (std::size_t i = e.size() - 3; i < e.size(); ++i) {
    if (!(e[i] < e[i - 1])) return fail(i, "errors not strictly decreasing over the last four entries");
  }
  if (r.kind == LimitKind::jacobi_to_bessel) {
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] > e[i - 1]) return fail(i, "errors not monotone");
    }
    if (!(e.back() < kBesselTarget)) return fail(e.size() - 1, "final error " + fmt(e.back()) + " not below 1e-3");
    return;
  }
  const Flt last = r.ratios.back();
  if (!(last >= kBandLow && last <= kBandHigh)) {
    fail(e.size() - 1, "final ratio " + fmt(last) + " outside [0.35, 0.65]");
  }
}

std::string LimitReport::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["schedule"] = schedule;
  j["errors"] = errors;
  j["ratios"] = ratios;
  j["verdict"] = askey::to_string(verdict);
  if (!message.empty()) j["message"] = message;
  return j.dump(2);
}

std::string LimitReport::to_text() const {
  std::ostringstream os;
  os << to_string(kind);
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  os << " " << askey::to_string(verdict);
  if (!message.empty()) os << " (" << message << ")";
  os << "\n";
  os << std::setw(14) << "schedule" << std::setw(14) << "error" << std::setw(10) << "ratio" << "\n";
  for (std::size_t i = 0; i < errors.size(); ++i) {
    os << std::setw(14) << std::setprecision(8) << schedule[i] << std::setw(14) << std::setprecision(4)
       << errors[i] << std::setw(10);
    if (i > 0) os << std::setprecision(3) << ratios[i - 1];
    else os << "-";
    os << "\n";
  }
  return os.str();
}

}  // namespace askey
