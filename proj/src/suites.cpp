#include "askey/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <thread>

namespace askey {

namespace {

using Tasks = std::vector<SuiteTask>;

std::string num(std::size_t v) { return std::to_string(v); }

std::string fmt(Flt v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

template <class F>
void add(Tasks& tasks, std::string id, ParamList params, F&& f) {
  tasks.push_back({std::move(id), std::move(params),
                   [f = std::forward<F>(f)](const CheckOptions& o) { return SuiteEntry{f(o), std::nullopt}; }});
}

ParamList with(ParamList p, std::initializer_list<std::pair<std::string, std::string>> extra) {
  p.insert(p.end(), extra.begin(), extra.end());
  return p;
}

const std::vector<PythagoreanPair>& pyth_pairs() {
  static const std::vector<PythagoreanPair> v{PythagoreanPair(Rat(3, 5), Rat(4, 5)),
                                              PythagoreanPair(Rat(5, 13), Rat(12, 13)),
                                              PythagoreanPair(Rat(8, 17), Rat(15, 17))};
  return v;
}

const std::vector<PythagoreanPair>& phi_pairs() {
  static const std::vector<PythagoreanPair> v{PythagoreanPair(Rat(7, 25), Rat(24, 25)),
                                              PythagoreanPair(Rat(-3, 5), Rat(4, 5)),
                                              PythagoreanPair(Rat(20, 29), Rat(21, 29))};
  return v;
}

// Float measurement judged against a bound; a mutation pushes the value
// across the bound.
CheckReport float_check(std::string id, ParamList params, std::string location, Flt value, Flt bound, bool below,
                        const CheckOptions& opt) {
  if (opt.mutation) {
    const Flt d = std::abs(opt.mutation->delta.to_double());
    value = below ? value + d + bound : value - std::abs(value) - d - bound;
  }
  CheckReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.comparisons = 1;
  if (!std::isfinite(value)) throw NonFinite(r.id + ": non-finite value");
  const bool ok = below ? value < bound : value > bound;
  r.residual = fmt(value);
  if (!ok) {
    r.verdict = Verdict::fail;
    r.witness = Witness{std::move(location), fmt(value), std::string(below ? "< " : "> ") + fmt(bound)};
  }
  return r;
}

SuiteEntry limit_entry(const LimitSpec& spec, const CheckOptions& opt) {
  LimitReport lr = limit_check(spec);
  if (opt.mutation && !lr.errors.empty()) {
    const std::size_t back = std::min<std::size_t>(opt.mutation->index % 3, lr.errors.size() - 1);
    lr.errors[lr.errors.size() - 1 - back] += std::abs(opt.mutation->delta.to_double()) + 1;
    assess_limit(lr);
  }
  CheckReport r;
  r.id = "limit." + std::string(to_string(spec.kind));
  r.params = lr.params;
  r.comparisons = lr.errors.size();
  r.verdict = lr.verdict;
  if (!lr.errors.empty()) r.residual = fmt(lr.errors.back());
  if (lr.verdict == Verdict::fail) {
    const std::size_t i = lr.failing_index.value_or(lr.errors.size() - 1);
    r.witness = Witness{"schedule=" + fmt(lr.schedule[i]), "error " + fmt(lr.errors[i]), lr.message};
  }
  return {std::move(r), std::move(lr)};
}

void duality(Tasks& t, const SuiteGrid& g) {
  for (const QParams& qp : g.grid.qparams) {
    add(t, "duality.cqu", with(qparams_list(qp), {{"mmax", "6"}}),
        [qp](const CheckOptions& o) { return check_duality_cqu(qp, 6, o); });
  }
  for (const Rat& p : {Rat(1, 3), Rat(1, 2)}) {
    for (std::size_t N = 1; N <= 5; ++N) {
      add(t, "duality.krawtchouk", {{"p", p.str()}, {"N", num(N)}},
          [p, N](const CheckOptions& o) { return check_duality_krawtchouk(KrawtchoukParams(p, N), o); });
    }
  }
  for (const auto& [a, b] : {std::pair{Rat(1, 2), Rat(1, 3)}, std::pair{Rat(2), Rat(1)}}) {
    for (std::size_t N = 1; N <= 5; ++N) {
      add(t, "duality.hahn", {{"alpha", a.str()}, {"beta", b.str()}, {"N", num(N)}},
          [a, b, N](const CheckOptions& o) { return check_duality_hahn(HahnParams(a, b, N), o); });
    }
  }
  for (std::size_t N = 0; N <= 4; ++N) {
    add(t, "duality.racah", {{"alpha", "1/2"}, {"beta", "1/3"}, {"N", num(N)}, {"delta", "1/5"}},
        [N](const CheckOptions& o) {
          return check_duality_racah(RacahParams(Rat(1, 2), Rat(1, 3), N, Rat(1, 5)), o);
        });
  }
  for (const WilsonParams& wp : {WilsonParams{Rat(1), Rat(3, 2), Rat(2), Rat(5, 2)},
                                 WilsonParams{Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5)}}) {
    add(t, "duality.wilson",
        {{"a", wp.a.str()}, {"b", wp.b.str()}, {"c", wp.c.str()}, {"d", wp.d.str()}, {"nmax", "4"}},
        [wp](const CheckOptions& o) { return check_duality_wilson(wp, 4, o); });
  }
}

// The two generic sets have weights of both signs.
std::vector<QRacahParams> qracah_sets(const SuiteGrid& g, bool generic = true) {
  std::vector<QRacahParams> v;
  if (generic) {
    v.emplace_back(Rat(1, 3), Rat(1, 2), Rat(1, 5), 3, Rat(1, 16));
    v.emplace_back(Rat(1, 4), Rat(2, 3), Rat(1, 3), 4, Rat(1, 9));
  }
  for (const QParams& qp : g.grid.qparams) {
    for (std::size_t N = 1; N <= 4; ++N) v.push_back(qracah_linearization_params(qp, 4, N));
  }
  return v;
}

ParamList qracah_list(const QRacahParams& p) {
  return {{"alpha", p.alpha.str()}, {"beta", p.beta.str()}, {"delta", p.delta.str()}, {"N", num(p.N)},
          {"q", p.qbase.str()}};
}

void orthogonality(Tasks& t, const SuiteGrid& g) {
  for (const Rat& p : {Rat(1, 3), Rat(1, 2)}) {
    for (std::size_t N = 1; N <= 5; ++N) {
      add(t, "orthogonality.krawtchouk", {{"p", p.str()}, {"N", num(N)}},
          [p, N](const CheckOptions& o) { return check_orthogonality_krawtchouk(KrawtchoukParams(p, N), o); });
    }
  }
  for (const auto& [a, b] : {std::pair{Rat(1, 2), Rat(1, 3)}, std::pair{Rat(2), Rat(1)}}) {
    for (std::size_t N = 1; N <= 5; ++N) {
      add(t, "orthogonality.hahn", {{"alpha", a.str()}, {"beta", b.str()}, {"N", num(N)}},
          [a, b, N](const CheckOptions& o) { return check_orthogonality_hahn(HahnParams(a, b, N), o); });
    }
  }
  for (const Rat& alpha : g.grid.alphas) {
    for (std::size_t N = 0; N <= 4; ++N) {
      const RacahParams rp = racah_linearization_params(alpha, 4, N);
      add(t, "orthogonality.racah",
          {{"alpha", rp.alpha.str()}, {"beta", rp.beta.str()}, {"N", num(N)}, {"delta", rp.delta.str()}},
          [rp](const CheckOptions& o) { return check_orthogonality_racah(rp, o); });
    }
  }
  for (const QRacahParams& p : qracah_sets(g, false)) {
    add(t, "orthogonality.q-racah", qracah_list(p),
        [p](const CheckOptions& o) { return check_orthogonality_qracah(p, o); });
  }
}

void weight_recurrence(Tasks& t, const SuiteGrid& g) {
  for (const QParams& qp : g.grid.qparams) {
    add(t, "structure.weight-ratio", qparams_list(qp),
        [qp](const CheckOptions& o) { return check_weight_ratio(qp, o); });
    add(t, "structure.leading-coefficient", with(qparams_list(qp), {{"nmax", "8"}}),
        [qp](const CheckOptions& o) { return check_leading_coefficient(qp, 8, o); });
  }
}

void difference(Tasks& t, const SuiteGrid& g) {
  for (const QParams& qp : g.grid.qparams) {
    add(t, "structure.difference", with(qparams_list(qp), {{"nmax", "8"}}),
        [qp](const CheckOptions& o) { return check_difference_formula(qp, 8, o); });
  }
}

void backward_shift(Tasks& t, const SuiteGrid& g) {
  for (const QRacahParams& p : qracah_sets(g)) {
    add(t, "structure.q-racah-at-N", qracah_list(p),
        [p](const CheckOptions& o) { return check_qracah_at_N(p, o); });
    add(t, "structure.backward-shift", with(qracah_list(p), {{"nmax", num(p.N)}}),
        [p](const CheckOptions& o) { return check_backward_shift(p, p.N, o); });
  }
}

// (l, m) with m <= l <= lmax and m <= mmax
template <class F>
void lm_grid(std::size_t lmax, std::size_t mmax, F&& f) {
  for (std::size_t l = 0; l <= lmax; ++l) {
    for (std::size_t m = 0; m <= std::min(l, mmax); ++m) f(l, m);
  }
}

void linearization(Tasks& t, const SuiteGrid& g) {
  for (const QParams& qp : g.grid.qparams) {
    lm_grid(g.grid.q_lmax, g.mmax, [&](std::size_t l, std::size_t m) {
      add(t, "linearization.q", with(qparams_list(qp), {{"l", num(l)}, {"m", num(m)}}),
          [qp, l, m](const CheckOptions& o) { return check_linearization_q(qp, l, m, o); });
    });
  }
  for (const Rat& alpha : g.grid.alphas) {
    lm_grid(g.grid.classical_lmax, g.mmax, [&](std::size_t l, std::size_t m) {
      add(t, "linearization.classical", {{"alpha", alpha.str()}, {"l", num(l)}, {"m", num(m)}},
          [alpha, l, m](const CheckOptions& o) { return check_linearization_classical(alpha, l, m, o); });
    });
  }
  lm_grid(g.grid.classical_lmax, g.mmax, [&](std::size_t l, std::size_t m) {
    add(t, "linearization.legendre", {{"l", num(l)}, {"m", num(m)}},
        [l, m](const CheckOptions& o) { return check_linearization_legendre(l, m, o); });
  });
}

void theorem(Tasks& t, const SuiteGrid& g) {
  for (const QParams& qp : g.grid.qparams) {
    lm_grid(g.grid.q_lmax, g.mmax, [&](std::size_t l, std::size_t m) {
      add(t, "theorem-5-1", with(qparams_list(qp), {{"l", num(l)}, {"m", num(m)}}),
          [qp, l, m](const CheckOptions& o) { return check_theorem_5_1(qp, l, m, o); });
    });
  }
}

void dual_addition(Tasks& t, const SuiteGrid& g) {
  for (const QParams& qp : g.grid.qparams) {
    lm_grid(g.grid.q_lmax, g.mmax, [&](std::size_t l, std::size_t m) {
      for (std::size_t j = 0; j <= m; ++j) {
        for (DualMode mode : {DualMode::direct, DualMode::inversion}) {
          const char* mname = mode == DualMode::direct ? "direct" : "inversion";
          add(t, "dual-addition.q",
              with(qparams_list(qp), {{"l", num(l)}, {"m", num(m)}, {"j", num(j)}, {"mode", mname}}),
              [qp, l, m, j, mode](const CheckOptions& o) { return check_dual_addition_q(qp, l, m, j, mode, o); });
        }
      }
    });
  }
  for (const Rat& alpha : g.grid.alphas) {
    lm_grid(g.grid.classical_lmax, g.mmax, [&](std::size_t l, std::size_t m) {
      for (std::size_t j = 0; j <= m; ++j) {
        add(t, "dual-addition.classical", {{"alpha", alpha.str()}, {"l", num(l)}, {"m", num(m)}, {"j", num(j)}},
            [alpha, l, m, j](const CheckOptions& o) { return check_dual_addition_classical(alpha, l, m, j, o); });
      }
    });
  }
}

void addition(Tasks& t, const SuiteGrid& g) {
  const std::size_t nmax = std::min<std::size_t>(5, g.grid.q_lmax);
  for (const QParams& qp : g.grid.qparams) {
    for (std::size_t n = 0; n <= nmax; ++n) {
      for (const Rat& u : {Rat(2), Rat(3, 2)}) {
        for (const Rat& v : {Rat(3), Rat(5, 4)}) {
          add(t, "addition.q", with(qparams_list(qp), {{"n", num(n)}, {"u", u.str()}, {"v", v.str()}}),
              [qp, n, u, v](const CheckOptions& o) { return check_addition_q(qp, n, u, v, o); });
        }
      }
    }
  }
  const std::size_t cmax = std::min<std::size_t>(5, g.grid.classical_lmax);
  for (const Rat& alpha : g.grid.alphas) {
    for (std::size_t n = 0; n <= cmax; ++n) {
      for (const auto& x : pyth_pairs()) {
        for (const auto& y : pyth_pairs()) {
          add(t, "addition.classical", {{"alpha", alpha.str()}, {"n", num(n)}, {"x", x.str()}, {"y", y.str()}},
              [alpha, n, x, y](const CheckOptions& o) { return check_addition_classical(alpha, n, x, y, o); });
        }
      }
    }
  }
  for (std::size_t n = 0; n <= cmax; ++n) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& t1 = pyth_pairs()[i];
      const auto& t2 = pyth_pairs()[(i + 1) % 3];
      for (const auto& phi : phi_pairs()) {
        add(t, "addition.legendre", {{"n", num(n)}, {"t1", t1.str()}, {"t2", t2.str()}, {"phi", phi.str()}},
            [n, t1, t2, phi](const CheckOptions& o) { return check_addition_legendre(n, t1, t2, phi, o); });
      }
    }
  }
}

void restriction(Tasks& t, const SuiteGrid& g) {
  const std::size_t lmax = std::min<std::size_t>(3, g.grid.q_lmax);
  for (const QParams& qp : g.grid.qparams) {
    lm_grid(lmax, g.mmax, [&](std::size_t l, std::size_t m) {
      for (std::size_t j = 0; j <= m; ++j) {
        for (std::size_t n = m; n <= lmax + 1; ++n) {
          add(t, "restriction", with(qparams_list(qp), {{"l", num(l)}, {"m", num(m)}, {"j", num(j)}, {"n", num(n)}}),
              [qp, l, m, j, n](const CheckOptions& o) { return check_restriction_equivalence(qp, l, m, j, n, o); });
        }
      }
    });
  }
}

void product_formula(Tasks& t, const SuiteGrid& g) {
  const std::size_t nmax = std::min<std::size_t>(6, g.grid.classical_lmax);
  for (const Rat& alpha : g.grid.alphas) {
    for (std::size_t n = 0; n <= nmax; ++n) {
      for (const auto& x : pyth_pairs()) {
        for (const auto& y : pyth_pairs()) {
          add(t, "product-formula.classical",
              {{"alpha", alpha.str()}, {"n", num(n)}, {"x", x.str()}, {"y", y.str()}},
              [alpha, n, x, y](const CheckOptions& o) { return check_product_formula_classical(alpha, n, x, y, o); });
        }
      }
    }
  }
}

void limits(Tasks& t, const SuiteGrid&) {
  for (LimitKind k : limit_kinds()) {
    const LimitSpec spec = default_limit_spec(k);
    t.push_back({"limit." + std::string(to_string(k)), {}, [spec](const CheckOptions& o) {
                   return limit_entry(spec, o);
                 }});
  }
  add(t, "limit.bessel-special-cases", {{"x", "0.5,1,2,5,10"}}, [](const CheckOptions& o) {
    return float_check("limit.bessel-special-cases", {{"x", "0.5,1,2,5,10"}}, "max deviation",
                       bessel_special_case_error(), 1e-12, true, o);
  });
  add(t, "limit.bessel-even", {{"alpha", "0,1/2,3/2"}}, [](const CheckOptions& o) {
    Flt e = 0;
    for (Flt a : {0.0, 0.5, 1.5}) {
      for (Flt x : {0.5, 1.0, 3.0, 7.0}) e = std::max(e, std::abs(bessel_script_j(a, -x) - bessel_script_j(a, x)));
    }
    return float_check("limit.bessel-even", {{"alpha", "0,1/2,3/2"}}, "max |J(-x) - J(x)|", e, 1e-15, true, o);
  });
}

void numeric_orthogonality(Tasks& t, const SuiteGrid& g) {
  const std::vector<Flt> thetas{0.1, 0.4, 0.9, 1.3, 1.9, 2.6, 3.0};
  for (const QParams& qp : g.grid.qparams) {
    const CquFloat c = to_float(qp);
    const ParamList base = qparams_list(qp);
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t n = 0; n < m; ++n) {
        const ParamList p = with(base, {{"m", num(m)}, {"n", num(n)}});
        add(t, "numeric.cqu-orthogonality", p, [c, p, m, n](const CheckOptions& o) {
          return float_check("numeric.cqu-orthogonality", p, "normalized residual",
                             numeric_orthogonality_cqu(c, m, n).residual, 1e-8, true, o);
        });
      }
    }
    add(t, "numeric.cqu-positive", base, [c, base](const CheckOptions& o) {
      return float_check("numeric.cqu-positive", base, "integral of w", numeric_orthogonality_cqu(c, 0, 0).integral, 0,
                         false, o);
    });
    add(t, "numeric.aw-h0", base, [c, base](const CheckOptions& o) {
      return float_check("numeric.aw-h0", base, "relative deviation", numeric_orthogonality_aw_h0(c.aw()), 1e-8, true,
                         o);
    });
    add(t, "numeric.weight-ratio", base, [c, base, thetas](const CheckOptions& o) {
      const CquFloat up{c.q, c.q * c.beta};
      const Flt cc = std::sqrt(c.q) * c.beta;
      Flt e = 0;
      for (Flt th : thetas) {
        const Flt exact = 1 - 2 * cc * std::cos(2 * th) + cc * cc;
        e = std::max(e, std::abs(numeric_weight(up, th) / numeric_weight(c, th) - exact) / exact);
      }
      return float_check("numeric.weight-ratio", base, "max relative deviation", e, 1e-10, true, o);
    });
    add(t, "numeric.weight-symmetry", base, [c, base, thetas](const CheckOptions& o) {
      Flt e = 0;
      for (Flt th : thetas) {
        const Flt w = numeric_weight(c, th);
        e = std::max(e, std::abs(numeric_weight(c, std::numbers::pi - th) - w) / w);
      }
      return float_check("numeric.weight-symmetry", base, "max relative deviation", e, 1e-12, true, o);
    });
    add(t, "numeric.weight-constancy", base, [c, base, thetas](const CheckOptions& o) {
      Flt lo = INFINITY, hi = 0;
      for (Flt th : thetas) {
        const Flt r = numeric_weight(c.aw(), th) / (numeric_weight(c, th) * std::sin(th));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      return float_check("numeric.weight-constancy", base, "relative spread", (hi - lo) / hi, 1e-10, true, o);
    });
    add(t, "numeric.float-consistency", with(base, {{"nmax", "8"}}), [c, qp, base](const CheckOptions& o) {
      Flt e = 0;
      for (std::size_t n = 0; n <= 8; ++n) {
        const Poly p(x_coefficients(cqu_r(n, qp)));
        for (const Rat& x : {Rat(-9, 10), Rat(-1, 3), Rat(1, 7), Rat(3, 5), Rat(1)}) {
          const Flt exact = p(x).to_double();
          e = std::max(e, std::abs(cqu_x<Flt>(n, c.q, c.beta, x.to_double()) - exact) / std::abs(exact));
        }
      }
      return float_check("numeric.float-consistency", with(base, {{"nmax", "8"}}), "max relative deviation", e,
                         1e-12, true, o);
    });
  }
}

using Builder = void (*)(Tasks&, const SuiteGrid&);

const std::vector<std::pair<std::string_view, Builder>>& builders() {
  static const std::vector<std::pair<std::string_view, Builder>> b{
      {"duality", duality},
      {"orthogonality", orthogonality},
      {"weight-recurrence", weight_recurrence},
      {"difference", difference},
      {"backward-shift", backward_shift},
      {"linearization", linearization},
      {"theorem-5-1", theorem},
      {"dual-addition", dual_addition},
      {"addition", addition},
      {"restriction", restriction},
      {"product-formula", product_formula},
      {"limits", limits},
      {"numeric-orthogonality", numeric_orthogonality},
  };
  return b;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> v;
    for (const auto& [name, _] : builders()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<SuiteTask> suite_tasks(std::string_view suite, const SuiteGrid& grid) {
  Tasks tasks;
  bool found = false;
  for (const auto& [name, build] : builders()) {
    if (suite == "all" || suite == name) {
      build(tasks, grid);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("unknown suite: " + std::string(suite));
  return tasks;
}

std::vector<SuiteEntry> run_tasks(const std::vector<SuiteTask>& tasks, std::size_t jobs, const CheckOptions& opt) {
  std::vector<SuiteEntry> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i].run(opt);
      } catch (const std::exception& e) {
        CheckReport r;
        r.id = tasks[i].id;
        r.params = tasks[i].params;
        r.verdict = Verdict::error;
        r.message = e.what();
        out[i] = SuiteEntry{std::move(r), std::nullopt};
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::jthread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::stable_sort(out.begin(), out.end(), [](const SuiteEntry& a, const SuiteEntry& b) {
    if (a.report.id != b.report.id) return a.report.id < b.report.id;
    return a.report.params_text() < b.report.params_text();
  });
  return out;
}

Summary summarize(const std::vector<SuiteEntry>& entries) {
  Summary s;
  for (const auto& e : entries) {
    switch (e.report.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: ++s.fail; break;
      case Verdict::error: ++s.error; break;
    }
  }
  return s;
}

int exit_code(const Summary& s) { return s.fail == 0 && s.error == 0 ? 0 : 1; }

}  // namespace askey
