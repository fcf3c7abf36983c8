#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "askey/suites.hpp"

using namespace askey;

namespace {

constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string float_text(const Rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", r.to_double());
  return buf;
}

Rat parse_rat(const std::string& s, const char* what) {
  try {
    return Rat::parse(s);
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": not a rational: " + s);
  }
}

QParams parse_qparams(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw ConfigError("--qparams expects t,s: " + s);
  return QParams(parse_rat(s.substr(0, comma), "--qparams"), parse_rat(s.substr(comma + 1), "--qparams"));
}

std::multimap<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::multimap<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line without '=': " + line);
    auto trim = [](std::string s) {
      const auto f = s.find_first_not_of(" \t\r");
      const auto l = s.find_last_not_of(" \t\r");
      return f == std::string::npos ? std::string() : s.substr(f, l - f + 1);
    };
    kv.emplace(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return kv;
}

struct VerifyArgs {
  std::string suite;
  std::string format = "json";
  std::string out;
  std::vector<std::string> qparams;
  std::vector<std::string> alphas;
  std::optional<std::size_t> lmax, mmax, jobs;
  std::string config;
  std::string mutate;
  bool format_given = false;
};

std::size_t to_size(const std::string& v, const char* what) {
  try {
    std::size_t pos = 0;
    const unsigned long r = std::stoul(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError(std::string(what) + ": not a natural number: " + v);
  }
}

int run_verify(VerifyArgs a) {
  if (!a.config.empty()) {
    const bool flag_q = !a.qparams.empty(), flag_alpha = !a.alphas.empty(), flag_suite = !a.suite.empty();
    for (const auto& [k, v] : read_config(a.config)) {
      if (k == "qparams") {
        if (!flag_q) a.qparams.push_back(v);
      } else if (k == "alpha") {
        if (!flag_alpha) a.alphas.push_back(v);
      } else if (k == "grid-lmax") {
        if (!a.lmax) a.lmax = to_size(v, "grid-lmax");
      } else if (k == "grid-mmax") {
        if (!a.mmax) a.mmax = to_size(v, "grid-mmax");
      } else if (k == "jobs") {
        if (!a.jobs) a.jobs = to_size(v, "jobs");
      } else if (k == "suite") {
        if (!flag_suite) a.suite = v;
      } else if (k == "format") {
        if (!a.format_given) a.format = v;
      } else {
        throw ConfigError("unknown config key: " + k);
      }
    }
  }
  if (a.suite.empty()) throw ConfigError("--suite is required");
  if (!is_suite(a.suite)) throw ConfigError("unknown suite: " + a.suite);
  Format fmt;
  if (a.format == "json") fmt = Format::json;
  else if (a.format == "text") fmt = Format::text;
  else if (a.format == "csv") fmt = Format::csv;
  else throw ConfigError("unknown format: " + a.format);

  SuiteGrid g;
  if (!a.qparams.empty()) {
    g.grid.qparams.clear();
    for (const auto& s : a.qparams) g.grid.qparams.push_back(parse_qparams(s));
  }
  if (!a.alphas.empty()) {
    g.grid.alphas.clear();
    for (const auto& s : a.alphas) {
      Rat al = parse_rat(s, "--alpha");
      if (al <= Rat(-1, 2)) throw ConfigError("--alpha must exceed -1/2: " + s);
      g.grid.alphas.push_back(al);
    }
  }
  if (a.lmax) {
    if (*a.lmax > 10) throw ConfigError("--grid-lmax must be at most 10");
    g.grid.q_lmax = g.grid.classical_lmax = *a.lmax;
  }
  g.mmax = a.mmax.value_or(std::max(g.grid.q_lmax, g.grid.classical_lmax));

  CheckOptions opt;
  if (!a.mutate.empty()) {
    Mutation m;
    const auto colon = a.mutate.find(':');
    m.index = to_size(a.mutate.substr(0, colon), "--mutate");
    if (colon != std::string::npos) m.delta = parse_rat(a.mutate.substr(colon + 1), "--mutate");
    if (m.delta.is_zero()) throw ConfigError("--mutate delta must be nonzero");
    opt.mutation = m;
  }
  std::size_t jobs = a.jobs.value_or(std::max(1u, std::thread::hardware_concurrency()));
  if (jobs == 0) throw ConfigError("--jobs must be positive");

  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.suite = a.suite;
  doc.grid = g;
  doc.checks = run_tasks(suite_tasks(a.suite, g), jobs, opt);
  doc.summary = summarize(doc.checks);
  doc.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const std::string text = doc.render(fmt);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.out);
    if (!out) throw ConfigError("cannot write " + a.out);
    out << text;
  }
  return exit_code(doc.summary);
}

struct EvalArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::size_t> m, N;
  std::string qparams, alpha, beta, p, delta, q, a, b, c, d, at, at_z, x;
};

Rat need(const std::string& v, const char* flag) {
  if (v.empty()) throw ConfigError(std::string("missing ") + flag);
  return parse_rat(v, flag);
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw ConfigError(std::string("missing ") + flag);
  return *v;
}

std::size_t point_index(const std::string& x, std::size_t N) {
  if (x.empty()) throw ConfigError("missing --x");
  if (x == "N") return N;
  const std::size_t v = to_size(x, "--x");
  if (v > N) throw InadmissiblePoint("--x must lie in 0..N");
  return v;
}

void print_value(const Rat& r) { std::cout << r.str() << "\n" << float_text(r) << "\n"; }

void print_laurent(const SymmetricLaurent& s, const EvalArgs& e) {
  if (!e.at_z.empty()) return print_value(eval_at(s.poly(), parse_rat(e.at_z, "--at-z")));
  if (!e.at.empty()) return print_value(Poly(x_coefficients(s))(parse_rat(e.at, "--at")));
  std::cout << s.str() << "\n";
}

int run_eval(const EvalArgs& e) {
  const std::string& f = e.family;
  if (f == "jacobi" || f == "ultraspherical") {
    const Rat al = need(e.alpha, "--alpha");
    const JacobiParams jp(al, f == "jacobi" ? need(e.beta, "--beta") : al);
    if (e.at.empty()) std::cout << jacobi_poly(e.n, jp).str() << "\n";
    else print_value(jacobi_r(e.n, jp, parse_rat(e.at, "--at")));
  } else if (f == "krawtchouk") {
    const KrawtchoukParams kp(need(e.p, "--p"), need(e.N, "--N"));
    print_value(krawtchouk(e.n, point_index(e.x, kp.N), kp));
  } else if (f == "hahn" || f == "dual-hahn") {
    const HahnParams hp(need(e.alpha, "--alpha"), need(e.beta, "--beta"), need(e.N, "--N"));
    const std::size_t x = point_index(e.x, hp.N);
    if (e.n > hp.N) throw InadmissibleParams("--n must lie in 0..N");
    print_value(f == "hahn" ? hahn(e.n, x, hp) : dual_hahn(e.n, x, hp));
  } else if (f == "racah") {
    const RacahParams rp(need(e.alpha, "--alpha"), need(e.beta, "--beta"), need(e.N, "--N"), need(e.delta, "--delta"));
    if (e.n > rp.N) throw InadmissibleParams("--n must lie in 0..N");
    print_value(racah(e.n, point_index(e.x, rp.N), rp));
  } else if (f == "wilson-dual") {
    const WilsonParams wp{need(e.a, "--a"), need(e.b, "--b"), need(e.c, "--c"), need(e.d, "--d")};
    print_value(wilson_dual_phi(e.n, need(e.m, "--m"), wp));
  } else if (f == "askey-wilson") {
    const AWParams p(need(e.a, "--a"), need(e.b, "--b"), need(e.c, "--c"), need(e.d, "--d"), need(e.q, "--q"));
    print_laurent(askey_wilson_r(e.n, p), e);
  } else if (f == "cqu" || f == "cqu-alt") {
    if (e.qparams.empty()) throw ConfigError("missing --qparams");
    const QParams qp = parse_qparams(e.qparams);
    print_laurent(f == "cqu" ? cqu_r(e.n, qp) : cqu_r_alt(e.n, qp), e);
  } else if (f == "q-racah") {
    const QRacahParams p(need(e.alpha, "--alpha"), need(e.beta, "--beta"), need(e.delta, "--delta"), need(e.N, "--N"),
                         need(e.q, "--q"));
    if (e.n > p.N) throw InadmissibleParams("--n must lie in 0..N");
    print_value(qracah(e.n, point_index(e.x, p.N), p));
  } else {
    throw ConfigError("unknown family: " + f);
  }
  return 0;
}

struct TableArgs {
  std::string family;
  std::optional<std::size_t> N, from, to;
  std::string alpha, beta, delta, q, p;
};

int run_table(const TableArgs& t) {
  const std::string& f = t.family;
  std::function<Rat(std::size_t)> row;
  std::size_t N = need(t.N, "--N");
  if (f == "racah-weights" || f == "racah-norms") {
    const RacahParams rp(need(t.alpha, "--alpha"), need(t.beta, "--beta"), N, need(t.delta, "--delta"));
    if (f == "racah-weights") row = [rp](std::size_t x) { return racah_weight(x, rp); };
    else row = [rp](std::size_t n) { const Norms h = racah_norms(n, rp); return h.ratio * h.h0; };
  } else if (f == "q-racah-weights" || f == "q-racah-norms") {
    const QRacahParams p(need(t.alpha, "--alpha"), need(t.beta, "--beta"), need(t.delta, "--delta"), N,
                         need(t.q, "--q"));
    if (f == "q-racah-weights") row = [p](std::size_t x) { return qracah_weight(x, p); };
    else row = [p](std::size_t n) { const Norms h = qracah_norms(n, p); return h.ratio * h.h0; };
  } else if (f == "krawtchouk-weights") {
    const KrawtchoukParams kp(need(t.p, "--p"), N);
    row = [kp](std::size_t x) { return krawtchouk_weight(x, kp); };
  } else if (f == "hahn-weights") {
    const HahnParams hp(need(t.alpha, "--alpha"), need(t.beta, "--beta"), N);
    row = [hp](std::size_t x) { return hahn_weight(x, hp); };
  } else {
    throw ConfigError("unknown table family: " + f);
  }
  const std::size_t from = t.from.value_or(0);
  const std::size_t to = t.to.value_or(N);
  if (to > N && from <= to) throw InadmissiblePoint("--to must not exceed N");
  std::cout << "index,exact,float\n";
  for (std::size_t i = from; i <= to && from <= to; ++i) {
    const Rat v = row(i);
    std::cout << i << "," << v.str() << "," << float_text(v) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Askey-scheme identities"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", va.suite, "suite name");
  verify->add_option("--format", va.format, "json | text | csv");
  verify->add_option("--out", va.out, "write the report to PATH");
  verify->add_option("--qparams", va.qparams, "t,s pair (repeatable)");
  verify->add_option("--grid-lmax", va.lmax, "largest l (or n) on the grids");
  verify->add_option("--grid-mmax", va.mmax, "largest m on the grids");
  verify->add_option("--alpha", va.alphas, "classical alpha (repeatable)");
  verify->add_option("--config", va.config, "key=value defaults file");
  verify->add_option("--jobs", va.jobs, "worker threads");
  verify->add_option("--mutate", va.mutate, "INDEX[:DELTA] perturb one comparison per check");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a family");
  eval->add_option("--family", ea.family, "family id")->required();
  eval->add_option("--n", ea.n, "degree");
  eval->add_option("--m", ea.m, "second index (wilson-dual)");
  eval->add_option("--N", ea.N, "lattice size");
  eval->add_option("--qparams", ea.qparams, "t,s");
  for (auto [flag, dst] : {std::pair{"--alpha", &ea.alpha}, {"--beta", &ea.beta}, {"--p", &ea.p},
                           {"--delta", &ea.delta}, {"--q", &ea.q}, {"--a", &ea.a}, {"--b", &ea.b},
                           {"--c", &ea.c}, {"--d", &ea.d}, {"--at", &ea.at}, {"--at-z", &ea.at_z},
                           {"--x", &ea.x}}) {
    eval->add_option(flag, *dst);
  }

  TableArgs ta;
  auto* table = app.add_subcommand("table", "CSV table of weights or norms");
  table->add_option("--family", ta.family, "racah-weights | racah-norms | q-racah-weights | q-racah-norms | "
                                           "krawtchouk-weights | hahn-weights")
      ->required();
  table->add_option("--N", ta.N, "lattice size");
  table->add_option("--from", ta.from, "first index");
  table->add_option("--to", ta.to, "last index");
  for (auto [flag, dst] : {std::pair{"--alpha", &ta.alpha}, {"--beta", &ta.beta}, {"--delta", &ta.delta},
                           {"--q", &ta.q}, {"--p", &ta.p}}) {
    table->add_option(flag, *dst);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) {
      va.format_given = verify->count("--format") > 0;
      return run_verify(va);
    }
    if (*eval) return run_eval(ea);
    if (*table) return run_table(ta);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
