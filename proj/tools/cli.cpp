#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "opsum/oscillator.hpp"

namespace opsum::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUncertified = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
  return kind == ErrorKind::NotConverged || kind == ErrorKind::QuadratureDiverged ? kExitUncertified : kExitUsage;
}

PolyFamily poly_family(const Problem& p) {
  switch (p.family) {
    case Family::Gegenbauer: return PolyFamily::gegenbauer(p.param);
    case Family::Legendre: return PolyFamily::legendre();
    case Family::ChebyshevT: return PolyFamily::chebyshev_t();
    case Family::ChebyshevU: return PolyFamily::chebyshev_u();
    case Family::Laguerre: return PolyFamily::laguerre(p.param);
    case Family::Hermite:
    case Family::Mehler: return PolyFamily::hermite();
  }
  return PolyFamily::legendre();
}

bool uses_w(Family f) {
  return f == Family::Gegenbauer || f == Family::Legendre || f == Family::ChebyshevT || f == Family::ChebyshevU;
}

bool uses_z(Family f) { return f == Family::Hermite || f == Family::Mehler; }

std::string number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double rel_diff(Complex a, Complex b) {
  const double scale = std::abs(b);
  return scale == 0.0 ? std::abs(a - b) : std::abs(a - b) / scale;
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

std::vector<Family> select_families(const std::string& name) {
  if (name == "all") return {std::begin(kAllFamilies), std::end(kAllFamilies)};
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return {*f};
}

std::string family_choices() {
  std::string out;
  for (Family f : kAllFamilies) {
    if (!out.empty()) out += ", ";
    out += family_name(f);
  }
  return out;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
  std::string family;
  std::string method = "closed";
  std::string precision = "auto";
  unsigned l = 0;
  double lambda = 0, alpha = 0, t = 0, t_im = 0, z = 0, z_im = 0, w = 0, u = 0, x = 0, y = 0;
  double rel_tol = PrecisionCtx{}.rel_tol;
  unsigned max_terms = PrecisionCtx{}.max_terms;
  unsigned nodes = 512;
  double radius = 0;
  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& name) const { return opts.at(name)->count() > 0; }
};

void add_eval_options(CLI::App& cmd, EvalArgs& a) {
  cmd.add_option("family", a.family, "Polynomial family: " + family_choices())->required();
  cmd.add_option("--l", a.l, "Order l of the binomial weight");
  cmd.add_option("--method", a.method, "closed, series or contour")
      ->check(CLI::IsMember({"closed", "series", "contour"}));
  cmd.add_option("--precision", a.precision, "Series precision: auto, standard or extended")
      ->check(CLI::IsMember({"auto", "standard", "extended"}));
  cmd.add_option("--rel-tol", a.rel_tol, "Series relative tolerance");
  cmd.add_option("--max-terms", a.max_terms, "Series term cap");
  cmd.add_option("--nodes", a.nodes, "Contour node count");
  a.opts["radius"] = cmd.add_option("--radius", a.radius, "Contour radius (default: translated)");
  a.opts["lambda"] = cmd.add_option("--lambda", a.lambda, "Gegenbauer parameter");
  a.opts["alpha"] = cmd.add_option("--alpha", a.alpha, "Laguerre parameter");
  a.opts["t"] = cmd.add_option("--t", a.t, "Series variable t (real part)");
  a.opts["t-im"] = cmd.add_option("--t-im", a.t_im, "Imaginary part of t");
  a.opts["z"] = cmd.add_option("--z", a.z, "Series variable z for hermite and mehler (real part)");
  a.opts["z-im"] = cmd.add_option("--z-im", a.z_im, "Imaginary part of z");
  a.opts["w"] = cmd.add_option("--w", a.w, "Argument w in [-1, 1]");
  a.opts["u"] = cmd.add_option("--u", a.u, "Laguerre argument u");
  a.opts["x"] = cmd.add_option("--x", a.x, "Hermite or Mehler argument x");
  a.opts["y"] = cmd.add_option("--y", a.y, "Mehler argument y");
}

Problem eval_problem(const EvalArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("unknown family '" + a.family + "'; expected one of " + family_choices());
  const Family f = *family;

  const auto applies = [f](const std::string& name) {
    if (name == "lambda") return f == Family::Gegenbauer;
    if (name == "alpha" || name == "u") return f == Family::Laguerre;
    if (name == "t" || name == "t-im") return !uses_z(f);
    if (name == "z" || name == "z-im" || name == "x") return uses_z(f);
    if (name == "w") return uses_w(f);
    if (name == "y") return f == Family::Mehler;
    return true;
  };
  for (const auto& [name, opt] : a.opts) {
    if (opt->count() > 0 && !applies(name)) {
      throw UsageError("--" + name + " does not apply to " + std::string(family_name(f)));
    }
  }
  const auto need = [&](const std::string& name) {
    if (!a.given(name)) throw UsageError(std::string(family_name(f)) + " needs --" + name);
  };

  Problem p;
  p.family = f;
  p.l = a.l;
  if (f == Family::Gegenbauer) {
    need("lambda");
    p.param = a.lambda;
  }
  if (f == Family::Laguerre) {
    need("alpha");
    p.param = a.alpha;
  }
  if (uses_z(f)) {
    need("z");
    need("x");
    p.t = Complex(a.z, a.z_im);
    p.arg = a.x;
    if (f == Family::Mehler) {
      need("y");
      p.arg2 = a.y;
    }
  } else {
    need("t");
    p.t = Complex(a.t, a.t_im);
    if (f == Family::Laguerre) {
      need("u");
      p.arg = a.u;
    } else {
      need("w");
      p.arg = a.w;
    }
  }
  return p;
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const Problem p = eval_problem(a);
  Json j;
  if (a.method == "closed") {
    const Complex v = closed_value(p);
    j["value_re"] = v.real() + 0.0;
    j["value_im"] = v.imag() + 0.0;
    j["method"] = "closed";
  } else if (a.method == "series") {
    PrecisionCtx ctx{.rel_tol = a.rel_tol, .max_terms = a.max_terms};
    if (a.precision == "extended") ctx.mode = PrecisionMode::Extended;
    const EvalReport r = a.precision == "auto" ? series_value(p, ctx) : sum_series(series_spec(p), ctx);
    if (!r.converged) {
      err << "error: NotConverged: series not certified after " << r.terms_used
          << " terms (partial " << number(r.value.real()) << (r.value.imag() < 0 ? "" : "+")
          << number(r.value.imag()) << "i, estimated error " << number(r.est_abs_error) << ")\n";
      return kExitUncertified;
    }
    j["value_re"] = r.value.real() + 0.0;
    j["value_im"] = r.value.imag() + 0.0;
    j["method"] = "series";
    j["terms_used"] = r.terms_used;
    j["est_abs_error"] = r.est_abs_error;
  } else {
    ContourResult r;
    if (a.given("radius")) {
      const ContourSpec c{a.radius, a.nodes};
      r = p.family == Family::Mehler
              ? mehler_series_by_contour(p.l, MehlerPoint{p.t, p.arg, p.arg2}, c)
              : derivative_series_by_contour_report(poly_family(p), p.l, p.t, p.arg, c);
    } else {
      r = contour_value(p, a.nodes);
    }
    j["value_re"] = r.value.real() + 0.0;
    j["value_im"] = r.value.imag() + 0.0;
    j["method"] = "contour";
    j["nodes"] = a.nodes;
    j["est_abs_error"] = r.est_abs_error;
  }
  out << j.dump() << '\n';
  return kExitOk;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string family = "all";
  unsigned cases = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  unsigned l_max = 8;
  bool complex_t = false;
  unsigned nodes = 512;
};

struct CaseResult {
  bool ok = true;
  double worst = 0.0;
  std::string note;
};

// Closed form against the series oracle and the contour, each allowed its own
// error estimate on top of the tolerance.
CaseResult check_case(const Problem& p, double tol, unsigned nodes) {
  CaseResult out;
  try {
    const Complex closed = closed_value(p);
    const EvalReport series = series_value(p);
    const ContourResult contour = contour_value(p, nodes);
    const double scale = std::max(std::abs(closed), std::numeric_limits<double>::min());
    const double d_series = std::abs(series.value - closed);
    const double d_contour = std::abs(contour.value - closed);
    out.worst = std::max({d_series, d_contour, std::abs(contour.value - series.value)}) / scale;
    if (p.family == Family::Mehler) {
      const MehlerPoint mp{p.t, p.arg, p.arg2};
      const double d_forms = std::abs(mehler_sum_hermite_form(p.l, mp) - closed);
      out.worst = std::max(out.worst, d_forms / scale);
      if (d_forms > tol * scale) out.note = "Mehler forms disagree";
    }
    if (!series.converged) out.note = "series oracle not certified";
    if (d_series > tol * scale + series.est_abs_error) out.note = "closed form vs series";
    if (d_contour > tol * scale + contour.est_abs_error) out.note = "closed form vs contour";
  } catch (const Error& e) {
    out.note = e.what();
  }
  out.ok = out.note.empty();
  return out;
}

std::string describe(const Problem& p) {
  std::ostringstream s;
  s << family_name(p.family) << " l=" << p.l << " param=" << number(p.param) << " t=" << number(p.t.real())
    << (p.t.imag() < 0 ? "" : "+") << number(p.t.imag()) << "i arg=" << number(p.arg);
  if (p.family == Family::Mehler) s << " y=" << number(p.arg2);
  return s.str();
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  std::mt19937_64 rng(a.seed);
  std::vector<Problem> problems;
  for (Family f : select_families(a.family)) {
    for (unsigned i = 0; i < a.cases; ++i) problems.push_back(random_problem(f, a.l_max, a.complex_t, rng));
  }

  std::vector<CaseResult> results(problems.size());
  parallel_for(problems.size(), [&](std::size_t i) { results[i] = check_case(problems[i], a.tol, a.nodes); });

  std::size_t failures = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    worst = std::max(worst, results[i].worst);
    if (results[i].ok) continue;
    if (failures < 10) err << "FAIL " << describe(problems[i]) << ": " << results[i].note << '\n';
    ++failures;
  }
  Json j;
  j["cases"] = problems.size();
  j["failures"] = failures;
  j["worst_rel_err"] = worst;
  out << j.dump() << '\n';
  return failures == 0 ? kExitOk : kExitFailures;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
  std::string family = "all";
  unsigned l = 5;
  double t = 0;
  bool quick = false;
  unsigned reps = 0;
  CLI::Option* t_opt = nullptr;
};

// Fixed arguments chosen so that no sweep point lands on a zero of the sum.
Problem bench_problem(Family f, unsigned l, double t) {
  Problem p{.family = f, .l = l, .t = t, .arg = 0.35};
  switch (f) {
    case Family::Gegenbauer: p.param = 1.5; break;
    case Family::Laguerre: p.param = 0.5; p.arg = 2.0; break;
    case Family::Mehler: p.arg2 = -0.3; break;
    case Family::ChebyshevT: p.l = std::max(l, 1u); break;
    default: break;
  }
  return p;
}

template <class Fn>
double median_nanos(unsigned reps, Fn&& fn) {
  std::vector<double> nanos(reps);
  double sink = 0.0;
  for (unsigned r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    sink += std::abs(fn());
    const auto stop = std::chrono::steady_clock::now();
    nanos[r] = std::chrono::duration<double, std::nano>(stop - start).count();
  }
  volatile double keep = sink;
  (void)keep;
  std::nth_element(nanos.begin(), nanos.begin() + reps / 2, nanos.end());
  return nanos[reps / 2];
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const unsigned reps = a.reps != 0 ? a.reps : (a.quick ? 100 : 400);
  if (reps < 100) throw UsageError("--reps must be at least 100");
  std::vector<double> ts;
  if (a.t_opt->count() > 0) {
    ts = {a.t};
  } else if (a.quick) {
    ts = {0.1, 0.5, 0.9};
  } else {
    ts = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  }
  const unsigned nodes = 256;

  out << "family,l,t_or_z,method,nanos_per_eval,rel_err_vs_extended,terms_used\n";
  for (Family f : select_families(a.family)) {
    for (double t : ts) {
      const Problem p = bench_problem(f, a.l, t);
      const SeriesSpec spec = series_spec(p);
      const EvalReport ref = sum_series(spec, PrecisionCtx{.mode = PrecisionMode::Extended});

      const auto row = [&](const char* method, double nanos, Complex value, unsigned terms) {
        out << family_name(f) << ',' << p.l << ',' << number(t) << ',' << method << ',' << number(std::round(nanos))
            << ',' << number(rel_diff(value, ref.value)) << ',' << terms << '\n';
      };

      const Complex closed = closed_value(p);
      row("closed", median_nanos(reps, [&] { return closed_value(p); }), closed, 0);

      const EvalReport series = sum_series(spec);
      row("series", median_nanos(reps, [&] { return sum_series(spec).value; }), series.value, series.terms_used);

      const Complex contour = contour_value(p, nodes).value;
      row("contour", median_nanos(reps, [&] { return contour_value(p, nodes).value; }), contour, nodes);
    }
  }
  return kExitOk;
}

// ---- propagator -------------------------------------------------------------

struct PropagatorArgs {
  OscillatorParams params;
  double time = 0;
  double x_a = 0;
  double x_min = -5;
  double x_max = 5;
  unsigned points = 101;
  std::string output;
};

int cmd_propagator(const PropagatorArgs& a, std::ostream& out) {
  const auto rows = propagator_grid(a.params, a.time, a.x_a, a.x_min, a.x_max, a.points);
  if (a.output.empty()) {
    write_grid_csv(out, rows);
    return kExitOk;
  }
  std::ofstream file(a.output);
  if (!file) throw UsageError("cannot open " + a.output);
  write_grid_csv(file, rows);
  return kExitOk;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Gegenbauer: return "gegenbauer";
    case Family::Legendre: return "legendre";
    case Family::ChebyshevT: return "chebyshev-t";
    case Family::ChebyshevU: return "chebyshev-u";
    case Family::Laguerre: return "laguerre";
    case Family::Hermite: return "hermite";
    case Family::Mehler: return "mehler";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Complex closed_value(const Problem& p) {
  switch (p.family) {
    case Family::Gegenbauer: return gegenbauer_sum(p.param, p.l, p.t, p.arg);
    case Family::Legendre: return legendre_sum(p.l, p.t, p.arg);
    case Family::ChebyshevT: return chebyshev_T_sum(p.l, p.t, p.arg);
    case Family::ChebyshevU: return chebyshev_U_sum(p.l, p.t, p.arg);
    case Family::Laguerre: return laguerre_sum(p.param, p.l, p.t, p.arg);
    case Family::Hermite: return hermite_sum(p.l, p.t, p.arg);
    case Family::Mehler: return mehler_sum_laguerre_form(p.l, MehlerPoint{p.t, p.arg, p.arg2});
  }
  return {};
}

SeriesSpec series_spec(const Problem& p) {
  switch (p.family) {
    case Family::ChebyshevT: return SeriesSpec::chebyshev_t_weighted(p.l, p.t, p.arg);
    case Family::Mehler: return SeriesSpec::mehler(p.l, p.t, p.arg, p.arg2);
    default: return SeriesSpec::polynomial(poly_family(p), p.l, p.t, p.arg);
  }
}

EvalReport series_value(const Problem& p, const PrecisionCtx& ctx) {
  const SeriesSpec spec = series_spec(p);
  EvalReport r = sum_series(spec, ctx);
  if (!r.converged && ctx.mode == PrecisionMode::Standard) {
    PrecisionCtx ext = ctx;
    ext.mode = PrecisionMode::Extended;
    r = sum_series(spec, ext);
  }
  return r;
}

ContourResult contour_value(const Problem& p, unsigned nodes) {
  // Hermite's generating function is entire, so any circle will do.
  const ContourSpec c = p.family == Family::Hermite ? ContourSpec{0.5, nodes} : ContourSpec::translated(p.t, nodes);
  if (p.family == Family::Mehler) return mehler_series_by_contour(p.l, MehlerPoint{p.t, p.arg, p.arg2}, c);
  return derivative_series_by_contour_report(poly_family(p), p.l, p.t, p.arg, c);
}

Problem random_problem(Family f, unsigned l_max, bool complex_t, std::mt19937_64& rng) {
  const auto uniform = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  Problem p;
  p.family = f;
  const unsigned l_min = f == Family::ChebyshevT ? 1 : 0;
  p.l = std::uniform_int_distribution<unsigned>(l_min, std::max(l_max, l_min))(rng);
  if (complex_t) {
    p.t = std::polar(0.9 * std::sqrt(uniform(0, 1)), uniform(0, 2 * std::numbers::pi));
  } else {
    p.t = uniform(-0.9, 0.9);
  }
  switch (f) {
    case Family::Gegenbauer:
      do p.param = uniform(-0.4, 5.0);
      while (p.param == 0.0);
      p.arg = uniform(-1, 1);
      break;
    case Family::Laguerre:
      p.param = uniform(-0.9, 5.0);
      p.arg = uniform(0, 10);
      break;
    case Family::Hermite: p.arg = uniform(-3, 3); break;
    case Family::Mehler:
      p.arg = uniform(-3, 3);
      p.arg2 = uniform(-3, 3);
      break;
    default: p.arg = uniform(-1, 1); break;
  }
  return p;
}

unsigned thread_count() {
  if (const char* env = std::getenv("OPSUM_THREADS")) {
    unsigned n = 0;
    const std::string_view s(env);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), n);
    if (res.ec == std::errc() && res.ptr == s.data() + s.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form sums of binomial-weighted orthogonal polynomial series", "opsum"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one sum; prints a JSON object");
  add_eval_options(*eval, eval_args);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Randomized closed form / series / contour agreement");
  verify->add_option("--family", verify_args.family, "Family or 'all'");
  verify->add_option("--cases", verify_args.cases, "Random cases per family");
  verify->add_option("--seed", verify_args.seed, "Random seed");
  verify->add_option("--tol", verify_args.tol, "Relative tolerance");
  verify->add_option("--l-max", verify_args.l_max, "Largest order l");
  verify->add_option("--nodes", verify_args.nodes, "Contour node count");
  verify->add_flag("--complex", verify_args.complex_t, "Draw complex t");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Timing of closed form, series and contour; prints CSV");
  bench->add_option("family", bench_args.family, "Family or 'all'");
  bench->add_option("--l", bench_args.l, "Order l");
  bench_args.t_opt = bench->add_option("--t", bench_args.t, "Single t (or z) instead of the sweep");
  bench->add_flag("--quick", bench_args.quick, "Three-point sweep, 100 repetitions");
  bench->add_option("--reps", bench_args.reps, "Repetitions per row (>= 100)");

  PropagatorArgs prop_args;
  CLI::App* prop = app.add_subcommand("propagator", "Oscillator propagator on a grid of x_b; prints CSV");
  prop->add_option("--time", prop_args.time, "t_b - t_a")->required();
  prop->add_option("--x-a", prop_args.x_a, "Source position");
  prop->add_option("--x-min", prop_args.x_min, "First x_b");
  prop->add_option("--x-max", prop_args.x_max, "Last x_b");
  prop->add_option("--points", prop_args.points, "Number of x_b");
  prop->add_option("--mass", prop_args.params.mass, "Mass");
  prop->add_option("--omega", prop_args.params.omega, "Angular frequency");
  prop->add_option("--hbar", prop_args.params.hbar, "Reduced Planck constant");
  prop->add_option("--epsilon", prop_args.params.epsilon, "Regularization at caustics");
  prop->add_option("--output", prop_args.output, "Write the CSV here instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_args, out, err);
    if (verify->parsed()) return cmd_verify(verify_args, out, err);
    if (bench->parsed()) return cmd_bench(bench_args, out);
    return cmd_propagator(prop_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace opsum::cli
