#include "unitfrac/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "unitfrac/analytic.hpp"
#include "unitfrac/errors.hpp"
#include "unitfrac/explorer.hpp"
#include "unitfrac/parametrization.hpp"
#include "unitfrac/report_io.hpp"
#include "unitfrac/search.hpp"

namespace unitfrac::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re_text = text.substr(0, comma);
    const double re = std::stod(re_text, &used);
    require(used == re_text.size(), "bad real part in '" + text + "'");
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string im_text = text.substr(comma + 1);
      im = std::stod(im_text, &used);
      require(used == im_text.size(), "bad imaginary part in '" + text + "'");
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw UsageError("expected RE[,IM], got '" + text + "'");
  }
}

// key = value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos,
            path + ":" + std::to_string(number) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("UNITFRAC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

enum class Format { Json, Csv, Human };

struct Options {
  Format format = Format::Json;
  std::string output_path;
  std::string config_path;
  unsigned threads = 1;
  bool progress = false;

  PrecisionConfig precision;
  std::int64_t k = 4;
  std::int64_t n = 0;
  std::int64_t n_start = 2;
  std::int64_t n_end = 0;
  std::int64_t big_n = 0;
  std::int64_t x_max = 0;
  std::int64_t t_span = 0;
  int escalate = 0;
  std::string s_text = "2";
  std::string scheme = "proportional";
  double alpha = 0.0;
  double x0 = 1.0;
  double x = 1.0;
  double t = 1.0;
  double eps = 1e-3;
  double t_min = 10.0;
  double t_max = 30.0;
  double step = 0.05;
  int samples = 5;
};

struct Outcome {
  Json params;
  Json result;
  CsvTable csv;
  std::string human;
  int code = kOk;
};

// Fills options the command line left unset from the config file.
void apply_config(const CLI::App& app, Options& o) {
  if (o.config_path.empty()) return;
  for (const auto& [key, value] : read_config(o.config_path)) {
    auto given = [&](const std::string& flag) {
      for (const CLI::App* scope : {&app, static_cast<const CLI::App*>(app.get_subcommands().front())}) {
        for (const CLI::Option* opt : scope->get_options())
          if (opt->check_lname(flag) && opt->count() > 0) return true;
      }
      return false;
    };
    auto number = [&]<class T>(T& target) {
      std::istringstream in(value);
      T v;
      require(static_cast<bool>(in >> v) && in.eof(),
              "config key '" + key + "' has bad value '" + value + "'");
      target = v;
    };
    if (key == "em_terms") {
      if (!given("em-terms")) number(o.precision.em_terms);
    } else if (key == "em_bernoulli") {
      if (!given("em-bernoulli")) number(o.precision.em_bernoulli);
    } else if (key == "tol") {
      if (!given("tol")) number(o.precision.tol);
    } else if (key == "x_max") {
      if (!given("x-max")) number(o.x_max);
    } else if (key == "t_span") {
      if (!given("t-span")) number(o.t_span);
    } else if (key == "threads") {
      if (!given("threads")) number(o.threads);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

void check_precision(const PrecisionConfig& p) {
  require(p.em_terms >= 10, "--em-terms must be >= 10");
  require(p.em_bernoulli >= 2 && p.em_bernoulli <= 30, "--em-bernoulli must be in [2, 30]");
  require(p.tol > 0, "--tol must be > 0");
}

std::optional<SearchBounds> bounds_from(const Options& o, std::int64_t n_for_default) {
  if (o.x_max == 0 && o.t_span == 0) return std::nullopt;
  SearchBounds b = default_bounds(n_for_default);
  if (o.x_max != 0) b.x_max = o.x_max;
  if (o.t_span != 0) b.t_span = o.t_span;
  require(b.valid(), "--x-max and --t-span must be >= 1");
  return b;
}

Json precision_json(const PrecisionConfig& p) { return p; }

std::string human_complex(Complex z) {
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") +
         format_double(std::abs(z.imag())) + "i";
}

std::function<void(std::int64_t, std::int64_t)> progress_printer(const Options& o,
                                                                 std::ostream& err) {
  if (!o.progress) return {};
  auto last = std::make_shared<std::int64_t>(-1);
  auto mutex = std::make_shared<std::mutex>();
  return [&err, last, mutex](std::int64_t done, std::int64_t total) {
    const std::int64_t pct = total ? 100 * done / total : 100;
    std::lock_guard lock(*mutex);
    if (pct / 10 != *last / 10) {
      *last = pct;
      err << "progress: " << done << "/" << total << " (" << pct << "%)\n";
    }
  };
}

Outcome do_solve(const Options& o) {
  require(o.k >= 2, "--k must be >= 2");
  require(o.n >= 2, "--n must be >= 2");
  const SearchBounds b = bounds_from(o, o.n).value_or(default_bounds(o.n));
  Outcome out;
  out.params = {{"k", o.k}, {"n", o.n}, {"bounds", b}};
  const auto d = solve_first(o.k, o.n, b);
  out.result = d ? Json(*d) : Json(nullptr);
  out.csv = csv_of(d ? &*d : nullptr, o.k, o.n);
  if (d) {
    out.human = std::to_string(o.k) + "/" + std::to_string(o.n) + " = 1/" +
                std::to_string(d->params.x) + " + 1/" + d->y.str() + " + 1/" + d->z.str() +
                "  (t = " + std::to_string(d->params.t) + ", m = " + d->m.str() + ")\n";
  } else {
    out.human = "no witness within x_max = " + std::to_string(b.x_max) +
                ", t_span = " + std::to_string(b.t_span) + "\n";
    out.code = kUnsolved;
  }
  return out;
}

Outcome do_verify_range(const Options& o, std::ostream& err) {
  require(o.k >= 2, "--k must be >= 2");
  require(o.n_start >= 2, "--from must be >= 2");
  require(o.n_end >= o.n_start, "--to must be >= --from");
  require(o.escalate >= 0, "--escalate must be >= 0");
  const auto b = bounds_from(o, o.n_end);
  Outcome out;
  out.params = {{"k", o.k},
                {"n_start", o.n_start},
                {"n_end", o.n_end},
                {"bounds", b ? Json(*b) : Json("default")},
                {"escalate", o.escalate}};
  RangeReport r = verify_range(o.k, o.n_start, o.n_end, b,
                               ParallelOptions{o.threads, progress_printer(o, err)});
  if (o.escalate > 0 && !r.unsolved.empty()) escalate_unsolved(r, b, o.escalate);
  out.result = r;
  out.csv = csv_of(r);
  std::ostringstream h;
  h << "k = " << r.k << ", n in [" << r.n_start << ", " << r.n_end << "]: " << r.solved_count
    << " solved, " << r.unsolved.size() << " unsolved";
  if (!r.escalations.empty()) h << ", " << r.escalations.size() << " after escalation";
  h << '\n';
  if (!r.unsolved.empty()) {
    h << "unsolved:";
    for (auto n : r.unsolved) h << ' ' << n;
    h << '\n';
  }
  out.human = h.str();
  if (!r.unsolved.empty()) out.code = kUnsolved;
  return out;
}

Outcome do_density(const Options& o, std::ostream& err) {
  require(o.k >= 2, "--k must be >= 2");
  require(o.big_n >= 2, "--N must be >= 2");
  const std::int64_t x_max = o.x_max != 0 ? o.x_max : 2 * o.big_n;
  require(x_max >= 1, "--x-max must be >= 1");
  Outcome out;
  out.params = {{"k", o.k}, {"N", o.big_n}, {"x_max", x_max}};
  const DensityReport r =
      zero_density(o.k, o.big_n, x_max, ParallelOptions{o.threads, progress_printer(o, err)});
  out.result = r;
  out.csv = csv_of(r);
  out.human = "k = " + std::to_string(r.k) + ", N = " + std::to_string(r.N) + ": " +
              std::to_string(r.zero_count) + " of " + std::to_string(r.N - 1) +
              " n have an F = 0 pair (fraction " + format_double(r.fraction) + ")\n";
  return out;
}

Outcome value_outcome(const std::string& label, Json params, Complex s, Complex v,
                      std::optional<std::int64_t> k) {
  Outcome out;
  out.params = std::move(params);
  out.result = {{"value", complex_to_json(v)}};
  CsvTable t;
  std::vector<std::string> row;
  if (k) {
    t.header.push_back("k");
    row.push_back(std::to_string(*k));
  }
  t.header.insert(t.header.end(), {"s_re", "s_im", "re", "im"});
  row.insert(row.end(), {format_double(s.real()), format_double(s.imag()),
                         format_double(v.real()), format_double(v.imag())});
  t.rows.push_back(std::move(row));
  out.csv = std::move(t);
  out.human = label + "(" + human_complex(s) + ") = " + human_complex(v) + "\n";
  return out;
}

Outcome do_zeta(const Options& o) {
  check_precision(o.precision);
  const Complex s = parse_complex(o.s_text);
  return value_outcome("zeta",
                       {{"s", complex_to_json(s)}, {"precision", precision_json(o.precision)}},
                       s, zeta(s, o.precision), std::nullopt);
}

Outcome do_gk_eval(const Options& o) {
  check_precision(o.precision);
  require(o.k >= 2, "--k must be >= 2");
  const Complex s = parse_complex(o.s_text);
  return value_outcome("G_" + std::to_string(o.k),
                       {{"k", o.k},
                        {"s", complex_to_json(s)},
                        {"precision", precision_json(o.precision)}},
                       s, gk_continued(o.k, s, o.precision), o.k);
}

Scheme scheme_from(const Options& o) {
  if (o.scheme == "proportional")
    return o.alpha != 0.0 ? Scheme{ProportionalDoubleRoot{o.alpha}} : default_scheme(o.k);
  if (o.scheme == "fixed-x") return FixedXDoubleRoot{o.x0};
  if (o.scheme == "general") return GeneralXT{o.x, o.t};
  throw UsageError("--scheme must be proportional, fixed-x or general");
}

Json scheme_json(const Scheme& scheme) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ProportionalDoubleRoot>)
          return {{"kind", "proportional"}, {"alpha", v.alpha}};
        else if constexpr (std::is_same_v<T, FixedXDoubleRoot>)
          return {{"kind", "fixed-x"}, {"x0", v.x0}};
        else
          return {{"kind", "general"}, {"x", v.x}, {"t", v.t}};
      },
      scheme);
}

Outcome do_gk_sum(const Options& o) {
  check_precision(o.precision);
  require(o.k >= 2, "--k must be >= 2");
  require(o.big_n >= 1, "--N must be >= 1");
  const Complex s = parse_complex(o.s_text);
  const Scheme scheme = scheme_from(o);
  Outcome out;
  out.params = {{"k", o.k},
                {"s", complex_to_json(s)},
                {"N", o.big_n},
                {"scheme", scheme_json(scheme)},
                {"precision", precision_json(o.precision)}};
  const SumReport r = gk_partial_sum(scheme, o.k, s, o.big_n, o.precision);
  out.result = r;
  out.csv = csv_of(r);
  out.human = "partial = " + human_complex(r.partial) + "\ntail    = " +
              human_complex(r.tail_estimate) + "\nk zeta  = " + human_complex(r.reference) +
              "\nabs_error = " + format_double(r.abs_error) + "\n";
  return out;
}

Outcome do_func_eq(const Options& o) {
  check_precision(o.precision);
  require(o.k >= 2, "--k must be >= 2");
  const Complex s = parse_complex(o.s_text);
  Outcome out;
  out.params = {{"k", o.k}, {"s", complex_to_json(s)}, {"precision", precision_json(o.precision)}};
  const double symmetric = functional_eq_residual(o.k, s, o.precision);
  std::optional<double> asymmetric;
  try {
    asymmetric = functional_eq_residual_asymmetric(o.k, s, o.precision);
  } catch (const DomainError&) {
    // Gamma(1-s) has a pole here; only the symmetric form applies.
  }
  out.result = {{"residual", symmetric},
                {"asymmetric_residual", asymmetric ? Json(*asymmetric) : Json(nullptr)}};
  out.csv = {{"k", "s_re", "s_im", "residual", "asymmetric_residual"},
             {{std::to_string(o.k), format_double(s.real()), format_double(s.imag()),
               format_double(symmetric), asymmetric ? format_double(*asymmetric) : ""}}};
  out.human = "symmetric residual  = " + format_double(symmetric) + "\n" +
              "asymmetric residual = " + (asymmetric ? format_double(*asymmetric) : "n/a") +
              "\n";
  return out;
}

Outcome do_residue(const Options& o) {
  check_precision(o.precision);
  require(o.k >= 2, "--k must be >= 2");
  require(o.eps > 0 && o.eps <= 1e-2, "--eps must lie in (0, 1e-2]");
  Outcome out;
  out.params = {{"k", o.k}, {"eps", o.eps}, {"precision", precision_json(o.precision)}};
  const double v = residue_probe(o.k, o.eps, o.precision);
  const double deviation = std::abs(v - static_cast<double>(o.k));
  out.result = {{"value", v}, {"deviation", deviation}};
  out.csv = {{"k", "eps", "value", "deviation"},
             {{std::to_string(o.k), format_double(o.eps), format_double(v),
               format_double(deviation)}}};
  out.human = "(s - 1) G_" + std::to_string(o.k) + "(s) at s = 1 + " + format_double(o.eps) +
              ": " + format_double(v) + " (|value - k| = " + format_double(deviation) + ")\n";
  return out;
}

Outcome do_scan(const Options& o) {
  check_precision(o.precision);
  require(o.k >= 1, "--k must be >= 1");
  require(o.t_min > 0 && o.t_min < o.t_max, "need 0 < --t-min < --t-max");
  require(o.step > 0, "--step must be > 0");
  Outcome out;
  out.params = {{"k", o.k},
                {"t_min", o.t_min},
                {"t_max", o.t_max},
                {"step", o.step},
                {"precision", precision_json(o.precision)}};
  const ScanResult r =
      scan_critical_line(o.k, o.t_min, o.t_max, o.step, o.precision, ScanOptions{1e-9, o.threads});
  out.result = r;
  out.csv = csv_of(r);
  std::ostringstream h;
  h << r.zeros.size() << " zero(s) of G_" << o.k << " on Re(s) = 1/2, t in [" << o.t_min
    << ", " << o.t_max << "]\n";
  for (const auto& z : r.zeros)
    h << "  t = " << format_double(z.refined_t) << "  |G| = " << format_double(z.min_abs) << '\n';
  if (r.step_too_coarse) h << "warning: step may be too coarse to separate zeros\n";
  out.human = h.str();
  return out;
}

Outcome do_f_zeros(const Options& o) {
  require(o.k >= 2, "--k must be >= 2");
  // t = 0 is left to the library, which reports the degenerate quadratic.
  require(o.x > 0 && o.t >= 0, "--x must be > 0 and --t must be >= 0");
  require(o.n >= 2, "--n must be >= 2");
  require(o.samples >= 1, "--samples must be >= 1");
  Outcome out;
  out.params = {{"k", o.k}, {"x", o.x}, {"t", o.t}, {"n", o.n}, {"samples", o.samples}};
  const FZeroFamily f = f_zero_locus(o.k, o.x, o.t, o.n);
  const double residual = verify_f_zero(f, o.samples);
  out.result = {{"family", f}, {"residual", residual}};
  out.csv = csv_of(f, residual);
  std::ostringstream h;
  for (std::size_t i = 0; i < 2; ++i)
    h << "u = " << format_double(f.u_roots[i].real())
      << "  s = " << format_double(f.principal_s[i].real()) << " + i j "
      << format_double(f.branch_period) << '\n';
  h << "max scaled |F| over sampled branches: " << format_double(residual) << '\n';
  out.human = h.str();
  return out;
}

void add_precision(CLI::App* cmd, Options& o) {
  cmd->add_option("--em-terms", o.precision.em_terms, "Euler-Maclaurin direct-sum cutoff");
  cmd->add_option("--em-bernoulli", o.precision.em_bernoulli,
                  "Number of Bernoulli correction terms");
  cmd->add_option("--tol", o.precision.tol, "Target absolute accuracy");
}

void emit(const Options& o, const std::string& command, const Outcome& outcome,
          double elapsed_ms, std::ostream& out) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output_path.empty()) {
    file.open(o.output_path);
    require(static_cast<bool>(file), "cannot write " + o.output_path);
    sink = &file;
  }
  switch (o.format) {
    case Format::Json: {
      const Json doc{{"command", command},
                     {"params", outcome.params},
                     {"result", outcome.result},
                     {"elapsed_ms", elapsed_ms}};
      *sink << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      outcome.csv.write(*sink);
      break;
    case Format::Human:
      *sink << outcome.human;
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Egyptian-fraction parametrization and zeta explorer", "unitfrac"};
  app.require_subcommand(1);
  Options o;
  o.threads = default_threads();

  app.fallthrough();
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format: json, csv or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--output,-o", o.output_path, "Write the report to this file");
  app.add_option("--threads", o.threads, "Worker threads (default: $UNITFRAC_THREADS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--config", o.config_path, "key=value file with presets");
  app.add_flag("--progress", o.progress, "Report progress on standard error");

  auto* solve = app.add_subcommand("solve", "First (x, t) witness for k/n");
  solve->add_option("--k", o.k, "Numerator k >= 2");
  solve->add_option("--n", o.n, "Denominator n >= 2")->required();
  solve->add_option("--x-max", o.x_max, "Largest x tried (default 4n)");
  solve->add_option("--t-span", o.t_span, "t values tried per x (default 1e9)");

  auto* range = app.add_subcommand("verify-range", "solve for every n in a range");
  range->add_option("--k", o.k, "Numerator k >= 2");
  range->add_option("--from", o.n_start, "First n (>= 2)");
  range->add_option("--to", o.n_end, "Last n")->required();
  range->add_option("--x-max", o.x_max, "Largest x tried (default 4n per n)");
  range->add_option("--t-span", o.t_span, "t values tried per x (default 1e9)");
  range->add_option("--escalate", o.escalate, "Retry rounds for unsolved n");

  auto* density = app.add_subcommand("density", "Fraction of n in [2, N] with F = 0");
  density->add_option("--k", o.k, "Numerator k >= 2");
  density->add_option("--N", o.big_n, "Upper end N >= 2")->required();
  density->add_option("--x-max", o.x_max, "Largest x tried (default 2N)");

  auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta at s");
  zeta_cmd->add_option("--s", o.s_text, "RE[,IM]")->required();
  add_precision(zeta_cmd, o);

  auto* gk_eval = app.add_subcommand("gk-eval", "G_k(s) = k zeta(s)");
  gk_eval->add_option("--k", o.k, "k >= 2");
  gk_eval->add_option("--s", o.s_text, "RE[,IM]")->required();
  add_precision(gk_eval, o);

  auto* gk_sum = app.add_subcommand("gk-sum", "Partial sums of G_k against k zeta(s)");
  gk_sum->add_option("--k", o.k, "k >= 2");
  gk_sum->add_option("--s", o.s_text, "RE[,IM] with RE > 1")->required();
  gk_sum->add_option("--N", o.big_n, "Number of terms")->required();
  gk_sum->add_option("--scheme", o.scheme, "proportional | fixed-x | general");
  gk_sum->add_option("--alpha", o.alpha, "Proportional scheme factor (default 2/k)");
  gk_sum->add_option("--x0", o.x0, "Fixed-x scheme value");
  gk_sum->add_option("--x", o.x, "General scheme x");
  gk_sum->add_option("--t", o.t, "General scheme t");
  add_precision(gk_sum, o);

  auto* func_eq = app.add_subcommand("func-eq", "Functional-equation residuals at s");
  func_eq->add_option("--k", o.k, "k >= 2");
  func_eq->add_option("--s", o.s_text, "RE[,IM]")->required();
  add_precision(func_eq, o);

  auto* residue = app.add_subcommand("residue", "(s - 1) G_k(s) at s = 1 + eps");
  residue->add_option("--k", o.k, "k >= 2");
  residue->add_option("--eps", o.eps, "0 < eps <= 1e-2");
  add_precision(residue, o);

  auto* scan = app.add_subcommand("scan-zeros", "Critical-line zeros of G_k");
  scan->add_option("--k", o.k, "k >= 1");
  scan->add_option("--t-min", o.t_min, "Window start (> 0)");
  scan->add_option("--t-max", o.t_max, "Window end");
  scan->add_option("--step", o.step, "Sampling step");
  add_precision(scan, o);

  auto* fzeros = app.add_subcommand("f-zeros", "Values of s with F(n^s) = 0");
  fzeros->add_option("--k", o.k, "k >= 2");
  fzeros->add_option("--x", o.x, "x > 0");
  fzeros->add_option("--t", o.t, "t > 0");
  fzeros->add_option("--n", o.n, "n >= 2")->required();
  fzeros->add_option("--samples", o.samples, "Branches checked per root");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  CLI::App* command = app.get_subcommands().front();
  const std::string name = command->get_name();
  const auto started = std::chrono::steady_clock::now();
  o.format = format_name == "csv" ? Format::Csv
             : format_name == "human" ? Format::Human
                                      : Format::Json;
  try {
    apply_config(app, o);
    require(o.threads >= 1, "--threads must be >= 1");
    Outcome outcome;
    if (name == "solve") outcome = do_solve(o);
    else if (name == "verify-range") outcome = do_verify_range(o, err);
    else if (name == "density") outcome = do_density(o, err);
    else if (name == "zeta") outcome = do_zeta(o);
    else if (name == "gk-eval") outcome = do_gk_eval(o);
    else if (name == "gk-sum") outcome = do_gk_sum(o);
    else if (name == "func-eq") outcome = do_func_eq(o);
    else if (name == "residue") outcome = do_residue(o);
    else if (name == "scan-zeros") outcome = do_scan(o);
    else outcome = do_f_zeros(o);
    const double elapsed = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    emit(o, name, outcome, elapsed, out);
    return outcome.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << command->help();
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    if (o.format == Format::Json) {
      Json error{{"kind", to_string(e.kind())}, {"message", e.what()}};
      if (e.residue()) error["residue"] = *e.residue();
      out << Json{{"command", name}, {"error", error}}.dump(2) << '\n';
    }
    return kDomain;
  }
}

}  // namespace unitfrac::cli
