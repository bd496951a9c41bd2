// bgl: command-line front end for the quadratic non-residue experiments.
// Subcommands map onto the library modules; output is CSV (default) or JSON
// lines, with a JSON manifest written alongside --out files.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgl/analytic.hpp"
#include "bgl/density.hpp"
#include "bgl/errors.hpp"
#include "bgl/exppairs.hpp"
#include "bgl/ntcore.hpp"
#include "bgl/parallel.hpp"
#include "bgl/prime_cache.hpp"
#include "bgl/record.hpp"
#include "bgl/sequences.hpp"

namespace {

using bgl::ExperimentRecord;

constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::string out;
  bool json = false;
  unsigned jobs = bgl::default_jobs();
  long precision_bits = bgl::IntervalReal::kDefaultPrec;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--out", opts->out, "Output file (default: stdout)");
  cmd->add_flag("--json", opts->json, "Emit JSON lines instead of CSV");
  cmd->add_option("--jobs", opts->jobs, "Worker threads")
      ->default_val(bgl::default_jobs());
  cmd->add_option("--precision-bits", opts->precision_bits,
                  "Working precision for real-valued parameters (>= 192)")
      ->default_val(256);
}

struct PrimeGrid {
  std::uint64_t single = 0;
  std::string range;
};

void add_prime_grid(CLI::App* cmd, PrimeGrid* grid) {
  auto* a = cmd->add_option("--prime", grid->single, "Single odd prime p");
  auto* b =
      cmd->add_option("--prime-range", grid->range, "Inclusive range lo:hi");
  a->excludes(b);
}

std::vector<std::uint64_t> resolve_primes(const PrimeGrid& grid) {
  if (grid.single != 0) return {grid.single};
  if (grid.range.empty()) {
    throw bgl::DomainError("one of --prime or --prime-range is required");
  }
  const auto colon = grid.range.find(':');
  if (colon == std::string::npos) {
    throw bgl::DomainError("--prime-range expects lo:hi");
  }
  std::uint64_t lo = 0, hi = 0;
  try {
    lo = std::stoull(grid.range.substr(0, colon));
    hi = std::stoull(grid.range.substr(colon + 1));
  } catch (const std::exception&) {
    throw bgl::DomainError("--prime-range expects integers lo:hi");
  }
  if (lo > hi) throw bgl::DomainError("--prime-range: lo exceeds hi");

  std::vector<std::uint64_t> primes;
  if (const char* dir = std::getenv("BGL_CACHE_DIR")) {
    const std::filesystem::path file =
        std::filesystem::path(dir) / "primes.bin";
    auto cache = bgl::load_or_build_prime_cache(file, hi);
    primes = cache.primes_upto(hi);
  } else {
    primes = bgl::sieve_primes(hi);
  }
  std::erase_if(primes, [&](std::uint64_t p) { return p < lo || p == 2; });
  if (primes.empty()) {
    throw bgl::DomainError("no odd primes in the requested range");
  }
  return primes;
}

void emit(const CommonOpts& opts, const std::string& subcommand,
          const std::map<std::string, std::string>& params,
          const std::vector<ExperimentRecord>& records) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opts.out.empty()) {
    file.open(opts.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw bgl::ResourceError("cannot open output file " + opts.out);
    }
    os = &file;
  }
  if (opts.json) {
    bgl::write_json_lines(*os, records);
  } else {
    bgl::write_csv(*os, records);
  }
  os->flush();
  if (!opts.out.empty()) {
    std::ofstream mf(opts.out + ".manifest.json",
                     std::ios::binary | std::ios::trunc);
    if (!mf) {
      throw bgl::ResourceError("cannot write manifest next to " + opts.out);
    }
    mf << bgl::manifest_json(subcommand, params, records.size());
  }
}

// Per-prime scans share this shape: records come back in ascending-p order
// whatever the worker count.
template <typename Fn>
std::vector<ExperimentRecord> prime_scan(const std::vector<std::uint64_t>& ps,
                                         unsigned jobs, Fn&& per_prime) {
  return bgl::parallel_map<ExperimentRecord>(
      ps.size(), jobs, [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        ExperimentRecord rec = per_prime(ps[i]);
        rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        return rec;
      });
}

std::string bool_str(bool b) { return b ? "1" : "0"; }

int run_app(int argc, char** argv) {
  CLI::App app{
      "Quadratic non-residues in initial segments, Beatty and "
      "Piatetski-Shapiro sequences: exact desk-scale experiments"};
  app.require_subcommand(1);

  auto* scan = app.add_subcommand(
      "scan-density", "Non-residue density over the initial-segment window");
  CommonOpts scan_common;
  PrimeGrid scan_grid;
  double scan_eps = 0.01;
  std::string scan_policy = "auto";
  add_common(scan, &scan_common);
  add_prime_grid(scan, &scan_grid);
  scan->add_option("--epsilon", scan_eps, "Window exponent offset")
      ->default_val(0.01);
  scan->add_option("--grid", scan_policy, "Scan policy: exact|geometric|auto")
      ->default_val("auto");

  auto* beatty = app.add_subcommand(
      "beatty", "Least index whose Beatty term is a non-residue");
  CommonOpts beatty_common;
  PrimeGrid beatty_grid;
  std::string beatty_alpha = "sqrt2", beatty_beta = "0";
  std::int64_t beatty_cap = 1'000'000;
  add_common(beatty, &beatty_common);
  add_prime_grid(beatty, &beatty_grid);
  beatty->add_option("--alpha", beatty_alpha,
                     "alpha: sqrt2|sqrt3|phi|e or a decimal literal");
  beatty->add_option("--beta", beatty_beta, "beta, same forms");
  beatty->add_option("--cap", beatty_cap, "Scan cap (not-found above)")
      ->default_val(1'000'000);

  auto* ps = app.add_subcommand(
      "ps", "Least n with floor(n^c) a non-residue; optional product pipeline");
  CommonOpts ps_common;
  PrimeGrid ps_grid;
  std::string ps_c = "11/10";
  std::uint64_t ps_cap = 1'000'000;
  bool ps_pipeline = false;
  std::string ps_pair = "1/2,1/2 B";
  double ps_eps = 0.3;
  double ps_log_power = 1.0;
  add_common(ps, &ps_common);
  add_prime_grid(ps, &ps_grid);
  ps->add_option("--c", ps_c, "Exponent c as a/b with 1 < a/b < 2")
      ->default_val("11/10");
  ps->add_option("--cap", ps_cap, "Scan cap")->default_val(1'000'000);
  ps->add_flag("--pipeline", ps_pipeline,
               "Run the dyadic-window product construction instead");
  ps->add_option("--pair", ps_pair, "Exponent pair 'kn/kd,ln/ld [word]'");
  ps->add_option("--epsilon", ps_eps, "Window exponent offset")
      ->default_val(0.3);
  ps->add_option("--log-power", ps_log_power,
                 "Log exponent A in the residue-window size")
      ->default_val(1.0);

  auto* pairs_cmd = app.add_subcommand(
      "exppairs", "A/B-word search maximizing the admissible c-range");
  CommonOpts ep_common;
  unsigned ep_depth = 12;
  add_common(pairs_cmd, &ep_common);
  pairs_cmd->add_option("--depth", ep_depth, "Maximum word length")
      ->default_val(12);

  auto* disc = app.add_subcommand(
      "discrepancy", "Star discrepancy and its exponential-sum bound");
  CommonOpts disc_common;
  std::string disc_alpha;
  std::uint64_t disc_count = 100;
  unsigned disc_h = 10;
  bool disc_random = false;
  std::optional<std::uint64_t> disc_seed;
  add_common(disc, &disc_common);
  disc->add_option("--alpha", disc_alpha,
                   "Kronecker sequence {n alpha}: sqrt2|sqrt3|phi|e|decimal");
  disc->add_flag("--random", disc_random, "Seeded uniform sequence instead");
  disc->add_option("--count", disc_count, "Number of points")->default_val(100);
  disc->add_option("--h-max", disc_h, "Harmonic cutoff H")->default_val(10);
  disc->add_option("--seed", disc_seed, "Seed (required with --random)");

  auto* wv = app.add_subcommand(
      "pairs", "Pair counts W/V and the Beatty-value experiment");
  CommonOpts wv_common;
  PrimeGrid wv_grid;
  std::string wv_alpha = "sqrt2", wv_beta = "0";
  std::uint64_t wv_n = 0, wv_m = 0;
  int wv_sigma = -1;
  bool wv_experiment = false;
  double wv_eps = 0.4;
  add_common(wv, &wv_common);
  add_prime_grid(wv, &wv_grid);
  wv->add_option("--alpha", wv_alpha, "alpha (|alpha| > 1 for the V-counts)");
  wv->add_option("--beta", wv_beta, "beta");
  wv->add_option("--n", wv_n, "Row bound N (direct counting mode)");
  wv->add_option("--m", wv_m, "Column bound M (direct counting mode)");
  wv->add_option("--sigma", wv_sigma, "Symbol value +1 or -1")
      ->default_val(-1);
  wv->add_flag("--experiment", wv_experiment,
               "Derive N, M from p and epsilon and verify all witnesses");
  wv->add_option("--epsilon", wv_eps, "Exponent offset for --experiment")
      ->default_val(0.4);

  auto* consts =
      app.add_subcommand("constants", "Closed-form constants and bound curves");
  CommonOpts c_common;
  bool c_xi = false;
  double c_tolerance = 1e-6;
  std::vector<double> c_gs_alpha;
  unsigned c_gs_grid = 0;
  add_common(consts, &c_common);
  consts->add_flag("--xi", c_xi, "The quadrature constant xi");
  consts->add_option("--tolerance", c_tolerance, "Quadrature tolerance")
      ->default_val(1e-6);
  consts->add_option("--gs-alpha", c_gs_alpha,
                     "Evaluate the bound curves at these alpha");
  consts->add_option("--gs-grid", c_gs_grid,
                     "Evaluate the bound curves on a uniform grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (scan->parsed()) {
    const auto primes = resolve_primes(scan_grid);
    bgl::ScanGrid policy;
    if (scan_policy == "exact")
      policy = bgl::ScanGrid::kExact;
    else if (scan_policy == "geometric")
      policy = bgl::ScanGrid::kGeometric;
    else if (scan_policy == "auto")
      policy = bgl::ScanGrid::kAuto;
    else
      throw bgl::DomainError("--grid must be exact, geometric, or auto");
    auto records = prime_scan(primes, scan_common.jobs, [&](std::uint64_t p) {
      bgl::PrimeContext ctx(p);
      const auto r = bgl::density_scan(ctx, scan_eps, policy);
      ExperimentRecord rec;
      rec.subcommand = "scan-density";
      rec.experiment_id = "scan-density/p=" + std::to_string(p);
      rec.params = {{"epsilon", bgl::format_double(scan_eps)},
                    {"grid", scan_policy}};
      rec.outputs = {
          {"p", bgl::format_uint(r.p)},
          {"window_lo", bgl::format_uint(r.window_lo)},
          {"window_hi", bgl::format_uint(r.window_hi)},
          {"min_density", bgl::format_double(r.min_density)},
          {"argmin_n", bgl::format_uint(r.argmin_n)},
          {"max_abs_charsum_ratio",
           bgl::format_double(r.max_abs_charsum_ratio)},
          {"scanned_points", bgl::format_uint(r.scanned_points)},
      };
      return rec;
    });
    emit(scan_common, "scan-density",
         {{"epsilon", bgl::format_double(scan_eps)},
          {"grid", scan_policy},
          {"prime", scan_grid.single ? std::to_string(scan_grid.single) : ""},
          {"prime-range", scan_grid.range},
          {"jobs", std::to_string(scan_common.jobs)},
          {"json", bool_str(scan_common.json)}},
         records);
    return 0;
  }

  if (beatty->parsed()) {
    const auto primes = resolve_primes(beatty_grid);
    const auto params = bgl::BeattyParams::make(
        beatty_alpha, beatty_beta,
        static_cast<mpfr_prec_t>(beatty_common.precision_bits));
    auto records =
        prime_scan(primes, beatty_common.jobs, [&](std::uint64_t p) {
          bgl::PrimeContext ctx(p);
          const auto n = bgl::least_beatty_nonresidue(params, ctx, beatty_cap);
          ExperimentRecord rec;
          rec.subcommand = "beatty";
          rec.experiment_id = "beatty/p=" + std::to_string(p);
          rec.params = {{"alpha", beatty_alpha},
                        {"beta", beatty_beta},
                        {"cap", std::to_string(beatty_cap)}};
          rec.outputs = {
              {"p", bgl::format_uint(p)},
              {"n", n ? bgl::format_int(*n) : "inf"},
              {"term", n ? bgl::format_int(bgl::beatty_term(params, *n)) : ""},
          };
          return rec;
        });
    emit(beatty_common, "beatty",
         {{"alpha", beatty_alpha},
          {"beta", beatty_beta},
          {"cap", std::to_string(beatty_cap)},
          {"precision-bits", std::to_string(beatty_common.precision_bits)},
          {"prime",
           beatty_grid.single ? std::to_string(beatty_grid.single) : ""},
          {"prime-range", beatty_grid.range},
          {"jobs", std::to_string(beatty_common.jobs)},
          {"json", bool_str(beatty_common.json)}},
         records);
    return 0;
  }

  if (ps->parsed()) {
    const auto primes = resolve_primes(ps_grid);
    const auto psp = bgl::PSParams::parse(ps_c);
    std::vector<ExperimentRecord> records;
    if (!ps_pipeline) {
      records = prime_scan(primes, ps_common.jobs, [&](std::uint64_t p) {
        bgl::PrimeContext ctx(p);
        const auto n = bgl::least_ps_nonresidue(psp, ctx, ps_cap);
        ExperimentRecord rec;
        rec.subcommand = "ps";
        rec.experiment_id = "ps/p=" + std::to_string(p);
        rec.params = {{"c", ps_c}, {"cap", std::to_string(ps_cap)}};
        rec.outputs = {
            {"p", bgl::format_uint(p)},
            {"n", n ? bgl::format_uint(*n) : "inf"},
            {"term", n ? bgl::format_uint(bgl::ps_term(psp, *n)) : ""},
        };
        return rec;
      });
    } else {
      const auto pair = bgl::pair_from_string(ps_pair);
      // the inner product loop parallelizes; keep the prime loop serial
      records = prime_scan(primes, 1, [&](std::uint64_t p) {
        bgl::PrimeContext ctx(p);
        const auto r = bgl::ps_product_pipeline(psp, ctx, pair, ps_eps,
                                              ps_log_power, ps_common.jobs);
        ExperimentRecord rec;
        rec.subcommand = "ps";
        rec.experiment_id = "ps-pipeline/p=" + std::to_string(p);
        rec.params = {{"c", ps_c},
                      {"pair", ps_pair},
                      {"epsilon", bgl::format_double(ps_eps)}};
        rec.outputs = {
            {"p", bgl::format_uint(r.p)},
            {"delta_hat", bgl::format_double(r.delta_hat)},
            {"j_count", std::to_string(r.j_count)},
            {"window_l", bgl::format_uint(r.L)},
            {"window_m", bgl::format_uint(r.M)},
            {"ell_count", std::to_string(r.ell_count)},
            {"m_count", std::to_string(r.m_count)},
            {"criterion_hits", std::to_string(r.criterion_hits)},
            {"unverified_hits", std::to_string(r.unverified_hits)},
            {"witnesses", std::to_string(r.witnesses.size())},
            {"window_small", bool_str(r.window_small)},
        };
        return rec;
      });
    }
    emit(ps_common, "ps",
         {{"c", ps_c},
          {"cap", std::to_string(ps_cap)},
          {"pipeline", bool_str(ps_pipeline)},
          {"pair", ps_pipeline ? ps_pair : ""},
          {"epsilon", bgl::format_double(ps_eps)},
          {"log-power", bgl::format_double(ps_log_power)},
          {"prime", ps_grid.single ? std::to_string(ps_grid.single) : ""},
          {"prime-range", ps_grid.range},
          {"jobs", std::to_string(ps_common.jobs)},
          {"json", bool_str(ps_common.json)}},
         records);
    return 0;
  }

  if (pairs_cmd->parsed()) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = bgl::search_best_c(ep_depth);
    ExperimentRecord rec;
    rec.subcommand = "exppairs";
    rec.experiment_id = "exppairs/depth=" + std::to_string(ep_depth);
    rec.params = {{"depth", std::to_string(ep_depth)}};
    rec.outputs = {
        {"depth", std::to_string(ep_depth)},
        {"best_c", r.best_c.get_str()},
        {"best_c_decimal", bgl::format_double(r.best_c.get_d())},
        {"best_pair", bgl::pair_to_string(r.best)},
        {"distinct_pairs", std::to_string(r.distinct_pairs)},
    };
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    emit(ep_common, "exppairs",
         {{"depth", std::to_string(ep_depth)},
          {"json", bool_str(ep_common.json)}},
         {rec});
    return 0;
  }

  if (disc->parsed()) {
    if (disc_random && !disc_alpha.empty()) {
      throw bgl::DomainError("choose one of --alpha or --random");
    }
    if (!disc_random && disc_alpha.empty()) {
      throw bgl::DomainError("one of --alpha or --random is required");
    }
    if (disc_random && !disc_seed) {
      throw bgl::DomainError("--random requires --seed");
    }
    const auto start = std::chrono::steady_clock::now();
    bgl::UnitSequence seq;
    if (disc_random) {
      seq = bgl::random_unit_sequence(*disc_seed, disc_count);
    } else {
      bool irr = false;
      const auto alpha = bgl::parse_real_token(
          disc_alpha, static_cast<mpfr_prec_t>(disc_common.precision_bits),
          &irr);
      seq = bgl::kronecker_sequence(alpha, disc_count);
    }
    const double dstar = bgl::star_discrepancy(seq);
    const double bound = bgl::erdos_turan_bound(seq, disc_h);
    ExperimentRecord rec;
    rec.subcommand = "discrepancy";
    rec.experiment_id = std::string("discrepancy/") +
                        (disc_random ? "random" : "kronecker=" + disc_alpha);
    rec.params = {{"count", std::to_string(disc_count)},
                  {"h_max", std::to_string(disc_h)}};
    rec.outputs = {
        {"kind", disc_random ? "random" : "kronecker"},
        {"alpha", disc_alpha},
        {"seed", disc_seed ? std::to_string(*disc_seed) : ""},
        {"count", std::to_string(disc_count)},
        {"h_max", std::to_string(disc_h)},
        {"dstar", bgl::format_double(dstar)},
        {"et_bound", bgl::format_double(bound)},
        {"gap", bgl::format_double(bound - dstar)},
    };
    rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    emit(disc_common, "discrepancy",
         {{"alpha", disc_alpha},
          {"random", bool_str(disc_random)},
          {"count", std::to_string(disc_count)},
          {"h-max", std::to_string(disc_h)},
          {"seed", disc_seed ? std::to_string(*disc_seed) : ""},
          {"precision-bits", std::to_string(disc_common.precision_bits)},
          {"json", bool_str(disc_common.json)}},
         {rec});
    return 0;
  }

  if (wv->parsed()) {
    const auto primes = resolve_primes(wv_grid);
    auto params = bgl::BeattyParams::make(
        wv_alpha, wv_beta, static_cast<mpfr_prec_t>(wv_common.precision_bits));
    // Slope below -1 runs through the reflected parameters with
    // sigma = -(-1|p), decided per prime below.
    const bool reflected = params.alpha.sign() < 0;
    if (reflected) params = bgl::reflect_params(params);

    std::vector<ExperimentRecord> records;
    if (wv_experiment) {
      records = prime_scan(primes, wv_common.jobs, [&](std::uint64_t p) {
        bgl::PrimeContext ctx(p);
        const auto r = bgl::beatty_pair_experiment(ctx, params, wv_eps);
        const int sigma_used = reflected ? bgl::reflected_sigma(ctx) : -1;
        ExperimentRecord rec;
        rec.subcommand = "pairs";
        rec.experiment_id = "pairs-experiment/p=" + std::to_string(p);
        rec.params = {{"alpha", wv_alpha},
                      {"beta", wv_beta},
                      {"epsilon", bgl::format_double(wv_eps)}};
        rec.outputs = {
            {"p", bgl::format_uint(r.p)},
            {"n", bgl::format_uint(r.N)},
            {"m", bgl::format_uint(r.M)},
            {"lambda", bgl::format_double(r.lambda)},
            {"w_plus", bgl::format_uint(r.count_W_plus)},
            {"w_minus", bgl::format_uint(r.count_W_minus)},
            {"v_plus", bgl::format_uint(r.count_V_plus)},
            {"v_minus", bgl::format_uint(r.count_V_minus)},
            {"verified_witnesses", std::to_string(r.verified_witnesses)},
            {"sigma_used", std::to_string(sigma_used)},
            {"h_empirical", std::to_string(r.H)},
            {"rho_hat", bgl::format_double(r.rho_hat_at_H)},
        };
        return rec;
      });
    } else {
      if (wv_n == 0 || wv_m == 0) {
        throw bgl::DomainError("--n and --m are required without --experiment");
      }
      records = prime_scan(primes, wv_common.jobs, [&](std::uint64_t p) {
        bgl::PrimeContext ctx(p);
        const int sigma = reflected ? bgl::reflected_sigma(ctx) : wv_sigma;
        const auto r = bgl::pair_count_V(ctx, wv_n, wv_m, sigma, params);
        ExperimentRecord rec;
        rec.subcommand = "pairs";
        rec.experiment_id = "pairs/p=" + std::to_string(p);
        rec.params = {{"alpha", wv_alpha},
                      {"beta", wv_beta},
                      {"n", std::to_string(wv_n)},
                      {"m", std::to_string(wv_m)},
                      {"sigma", std::to_string(wv_sigma)}};
        rec.outputs = {
            {"p", bgl::format_uint(r.p)},
            {"n", bgl::format_uint(r.N)},
            {"m", bgl::format_uint(r.M)},
            {"sigma", std::to_string(r.sigma)},
            {"count_w", bgl::format_uint(r.count_W)},
            {"count_v", bgl::format_uint(r.count_V)},
            {"lambda", bgl::format_double(r.lambda)},
            {"ratio",
             bgl::format_double(r.count_W == 0
                                    ? 0.0
                                    : (double)r.count_V / (double)r.count_W)},
        };
        return rec;
      });
    }
    emit(wv_common, "pairs",
         {{"alpha", wv_alpha},
          {"beta", wv_beta},
          {"n", std::to_string(wv_n)},
          {"m", std::to_string(wv_m)},
          {"sigma", std::to_string(wv_sigma)},
          {"experiment", bool_str(wv_experiment)},
          {"epsilon", bgl::format_double(wv_eps)},
          {"precision-bits", std::to_string(wv_common.precision_bits)},
          {"prime", wv_grid.single ? std::to_string(wv_grid.single) : ""},
          {"prime-range", wv_grid.range},
          {"jobs", std::to_string(wv_common.jobs)},
          {"json", bool_str(wv_common.json)}},
         records);
    return 0;
  }

  if (consts->parsed()) {
    const bool gs_mode = !c_gs_alpha.empty() || c_gs_grid > 0;
    if (c_xi == gs_mode) {
      throw bgl::DomainError(
          "constants: choose --xi or --gs-alpha/--gs-grid (exactly one mode)");
    }
    std::vector<ExperimentRecord> records;
    const auto start = std::chrono::steady_clock::now();
    if (c_xi) {
      ExperimentRecord rec;
      rec.subcommand = "constants";
      rec.experiment_id = "constants/xi";
      rec.params = {{"tolerance", bgl::format_double(c_tolerance)}};
      rec.outputs = {
          {"name", "xi"},
          {"value", bgl::format_double(bgl::xi_constant(c_tolerance))},
          {"tolerance", bgl::format_double(c_tolerance)},
      };
      records.push_back(rec);
    } else {
      std::vector<double> alphas = c_gs_alpha;
      if (c_gs_grid > 0) {
        const double lo = std::exp(-0.5);
        for (unsigned i = 0; i <= c_gs_grid; ++i) {
          alphas.push_back(lo + (1.0 - lo) * i / c_gs_grid);
        }
      }
      for (double a : alphas) {
        const auto curves = bgl::gs_curves(a);
        ExperimentRecord rec;
        rec.subcommand = "constants";
        rec.experiment_id = "constants/gs-alpha=" + bgl::format_double(a);
        rec.params = {{"alpha", bgl::format_double(a)}};
        rec.outputs = {
            {"alpha", bgl::format_double(a)},
            {"bound", bgl::format_double(curves.bound)},
            {"conjecture", bgl::format_double(curves.conjecture)},
        };
        records.push_back(rec);
      }
    }
    for (auto& rec : records) {
      rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
    emit(c_common, "constants",
         {{"xi", bool_str(c_xi)},
          {"tolerance", bgl::format_double(c_tolerance)},
          {"gs-grid", std::to_string(c_gs_grid)},
          {"json", bool_str(c_common.json)}},
         records);
    return 0;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_app(argc, argv);
  } catch (const bgl::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const bgl::PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitResource;
  } catch (const bgl::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const bgl::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
