// sp-baw: block, Brauer-character and weight label enumeration for Sp_2n(q).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "spbaw/report.hpp"

namespace {

struct Options {
  std::uint64_t p = 3;
  std::uint64_t f = 1;
  std::uint64_t ell = 5;
  unsigned n = 1;
  std::vector<std::string> checks;
  std::string out;
  std::string format = "json";
  unsigned jobs = 1;
  std::uint64_t work_limit = 10'000'000;
};

void add_common(CLI::App* cmd, Options& o, bool checks) {
  cmd->add_option("--p", o.p, "odd prime characteristic")->required();
  cmd->add_option("--f", o.f, "q = p^f")->capture_default_str();
  cmd->add_option("--ell", o.ell, "odd prime ell != p")->required();
  cmd->add_option("--n", o.n, "rank")->required();
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--work-limit", o.work_limit, "refuse runs whose estimated frontier exceeds this")
      ->capture_default_str();
  if (checks) {
    cmd->add_option("--checks", o.checks, "subset of counts,bijection,equivariance,invariants")
        ->delimiter(',')
        ->check(CLI::IsMember(spbaw::kAllChecks));
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << text;
}

std::set<std::string> chosen_checks(const std::vector<std::string>& v) {
  return v.empty() ? spbaw::kAllChecks : std::set<std::string>(v.begin(), v.end());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Label enumeration and weight-conjecture checks for Sp_2n(q)"};
  app.require_subcommand(1);

  Options blocks_opt, verify_opt;
  auto* blocks = app.add_subcommand("blocks", "write the block table");
  add_common(blocks, blocks_opt, false);
  auto* verify = app.add_subcommand("verify", "count, match and check every block");
  add_common(verify, verify_opt, true);

  std::vector<std::uint64_t> sweep_p, sweep_f{1}, sweep_ell;
  std::vector<unsigned> sweep_n;
  std::vector<std::string> sweep_checks;
  unsigned sweep_jobs = 1;
  std::uint64_t sweep_limit = 10'000'000;
  std::string cache_dir;
  bool update_cache = false;
  auto* sweep = app.add_subcommand("sweep", "verify a grid and compare with cached reports");
  sweep->add_option("--p", sweep_p, "characteristics")->delimiter(',')->required();
  sweep->add_option("--f", sweep_f, "exponents")->delimiter(',');
  sweep->add_option("--ell", sweep_ell, "primes ell")->delimiter(',')->required();
  sweep->add_option("--n", sweep_n, "ranks")->delimiter(',')->required();
  sweep->add_option("--checks", sweep_checks, "subset of counts,bijection,equivariance,invariants")
      ->delimiter(',')
      ->check(CLI::IsMember(spbaw::kAllChecks));
  sweep->add_option("--jobs", sweep_jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--work-limit", sweep_limit, "per-point work limit");
  sweep->add_option("--cache-dir", cache_dir, "cache directory (default $SP_BAW_CACHE_DIR or .sp-baw-cache)");
  sweep->add_flag("--update-cache", update_cache, "overwrite cached reports with the new results");

  std::uint64_t ft_p = 3, ft_f = 1, ft_ell = 5;
  unsigned ft_deg = 2;
  bool ft_ell_prime = false;
  auto* ftable = app.add_subcommand("ftable", "dump the classified elementary divisors as JSON lines");
  ftable->add_option("--p", ft_p)->required();
  ftable->add_option("--f", ft_f);
  ftable->add_option("--ell", ft_ell)->required();
  ftable->add_option("--max-degree", ft_deg)->capture_default_str();
  ftable->add_flag("--ell-prime-only", ft_ell_prime);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*blocks || *verify) {
      const Options& o = *blocks ? blocks_opt : verify_opt;
      spbaw::FieldContext ctx;
      try {
        ctx = spbaw::make_context(o.p, o.f, o.ell);
        if (o.n == 0) throw std::invalid_argument("n must be positive");
        ctx.require_rank_bound(o.n);
        spbaw::check_work_limit(ctx, o.n, o.work_limit);
      } catch (const std::exception& ex) {
        std::cerr << "sp-baw: " << ex.what() << "\n";
        return 2;
      }
      const spbaw::json report =
          *blocks ? spbaw::blocks_report(ctx, o.n, o.jobs) : spbaw::verify_report(ctx, o.n, chosen_checks(o.checks), o.jobs);
      emit(spbaw::render(report, o.format), o.out);
      if (report.at("status") != "ok") {
        std::cerr << "sp-baw: one or more checks failed\n";
        return 1;
      }
      return 0;
    }

    if (*sweep) {
      std::vector<spbaw::SweepPoint> grid;
      for (auto p : sweep_p)
        for (auto f : sweep_f)
          for (auto ell : sweep_ell)
            for (auto n : sweep_n) grid.push_back({p, f, ell, n});
      if (cache_dir.empty()) {
        const char* env = std::getenv("SP_BAW_CACHE_DIR");
        cache_dir = env && *env ? env : ".sp-baw-cache";
      }
      const auto entries =
          spbaw::sweep(grid, chosen_checks(sweep_checks), sweep_jobs, sweep_limit, cache_dir, update_cache);
      bool ok = true;
      for (const auto& e : entries) {
        std::cout << e.dump() << "\n";
        if (e.at("status") == "fail" || (e.contains("cache") && e.at("cache") == "changed")) ok = false;
      }
      return ok ? 0 : 1;
    }

    if (*ftable) {
      spbaw::FieldContext ctx;
      try {
        ctx = spbaw::make_context(ft_p, ft_f, ft_ell);
        if (ft_deg == 0) throw std::invalid_argument("max degree must be positive");
      } catch (const std::exception& ex) {
        std::cerr << "sp-baw: " << ex.what() << "\n";
        return 2;
      }
      for (const auto& c : spbaw::enumerate_classes(ctx, ft_deg, ft_ell_prime)) {
        std::cout << spbaw::json_of(c).dump() << "\n";
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "sp-baw: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}
