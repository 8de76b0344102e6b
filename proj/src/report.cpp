#include "spbaw/report.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace spbaw {

namespace {

// fn(k) for k in [0, count), spread over `jobs` threads; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> out(count);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k = next++; k < count; k = next++) out[k] = fn(k);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

json weights_json(const FieldContext& ctx, const BlockLabel& b) {
  json w = json::object();
  const auto ws = weights_of(ctx, b);
  for (std::size_t k = 0; k < ws.size(); ++k) w[to_string(b.s.mult[k].first.gamma())] = ws[k];
  return w;
}

json block_row(const FieldContext& ctx, const BlockLabel& b) {
  json row = json_of(b);
  row["w"] = weights_json(ctx, b);
  return row;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::uint64_t estimate_work(const FieldContext& ctx, unsigned n) {
  std::uint64_t polys = 0;
  std::uint64_t power = 1;
  for (unsigned d = 0; d <= 2 * n; ++d) {
    polys = std::min(std::numeric_limits<std::uint64_t>::max() - power, polys) + power;
    power = saturating_mul(power, ctx.q);
  }
  return saturating_mul(polys, enumerate_partitions(static_cast<int>(2 * n + 1)).size());
}

void check_work_limit(const FieldContext& ctx, unsigned n, std::uint64_t limit) {
  const std::uint64_t est = estimate_work(ctx, n);
  if (est > limit) {
    throw WorkLimitError("estimated work " + std::to_string(est) + " exceeds the limit " + std::to_string(limit) +
                         " (raise it with --work-limit)");
  }
}

json blocks_report(const FieldContext& ctx, unsigned n, unsigned jobs) {
  const auto blocks = enumerate_blocks(ctx, n);
  const auto rows = parallel_map(blocks.size(), jobs, [&](std::size_t k) { return block_row(ctx, blocks[k]); });
  return {{"context", json_of(ctx)}, {"n", n}, {"status", "ok"}, {"blocks", rows}};
}

json verify_report(const FieldContext& ctx, unsigned n, const std::set<std::string>& checks, unsigned jobs) {
  const bool counts = checks.contains("counts");
  const bool bijection = checks.contains("bijection");
  const bool equivariance = checks.contains("equivariance");
  const bool invariants = checks.contains("invariants");
  const auto gens = equivariance ? default_generators() : std::vector<AutAction>{};

  const auto blocks = enumerate_blocks(ctx, n);
  const auto reports = parallel_map(blocks.size(), jobs, [&](std::size_t k) { return verify_block(ctx, blocks[k], gens); });

  bool ok = true;
  json rows = json::array();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& r = reports[k];
    json row = block_row(ctx, blocks[k]);
    row["n_ibr"] = r.n_ibr;
    row["n_weights"] = r.n_weights_Q;
    row["n_weights_K"] = r.n_weights_K;
    const bool bij = r.bijective && r.inverse_ok && r.k_forms_match;
    row["bijective"] = bij;
    row["equivariant"] = equivariance ? json(r.equivariant) : json(nullptr);
    if (counts && !(r.n_ibr == r.n_weights_Q && r.n_ibr == r.n_weights_K)) ok = false;
    if (bijection && !bij) ok = false;
    if (equivariance && !r.equivariant) ok = false;
    rows.push_back(std::move(row));
  }

  json summary = json::object();
  if (equivariance) {
    const auto eq = verify_equivariance(ctx, n, gens);
    json shown = json::array();
    for (std::size_t k = 0; k < std::min<std::size_t>(eq.violations.size(), 20); ++k) shown.push_back(eq.violations[k]);
    summary["equivariance"] = {{"checked", eq.checked}, {"violations", eq.violations.size()}, {"examples", shown}};
    ok = ok && eq.violations.empty();
  }
  if (invariants) {
    const auto universe = enumerate_ibr_universe(ctx, n);
    std::map<BlockLabel, std::size_t> index;
    for (std::size_t k = 0; k < blocks.size(); ++k) index.emplace(blocks[k], k);
    std::vector<std::size_t> landed(blocks.size(), 0);
    std::size_t stray = 0;
    for (const auto& x : universe) {
      const auto it = index.find(block_of(ctx, x));
      if (it == index.end()) {
        ++stray;
      } else {
        ++landed[it->second];
      }
    }
    std::size_t total = 0;
    bool matches = stray == 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      total += reports[k].n_ibr;
      matches = matches && landed[k] == reports[k].n_ibr;
    }
    matches = matches && total == universe.size();
    summary["invariants"] = {
        {"universe", universe.size()}, {"sum_n_ibr", total}, {"unassigned", stray}, {"partition_ok", matches}};
    ok = ok && matches;
  }

  return {{"context", json_of(ctx)},
          {"n", n},
          {"status", ok ? "ok" : "fail"},
          {"checks", summary},
          {"blocks", rows}};
}

std::string render(const json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format != "csv") throw std::invalid_argument("unknown format '" + format + "'");
  static const std::vector<std::string> optional_cols{"n_ibr", "n_weights", "n_weights_K", "bijective", "equivariant"};
  std::vector<std::string> cols{"p", "f", "ell", "n", "block", "s", "kappa", "i", "w"};
  const auto& blocks = report.at("blocks");
  for (const auto& c : optional_cols) {
    if (!blocks.empty() && blocks.front().contains(c)) cols.push_back(c);
  }
  std::ostringstream out;
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << "\n";
  const auto& ctx = report.at("context");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& row = blocks[b];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& c = cols[k];
      json v;
      if (c == "p" || c == "f" || c == "ell") {
        v = ctx.at(c);
      } else if (c == "n") {
        v = report.at("n");
      } else if (c == "block") {
        v = b;
      } else {
        v = row.at(c);
      }
      out << (k ? "," : "") << csv_cell(v);
    }
    out << "\n";
  }
  return out.str();
}

std::vector<json> sweep(const std::vector<SweepPoint>& grid, const std::set<std::string>& checks, unsigned jobs,
                        std::uint64_t work_limit, const std::filesystem::path& cache_dir, bool update) {
  std::filesystem::create_directories(cache_dir);
  std::vector<json> out;
  for (const auto& pt : grid) {
    json entry = {{"p", pt.p}, {"f", pt.f}, {"ell", pt.ell}, {"n", pt.n}};
    FieldContext ctx;
    try {
      ctx = make_context(pt.p, pt.f, pt.ell);
      if (pt.n == 0) throw std::invalid_argument("n must be positive");
      ctx.require_rank_bound(pt.n);
      check_work_limit(ctx, pt.n, work_limit);
    } catch (const std::exception& ex) {
      entry["status"] = "skipped";
      entry["reason"] = ex.what();
      out.push_back(std::move(entry));
      continue;
    }
    const json report = verify_report(ctx, pt.n, checks, jobs);
    const std::string text = report.dump(2) + "\n";
    const auto file = cache_dir / ("p" + std::to_string(pt.p) + "_f" + std::to_string(pt.f) + "_ell" +
                                   std::to_string(pt.ell) + "_n" + std::to_string(pt.n) + ".json");
    std::string cached;
    const bool have = std::filesystem::exists(file);
    if (have) {
      std::ifstream in(file, std::ios::binary);
      cached.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    entry["status"] = report.at("status");
    entry["blocks"] = report.at("blocks").size();
    entry["cache"] = !have ? "new" : (cached == text ? "same" : "changed");
    if (!have || update) {
      std::ofstream os(file, std::ios::binary);
      os << text;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace spbaw
