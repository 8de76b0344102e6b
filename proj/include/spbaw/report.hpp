#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spbaw/serialize.hpp"

namespace spbaw {

inline const std::set<std::string> kAllChecks{"counts", "bijection", "equivariance", "invariants"};

/// Thrown when a run would exceed the configured work limit.
class WorkLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rough size of the enumeration frontier: the number of monic polynomials of
/// degree <= 2n times the number of partitions of 2n+1. Saturates at UINT64_MAX.
std::uint64_t estimate_work(const FieldContext& ctx, unsigned n);
void check_work_limit(const FieldContext& ctx, unsigned n, std::uint64_t limit);

/// {"context", "n", "status", "blocks": [{"s", "kappa", "i", "w"}]}.
json blocks_report(const FieldContext& ctx, unsigned n, unsigned jobs);

/// blocks_report plus per-block counts and flags, and a "checks" section with
/// the global equivariance and block-partition results. "status" is "ok" iff
/// every requested check passed.
json verify_report(const FieldContext& ctx, unsigned n, const std::set<std::string>& checks, unsigned jobs);

/// Pretty JSON, or a flat CSV projection with one row per block.
std::string render(const json& report, const std::string& format);

struct SweepPoint {
  std::uint64_t p = 0, f = 0, ell = 0;
  unsigned n = 0;
};

/// One JSON object per grid point: the run status and how it compares with
/// the cached report ("new", "same", "changed"), or "skipped" with a reason
/// for invalid points. Cached reports live in cache_dir; `update` rewrites them.
std::vector<json> sweep(const std::vector<SweepPoint>& grid, const std::set<std::string>& checks, unsigned jobs,
                        std::uint64_t work_limit, const std::filesystem::path& cache_dir, bool update);

}  // namespace spbaw
