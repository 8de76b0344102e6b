#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "spbaw/report.hpp"

using namespace spbaw;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() / ("spbaw-" + tag + "-" + std::to_string(rd()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Report, BlocksReportShape) {
  const auto ctx = make_context(3, 1, 5);
  const auto r = blocks_report(ctx, 1, 1);
  EXPECT_EQ(r.at("status"), "ok");
  EXPECT_EQ(r.at("n"), 1);
  EXPECT_EQ(r.at("context").at("q"), 3);
  EXPECT_EQ(r.at("context").at("e"), 2);
  EXPECT_EQ(r.at("context").at("epsilon"), -1);
  ASSERT_EQ(r.at("blocks").size(), enumerate_blocks(ctx, 1).size());
  for (const auto& row : r.at("blocks")) {
    for (const char* key : {"s", "kappa", "i", "w"}) EXPECT_TRUE(row.contains(key)) << key;
    EXPECT_TRUE(row.at("w").is_object());
  }
}

TEST(Report, VerifyReportIsOkAndComplete) {
  const auto ctx = make_context(3, 1, 5);
  const auto r = verify_report(ctx, 2, kAllChecks, 2);
  EXPECT_EQ(r.at("status"), "ok");
  const auto& checks = r.at("checks");
  EXPECT_EQ(checks.at("equivariance").at("violations"), 0);
  EXPECT_TRUE(checks.at("invariants").at("partition_ok").get<bool>());
  EXPECT_EQ(checks.at("invariants").at("universe"), enumerate_ibr_universe(ctx, 2).size());
  for (const auto& row : r.at("blocks")) {
    EXPECT_EQ(row.at("n_ibr"), row.at("n_weights"));
    EXPECT_TRUE(row.at("bijective").get<bool>());
    EXPECT_TRUE(row.at("equivariant").get<bool>());
  }
}

TEST(Report, ChecksCanBeSkipped) {
  const auto ctx = make_context(3, 1, 5);
  const auto r = verify_report(ctx, 1, {"counts"}, 1);
  EXPECT_EQ(r.at("status"), "ok");
  EXPECT_TRUE(r.at("checks").empty());
  EXPECT_TRUE(r.at("blocks").front().at("equivariant").is_null());
}

TEST(Report, OutputIndependentOfJobs) {
  const auto ctx = make_context(3, 1, 5);
  const std::string one = render(verify_report(ctx, 2, kAllChecks, 1), "json");
  for (unsigned jobs : {2u, 4u, 8u}) EXPECT_EQ(render(verify_report(ctx, 2, kAllChecks, jobs), "json"), one);
  const std::string b1 = render(blocks_report(ctx, 2, 1), "csv");
  EXPECT_EQ(render(blocks_report(ctx, 2, 5), "csv"), b1);
}

TEST(Report, CsvProjection) {
  const auto ctx = make_context(3, 1, 5);
  const auto report = verify_report(ctx, 1, kAllChecks, 1);
  const std::string csv = render(report, "csv");
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "p,f,ell,n,block,s,kappa,i,w,n_ibr,n_weights,n_weights_K,bijective,equivariant");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  EXPECT_EQ(rows, report.at("blocks").size());
  EXPECT_THROW(render(report, "xml"), std::invalid_argument);
}

TEST(Report, WorkLimit) {
  const auto ctx = make_context(3, 1, 5);
  // 1 + 3 + 9 monic polynomials of degree <= 2, times p(3) = 3.
  EXPECT_EQ(estimate_work(ctx, 1), 39u);
  EXPECT_NO_THROW(check_work_limit(ctx, 1, 39));
  EXPECT_THROW(check_work_limit(ctx, 1, 38), WorkLimitError);
  EXPECT_THROW(check_work_limit(make_context(3, 1, 5), 8, 10'000'000), WorkLimitError);
}

TEST(Report, SweepCacheLifecycle) {
  const auto dir = fresh_dir("sweep");
  const std::vector<SweepPoint> grid{{3, 1, 5, 1}, {3, 1, 3, 1}, {5, 1, 3, 1}};
  auto first = sweep(grid, kAllChecks, 1, 10'000'000, dir, false);
  ASSERT_EQ(first.size(), 3u);
  EXPECT_EQ(first[0].at("cache"), "new");
  EXPECT_EQ(first[0].at("status"), "ok");
  EXPECT_EQ(first[1].at("status"), "skipped");
  EXPECT_EQ(first[2].at("cache"), "new");

  auto second = sweep(grid, kAllChecks, 2, 10'000'000, dir, false);
  EXPECT_EQ(second[0].at("cache"), "same");
  EXPECT_EQ(second[2].at("cache"), "same");

  // Corrupt one cached report: the next run flags it, and an update repairs it.
  const auto file = dir / "p3_f1_ell5_n1.json";
  ASSERT_TRUE(std::filesystem::exists(file));
  std::ofstream(file, std::ios::app) << " ";
  auto third = sweep(grid, kAllChecks, 1, 10'000'000, dir, false);
  EXPECT_EQ(third[0].at("cache"), "changed");
  auto fourth = sweep(grid, kAllChecks, 1, 10'000'000, dir, true);
  EXPECT_EQ(fourth[0].at("cache"), "changed");
  auto fifth = sweep(grid, kAllChecks, 1, 10'000'000, dir, false);
  EXPECT_EQ(fifth[0].at("cache"), "same");
  std::filesystem::remove_all(dir);
}
