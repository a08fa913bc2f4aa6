#include <gtest/gtest.h>

#include <weylpieces/properties.hpp>

#include "helpers.hpp"

using namespace weylpieces;

namespace
{

void expect_all_pass(char const *type, std::size_t min_exercised)
{
  auto results = properties::run_all(build_root_system(type));
  std::size_t exercised = 0;
  for (auto const &r : results) {
    EXPECT_TRUE(r.passed()) << type << " " << r.name << ": " << r.first_failure;
    EXPECT_FALSE(r.skipped) << type << " " << r.name;
    exercised += r.cases > 0;
  }
  EXPECT_GT(exercised, min_exercised) << type;
}

} // namespace

TEST(Properties, A1) { expect_all_pass("A1", 10); }
TEST(Properties, A2) { expect_all_pass("A2", 10); }
TEST(Properties, B2) { expect_all_pass("B2", 10); }
TEST(Properties, A1xA1) { expect_all_pass("A1xA1", 10); }
TEST(Properties, G2) { expect_all_pass("G2", 10); }

TEST(Properties, GuardSkipsLargeSystems)
{
  auto results = properties::run_all(build_root_system("E8"));
  ASSERT_EQ(results.size(), 1u);
  EXPECT_TRUE(results[0].skipped);
}

TEST(Properties, FailuresAreRecorded)
{
  auto rs = build_root_system("A1");
  auto r = properties::run_property("always_fails", *rs, [](properties::Recorder &rec) {
    rec.check(true, [] { return std::string("unused"); });
    rec.check(false, [] { return std::string("first"); });
    rec.check(false, [] { return std::string("second"); });
  });
  EXPECT_EQ(r.cases, 3u);
  EXPECT_EQ(r.failures, 2u);
  EXPECT_EQ(r.first_failure, "first");

  auto thrown = properties::run_property("throws", *rs, [](properties::Recorder &) {
    throw ContractViolation("boom");
  });
  EXPECT_FALSE(thrown.passed());
  EXPECT_EQ(thrown.first_failure, "boom");
}
