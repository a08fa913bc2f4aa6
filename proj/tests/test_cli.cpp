#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace
{

struct Run
{
  int code;
  std::string out;
};

Run run(std::string const &args)
{
  std::string cmd = std::string(WEYLPIECES_CLI) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  if (!p)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
    out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json run_json(std::string const &args)
{
  Run r = run(args + " --format json");
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

std::string data(std::string const &name) { return std::string(WEYLPIECES_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, EnumerateCounts)
{
  auto doc = run_json("enumerate --type A2 --J 1 --delta id");
  EXPECT_EQ(doc["version"], "weylpieces/1");
  EXPECT_EQ(doc["records"].size(), 3u);
  EXPECT_EQ(run_json("enumerate --type A2 --J 1,2 --delta id")["records"].size(), 1u);
  EXPECT_EQ(run_json("enumerate --type A3 --J 1,3 --delta flip")["records"].size(), 6u);
}

TEST(Cli, OutputIsDeterministic)
{
  auto a = run("enumerate --type B3 --J 1 --format json");
  auto b = run("enumerate --type B3 --J 1 --format json");
  EXPECT_EQ(a.out, b.out);
  auto c = run("enumerate --type A2xA2 --J 1,3 --delta productSwap --format csv --verbose");
  auto d = run("enumerate --type A2xA2 --J 1,3 --delta productSwap --format csv --verbose");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, CsvFlattensWords)
{
  auto r = run("enumerate --type A2 --J 1 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "w,K,stable_index\n,1,0\n2,,1\n1 2,,1\n");
}

TEST(Cli, ReplayRevalidates)
{
  auto r = run("enumerate --type A3 --J 1,3 --delta flip --format json");
  ASSERT_EQ(r.code, 0);
  {
    std::ofstream f("replay_ok.json");
    f << r.out;
  }
  auto doc = run_json("enumerate --replay replay_ok.json");
  EXPECT_EQ(doc["records"], 6);
  EXPECT_EQ(doc["valid"], true);

  auto tampered = json::parse(r.out);
  tampered["records"][1]["K"] = json::array({1});
  {
    std::ofstream f("replay_bad.json");
    f << tampered.dump();
  }
  EXPECT_EQ(run("enumerate --replay replay_bad.json").code, 4);

  {
    std::ofstream f("replay_junk.json");
    f << "{not json";
  }
  EXPECT_EQ(run("enumerate --replay replay_junk.json").code, 2);
}

TEST(Cli, Epsilon)
{
  auto doc = run_json("epsilon --type A2 --J 1 --w 1,2");
  EXPECT_EQ(doc["records"][0]["v"], json::array({1, 2}));
  EXPECT_EQ(doc["records"][0]["witness"], json::array({1}));
  // J empty inverts
  doc = run_json("epsilon --type A3 --J none --w 1,2,3");
  EXPECT_EQ(doc["records"][0]["v"], json::array({3, 2, 1}));
  doc = run_json("epsilon --type A2 --J 1 --w 1,2 --verbose");
  EXPECT_TRUE(doc["records"][0].contains("dual"));
}

TEST(Cli, BedardAndClassify)
{
  auto doc = run_json("bedard --type A2 --J 1 --w 1,2");
  auto const &seq = doc["records"][0]["sequence"];
  ASSERT_EQ(seq.size(), 2u);
  EXPECT_EQ(seq[0]["w"], json::array({2}));
  EXPECT_EQ(seq[1]["J"], json::array());

  doc = run_json("classify --type A2 --J 1 --x 1");
  EXPECT_EQ(doc["records"][0]["result"], json::array());
  doc = run_json("classify --type A2 --J 1 --x 1 --verbose");
  EXPECT_EQ(doc["records"][0]["trace"]["b"], json::array({1}));
}

TEST(Cli, WSet)
{
  auto doc = run_json("wset --type A1xA1 --sigma productSwap --tau productSwap --joracle doubled");
  EXPECT_EQ(doc["records"].size(), 2u);
  doc = run_json("wset --type A2 --J 1 --sigma neg --tau neg");
  ASSERT_EQ(doc["records"].size(), 3u);
  EXPECT_EQ(doc["records"][0]["u"], json::array({1}));
  doc = run_json("wset --type A2 --J 1 --sigma neg --tau neg --joracle custom:" + data("a2_custom.json"));
  EXPECT_EQ(doc["records"].size(), 3u);
}

TEST(Cli, Wp)
{
  auto doc = run_json("wp --type A2 --J 1 --sigma neg");
  ASSERT_EQ(doc["records"].size(), 3u);
  for (auto const &r : doc["records"])
    EXPECT_TRUE(r.contains("image"));
  EXPECT_EQ(run("wp --type A2 --J 1 --sigma flip").code, 2);
}

TEST(Cli, Selftest)
{
  auto doc = run_json("selftest --types A1");
  EXPECT_EQ(doc["passed"], true);
  EXPECT_GT(doc["properties_exercised"].get<int>(), 10);
  doc = run_json("selftest --types A1,A2,B2,A1xA1");
  EXPECT_EQ(doc["passed"], true);
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_EQ(run("selftest --families A --max-rank 2").code, 0);
  EXPECT_EQ(run("selftest --cartan " + data("corrupted.cartan")).code, 2);
  EXPECT_EQ(run("selftest --cartan " + data("a3.cartan")).code, 0);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run("enumerate --type Q3").code, 2);
  EXPECT_EQ(run("enumerate --type A2 --J 5").code, 2);
  EXPECT_EQ(run("enumerate --type A2 --delta rotate").code, 2);
  EXPECT_EQ(run("enumerate --type A2 --delta @" + data("a2_bad.aut")).code, 2);
  EXPECT_EQ(run("enumerate --type A2 --delta neg").code, 2);
  EXPECT_EQ(run("epsilon --type A2 --J 1 --w 2,1").code, 2);
  EXPECT_EQ(run("epsilon --type A2 --J 1").code, 2);
  EXPECT_EQ(run("enumerate --type E8 --J 1").code, 3);
  EXPECT_EQ(run("enumerate --type A3 --guard 10").code, 3);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("enumerate --type A2 --format xml").code, 2);
  EXPECT_EQ(run("enumerate --type A2 --delta @" + data("a2_flip.aut")).code, 0);
}
