#include <gtest/gtest.h>

#include <z2norm/cli.hpp>

#include <json.hpp>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace z2norm::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, BredonWood) {
  auto r = invoke({"bw", "8", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_EQ(invoke({"bw", "3", "5"}).out, "inf\n");
  EXPECT_EQ(invoke({"bw", "4", "6"}).code, kExitDomain);
  EXPECT_EQ(invoke({"bw", "four", "3"}).code, kExitParse);
}

TEST(Cli, DistanceGeodesicAct) {
  EXPECT_EQ(invoke({"dist", "0/1", "8/3"}).out, "2\n");
  EXPECT_EQ(invoke({"dist", "0/1", "1/1"}).out, "inf\n");
  EXPECT_EQ(invoke({"dist", "-2/1", "0/1"}).out, "1\n");
  EXPECT_EQ(invoke({"geodesic", "0/1", "8/3"}).out, "0/1 2/1 8/3\n");
  EXPECT_EQ(invoke({"geodesic", "0/1", "1/1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"act", "-m", "1,0;2,1", "1/0"}).out, "1/2\n");
  EXPECT_EQ(invoke({"dist", "2/4", "0/1"}).code, kExitDomain);
  EXPECT_EQ(invoke({"dist", "2/x", "0/1"}).code, kExitParse);
}

TEST(Cli, BundleAndSemiBundleJson) {
  auto r = invoke({"bundle", "--matrix", "1,0;2,1", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("mog"), 3);
  EXPECT_EQ(doc.at("meg"), 4);
  EXPECT_EQ(doc.at("geometry"), "Nil");

  r = invoke({"semibundle", "--matrix", "0,1;1,0", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("mog"), "inf");
  EXPECT_EQ(doc.at("meg"), 2);
  for (const auto& n : doc.at("norms")) EXPECT_EQ(n.at("norm"), 0);
}

TEST(Cli, ErrorsMapToExitCodes) {
  auto r = invoke({"bundle", "--matrix", "2,0;0,1"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("2"), std::string::npos);
  r = invoke({"bundle", "--matrix", "1,0;2"});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_EQ(invoke({"nonsense"}).code, kExitParse);
  EXPECT_EQ(invoke({"verify", "--level", "huge"}).code, kExitParse);
}

TEST(Cli, CapElidesCertificates) {
  auto r = invoke({"bundle", "--matrix", "1,0;40,1", "--cap", "2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("certificate elided"), std::string::npos);
}

TEST(Cli, CensusRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / ("z2norm_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto in = dir / "in.txt", out = dir / "out.csv";
  {
    std::ofstream f(in);
    f << "1,0;2,1\n2,1;1,1\n0,1;1,0 semibundle\n";
  }
  auto r = invoke({"census", "--in", in.string(), "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream f(out);
  std::vector<std::string> lines;
  for (std::string line; std::getline(f, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "matrix,kind,det,trace,geometry,h2_order,norms,mog,meg");
  EXPECT_EQ(lines[1].rfind("\"1,0;2,1\",bundle", 0), 0u);
  EXPECT_EQ(lines[3].rfind("\"0,1;1,0\",semibundle", 0), 0u);

  EXPECT_EQ(invoke({"census", "--in", (dir / "missing.txt").string(), "--out", out.string()}).code, kExitParse);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExportGraph) {
  auto r = invoke({"export-graph", "--center", "0/1", "--radius", "1", "--bound", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("graph ", 0), 0u);
  EXPECT_NE(r.out.find("\"0/1\" -- \"2/1\""), std::string::npos);
}

TEST(Cli, VerifyQuick) {
  auto r = invoke({"verify", "--level", "quick"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 10);
}

}  // namespace
}  // namespace z2norm::cli
