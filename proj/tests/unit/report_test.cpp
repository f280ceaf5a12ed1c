#include <gtest/gtest.h>

#include <z2norm/error.hpp>
#include <z2norm/oracle.hpp>
#include <z2norm/report.hpp>

#include <sstream>

namespace z2norm::report {
namespace {

using nlohmann::json;

GL2Matrix M(Int a, Int c, Int b, Int d) { return GL2Matrix::from_rows(a, c, b, d); }

TEST(Json, InfinityIsAString) {
  EXPECT_EQ(to_json(ExtNat::infinity()), json("inf"));
  EXPECT_EQ(to_json(ExtNat(4)), json(4));
  auto doc = bundle_json(GL2Matrix::identity());
  EXPECT_EQ(doc.at("mog"), json("inf"));
  EXPECT_EQ(doc.at("order"), json(1));
  EXPECT_EQ(semibundle_json(M(0, 1, 1, 0)).at("mog"), json("inf"));
}

TEST(Json, BundleFields) {
  auto doc = bundle_json(M(1, 0, 6, 1));
  EXPECT_EQ(doc.at("geometry"), "Nil");
  EXPECT_EQ(doc.at("h2").at("order"), 8);
  EXPECT_EQ(doc.at("norms").size(), 8u);
  EXPECT_EQ(doc.at("mog"), 5);
  EXPECT_EQ(doc.at("meg"), 4);
  for (const auto& n : doc.at("norms")) EXPECT_EQ(n.at("norm"), n.at("realizer").at("norm"));
  EXPECT_EQ(doc.at("translation_lengths").size(), 3u);
}

TEST(Json, RoundTripIsByteIdentical) {
  oracle::Rng rng(81);
  for (int i = 0; i < 60; ++i) {
    auto A = oracle::random_glz(rng, 10);
    for (const auto& doc : {bundle_json(A), semibundle_json(A)}) {
      const std::string text = doc.dump(2);
      ASSERT_EQ(recompute(json::parse(text)).dump(2), text) << A;
    }
  }
  EXPECT_THROW(recompute(json{{"kind", "knot"}, {"matrix", "1,0;0,1"}}), ParseError);
}

TEST(Csv, HeaderAndQuoting) {
  EXPECT_EQ(csv_header(), "matrix,kind,det,trace,geometry,h2_order,norms,mog,meg");
  auto line = csv_line(census_row(M(1, 0, 2, 1), ManifoldKind::Bundle));
  EXPECT_EQ(line, "\"1,0;2,1\",bundle,1,2,Nil,8,0|0|0|0|1|1|1|1,3,4");
  auto semi = csv_line(census_row(M(0, 1, 1, 0), ManifoldKind::SemiBundle));
  EXPECT_EQ(semi, "\"0,1;1,0\",semibundle,-1,0,,4,0|0|0|0,inf,2");
}

TEST(Census, ParsesInputAndKeepsOrder) {
  std::istringstream in("# header\n1,0;2,1\n\n0,1;1,0 semibundle  # trailing\n2,1;1,1 bundle\n");
  auto inputs = parse_census_input(in);
  ASSERT_EQ(inputs.size(), 3u);
  EXPECT_EQ(inputs[1].kind, ManifoldKind::SemiBundle);
  auto rows = census(inputs, Execution::Parallel);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rows[i].matrix, inputs[i].matrix);

  std::istringstream bad_kind("1,0;0,1 torus\n");
  EXPECT_THROW(parse_census_input(bad_kind), ParseError);
  std::istringstream bad_matrix("1,0;0\n");
  EXPECT_THROW(parse_census_input(bad_matrix), ParseError);
  std::istringstream bad_det("2,0;0,1\n");
  EXPECT_THROW(parse_census_input(bad_det), DomainError);
}

TEST(Census, SerialAndParallelAgree) {
  std::vector<CensusInput> inputs;
  oracle::Rng rng(83);
  for (int i = 0; i < 200; ++i)
    inputs.push_back({oracle::random_glz(rng, 10), rng.coin() ? ManifoldKind::Bundle : ManifoldKind::SemiBundle});
  auto s = census(inputs, Execution::Serial), p = census(inputs, Execution::Parallel);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) ASSERT_EQ(csv_line(s[i]), csv_line(p[i]));
}

TEST(Text, ReportsMentionKeyFacts) {
  auto text = bundle_text(M(1, 0, 6, 1));
  EXPECT_NE(text.find("mog 5"), std::string::npos);
  EXPECT_NE(text.find("via 1/0 1/2 1/4 1/6"), std::string::npos);
  auto elided = bundle_text(M(1, 0, 6, 1), {.certificate_cap = 1});
  EXPECT_NE(elided.find("certificate elided"), std::string::npos);
  auto semi = semibundle_text(M(3, 1, 8, 3));
  EXPECT_NE(semi.find("via 1/0 1/2 3/8"), std::string::npos);
  EXPECT_NE(semi.find("mog inf"), std::string::npos);
}

}  // namespace
}  // namespace z2norm::report
