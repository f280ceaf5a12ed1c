#include <gtest/gtest.h>

#include <z2norm/bundle.hpp>
#include <z2norm/error.hpp>
#include <z2norm/oracle.hpp>

namespace z2norm::oracle {
namespace {

GL2Matrix M(Int a, Int c, Int b, Int d) { return GL2Matrix::from_rows(a, c, b, d); }

TEST(Random, EmptyWordIsIdentity) { EXPECT_EQ(random_glz({.seed = 5, .word_length = 0}), GL2Matrix::identity()); }

TEST(Random, Deterministic) {
  for (std::uint64_t seed = 0; seed < 50; ++seed)
    ASSERT_EQ(random_glz({.seed = seed, .word_length = 12}), random_glz({.seed = seed, .word_length = 12}));
  Rng a(1), b(1);
  EXPECT_EQ(a.split(3).uniform(0, 1 << 30), b.split(3).uniform(0, 1 << 30));
  EXPECT_NE(Rng(1).split(3).uniform(0, 1 << 30), Rng(1).split(4).uniform(0, 1 << 30));
}

TEST(Random, AlwaysUnimodularAndCoversBothDeterminants) {
  int neg = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto A = random_glz({.seed = seed, .word_length = 10});
    Int det = A.a() * A.d() - A.b() * A.c();
    ASSERT_TRUE(det == 1 || det == -1);
    ASSERT_EQ(det, A.det());
    neg += det == -1;
  }
  EXPECT_GT(neg, 100);
  EXPECT_LT(neg, 900);
}

TEST(Box, EveryEntryUnimodularAndSorted) {
  auto box = unimodular_box(3);
  EXPECT_EQ(box.front(), GL2Matrix::identity());
  Int prev = 0;
  for (std::size_t i = 1; i < box.size(); ++i) {
    const auto& P = box[i];
    Int size = std::max({std::abs(P.a()), std::abs(P.b()), std::abs(P.c()), std::abs(P.d())});
    ASSERT_LE(size, 3);
    ASSERT_GE(size, prev);
    prev = size;
  }
  // Count against a direct four-fold loop.
  std::size_t count = 0;
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      for (Int c = -3; c <= 3; ++c)
        for (Int d = -3; d <= 3; ++d) count += std::abs(a * d - b * c) == 1;
  EXPECT_EQ(box.size(), count);
}

TEST(Conjugate, Examples) {
  auto A = M(-1, 0, 3, -1), B = M(-1, 0, -3, -1);
  auto P = brute_conjugate(A, B, 3);
  ASSERT_TRUE(P);
  EXPECT_EQ(*P * A * P->inverse(), B);
  EXPECT_EQ(brute_conjugate(A, A, 3), GL2Matrix::identity());
  EXPECT_EQ(brute_conjugate(M(2, 1, 1, 1), GL2Matrix::identity(), 5), std::nullopt);  // trace differs
  EXPECT_TRUE(is_negative_shear(M(-1, 0, 7, -1)));
  EXPECT_FALSE(is_negative_shear(M(-1, 1, 0, -1)));
}

TEST(Conjugate, SerialAndParallelAgree) {
  ConjugatorSearch search(6);
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    auto A = random_glz(rng, 6);
    auto pred = [](const GL2Matrix& M) { return M.b() == 0; };
    ASSERT_EQ(search.find(A, pred, Execution::Serial), search.find(A, pred, Execution::Parallel)) << A;
  }
}

TEST(FourPoint, Examples) {
  auto s = [](Int p, Int q) { return Slope::make(p, q); };
  EXPECT_TRUE(check_four_point({s(0, 1), s(2, 1), s(8, 3), s(-2, 1)}));
  EXPECT_TRUE(check_four_point({s(0, 1), s(0, 1), s(0, 1), s(0, 1)}));
  EXPECT_THROW(check_four_point({s(0, 1), s(1, 1), s(2, 1), s(4, 1)}), DomainError);
}

TEST(FourPoint, HoldsOnRandomQuadruples) {
  Rng rng(73);
  for (int i = 0; i < 500; ++i) {
    auto cls = kParityClasses[static_cast<std::size_t>(rng.uniform(0, 2))];
    std::array<Slope, 4> q{random_slope_in_class(rng, cls, 80), random_slope_in_class(rng, cls, 80),
                           random_slope_in_class(rng, cls, 80), random_slope_in_class(rng, cls, 80)};
    ASSERT_TRUE(check_four_point(q));
  }
}

TEST(Grid, SerialAndParallelAgreeWithoutMismatches) {
  auto s = grid_distance_agreement(8, 20, Execution::Serial);
  auto p = grid_distance_agreement(8, 20, Execution::Parallel);
  EXPECT_EQ(s.mismatches, 0u) << s.first_mismatch;
  EXPECT_EQ(s.pairs, p.pairs);
  EXPECT_EQ(s.bfs_found, p.bfs_found);
  EXPECT_EQ(s.bfs_unknown, p.bfs_unknown);
  EXPECT_EQ(s.mismatches, p.mismatches);
  EXPECT_GT(s.bfs_found, 0u);
}

}  // namespace
}  // namespace z2norm::oracle
