#include <gtest/gtest.h>

#include <z2norm/bundle.hpp>
#include <z2norm/curve_complex.hpp>
#include <z2norm/error.hpp>
#include <z2norm/oracle.hpp>
#include <z2norm/tree_action.hpp>

#include <algorithm>
#include <set>

namespace z2norm {
namespace {

GL2Matrix M(Int a, Int c, Int b, Int d) { return GL2Matrix::from_rows(a, c, b, d); }

TEST(H2, Cases) {
  EXPECT_EQ(h2_structure(GL2Matrix::identity()).kind, H2Case::IdentityMod2);
  EXPECT_EQ(h2_structure(GL2Matrix::identity()).order(), 8u);
  EXPECT_TRUE(h2_structure(GL2Matrix::identity()).identifies_11);
  EXPECT_EQ(h2_structure(M(1, 1, 0, 1)).kind, H2Case::Fixes10);
  EXPECT_EQ(h2_structure(M(1, 0, 1, 1)).kind, H2Case::Fixes01);
  EXPECT_EQ(h2_structure(M(0, 1, 1, 0)).kind, H2Case::Fixes11);
  EXPECT_EQ(h2_structure(M(2, 1, 1, 1)).kind, H2Case::Transitive);
  EXPECT_EQ(h2_structure(M(2, 1, 1, 1)).order(), 2u);
  EXPECT_EQ(h2_structure(M(1, 1, 0, 1)).order(), 4u);
}

// (j, k) is a class exactly when the dual vector is fixed by A mod 2.
TEST(H2, MatchesKernelOfAMinusIdentity) {
  oracle::Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, 14)));
    auto m = A.mod2();
    auto h = h2_structure(A);
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        bool fixed = ((m.a * k + m.b * j) % 2 == k) && ((m.c * k + m.d * j) % 2 == j);
        ASSERT_EQ(h.contains(j, k), fixed) << A << " " << j << k;
      }
    ASSERT_EQ(h.valid_jk.front(), std::make_pair(0, 0));
  }
}

TEST(Norm, Examples) {
  EXPECT_EQ(z2_norm_bundle(M(1, 0, 6, 1), {0, 1, 0}), 3u);
  EXPECT_EQ(z2_norm_bundle(M(1, 0, 6, 1), {1, 1, 0}), 3u);
  EXPECT_EQ(z2_norm_bundle(M(1, 0, 6, 1), {0, 0, 1}), 0u);
  EXPECT_EQ(z2_norm_bundle(M(1, 0, 6, 1), {1, 0, 0}), 0u);
  EXPECT_EQ(z2_norm_bundle(GL2Matrix::identity(), {1, 1, 1}), 0u);
  EXPECT_THROW(z2_norm_bundle(M(2, 1, 1, 1), {0, 1, 0}), DomainError);
  try {
    z2_norm_bundle(M(2, 1, 1, 1), {0, 1, 0});
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,0)"), std::string::npos) << e.what();
  }
}

TEST(Norm, FiberSymmetryAndRealizers) {
  oracle::Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, 12)));
    auto table = norm_table_bundle(A);
    ASSERT_EQ(table.size(), h2_structure(A).order());
    for (const auto& e : table) {
      ASSERT_EQ(e.norm, z2_norm_bundle(A, {1 - e.cls.t, e.cls.j, e.cls.k}));
      ASSERT_EQ(z2_norm_of(e.realizer), e.norm) << A;
      std::vector<const SurfaceDescription*> parts;
      if (e.realizer.kind == SurfaceKind::Sum)
        for (const auto& c : e.realizer.components) parts.push_back(&c);
      else
        parts.push_back(&e.realizer);
      for (const auto* s : parts) {
        if (s->kind != SurfaceKind::NonOrientable) continue;
        ASSERT_TRUE(s->certificate);
        const auto& path = *s->certificate;
        ASSERT_EQ(*s->genus, path.size() - 1 + 2);
        for (std::size_t k = 0; k + 1 < path.size(); ++k) ASSERT_EQ(intersection_number(path[k], path[k + 1]), 2);
        // The path runs from a vertex to its image: that is what makes the
        // surface close up in the mapping torus.
        ASSERT_EQ(mat_act(A, path.front()), path.back());
      }
    }
  }
}

TEST(Norm, CertificateCapElides) {
  auto A = M(1, 0, 40, 1);
  ReportOptions opts{.certificate_cap = 3};
  auto table = norm_table_bundle(A, opts);
  bool saw = false;
  for (const auto& e : table) {
    if (e.realizer.kind != SurfaceKind::NonOrientable) continue;
    EXPECT_TRUE(e.realizer.elided);
    EXPECT_FALSE(e.realizer.certificate);
    EXPECT_EQ(z2_norm_of(e.realizer), e.norm);
    saw = true;
  }
  EXPECT_TRUE(saw);
}

TEST(Genus, Examples) {
  EXPECT_EQ(mog_bundle(M(1, 0, 2, 1)), ExtNat(3));
  EXPECT_EQ(meg_bundle(M(1, 0, 2, 1)), 4u);
  EXPECT_EQ(mog_bundle(M(1, 0, 6, 1)), ExtNat(5));
  EXPECT_TRUE(mog_bundle(GL2Matrix::identity()).is_infinite());
  EXPECT_EQ(meg_bundle(M(-1, 0, 4, -1)), 2u);
  EXPECT_EQ(meg_bundle(M(1, 0, 0, -1)), 2u);
  EXPECT_EQ(meg_bundle(GL2Matrix::identity()), 4u);
  EXPECT_EQ(meg_bundle(M(2, 1, 1, 1)), 4u);
}

TEST(Genus, MogIsOddAndMatchesParity) {
  oracle::Rng rng(47);
  for (int i = 0; i < 500; ++i) {
    auto A = oracle::random_glz(rng, 12);
    auto mog = mog_bundle(A);
    if (mog.is_finite()) ASSERT_EQ(mog.value() % 2, 1u) << A;
    auto l = translation_length_closed(A, ParityClass::Inf);
    if (l.is_finite() && A.b() != 0) {
      // d(1/0, A 1/0) = N(b, a) has the parity of b/2.
      ASSERT_EQ(distance(Slope::infinity(), mat_act(A, Slope::infinity())).value() % 2,
                static_cast<std::uint64_t>(mod2(A.b() / 2)));
    }
  }
}

TEST(Genus, InverseAndConjugateInvariant) {
  oracle::Rng rng(53);
  for (int i = 0; i < 300; ++i) {
    auto A = oracle::random_glz(rng, 10);
    auto P = oracle::random_glz(rng, 6);
    auto B = P * A * P.inverse();
    ASSERT_EQ(mog_bundle(A), mog_bundle(A.inverse()));
    ASSERT_EQ(mog_bundle(A), mog_bundle(B));
    ASSERT_EQ(meg_bundle(A), meg_bundle(B));
    ASSERT_EQ(norm_multiset_bundle(A), norm_multiset_bundle(B));
    ASSERT_EQ(norm_multiset_bundle(A), norm_multiset_bundle(A.inverse()));
  }
}

TEST(Genus, MegTwoExactlyForOrientationReversingOrNegativeShear) {
  // Independent criterion by bounded search for a conjugate of the form
  // [[-1,0],[n,-1]]; every det 1 trace -2 matrix with small entries is
  // conjugate to one within the box.
  oracle::ConjugatorSearch search(8);
  for (Int a = -4; a <= 4; ++a)
    for (Int c = -4; c <= 4; ++c)
      for (Int b = -4; b <= 4; ++b)
        for (Int d = -4; d <= 4; ++d) {
          Int det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          auto A = M(a, c, b, d);
          bool expected = det == -1 || search.find(A, oracle::is_negative_shear).has_value();
          ASSERT_EQ(meg_bundle(A) == 2u, expected) << A;
        }
}

TEST(Geometry, Classification) {
  EXPECT_EQ(classify_geometry(GL2Matrix::identity()), GeometryClass::EuclideanPeriodic);
  EXPECT_EQ(classify_geometry(M(0, -1, 1, 0)), GeometryClass::EuclideanPeriodic);
  EXPECT_EQ(classify_geometry(M(1, 0, 2, 1)), GeometryClass::Nil);
  EXPECT_EQ(classify_geometry(M(-1, 0, 2, -1)), GeometryClass::Nil);
  EXPECT_EQ(classify_geometry(M(2, 1, 1, 1)), GeometryClass::SolAnosov);
}

TEST(Order, MatchesExplicitPowers) {
  oracle::Rng rng(59);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    auto A = oracle::random_glz(rng, static_cast<std::size_t>(rng.uniform(0, 10)));
    std::optional<unsigned> k;
    for (unsigned e = 1; e <= 12 && !k; ++e)
      if (A.pow(e) == GL2Matrix::identity()) k = e;
    auto o = order(A);
    if (k) {
      ASSERT_EQ(o, ExtNat(*k)) << A;
      seen.insert(*k);
    } else {
      ASSERT_TRUE(o.is_infinite()) << A;
    }
  }
  EXPECT_GE(seen.size(), 3u);
}

TEST(Periodic, Representatives) {
  for (int k = 1; k <= 7; ++k) {
    auto A = periodic_representative(k);
    EXPECT_EQ(periodic_class(A), k);
    EXPECT_TRUE(order(A).is_finite());
    auto P = M(2, 1, 1, 1);
    EXPECT_EQ(periodic_class(P * A * P.inverse()), k);
  }
  EXPECT_EQ(periodic_class(M(1, 0, 2, 1)), std::nullopt);
  EXPECT_EQ(periodic_class(M(-1, 0, 0, -1)), 2);
}

TEST(Periodic, A3AndA4AreNotConjugate) {
  auto A3 = periodic_representative(3), A4 = periodic_representative(4);
  EXPECT_EQ(A3.det(), -1);
  EXPECT_EQ(A4.det(), -1);
  EXPECT_FALSE(oracle::brute_conjugate(A3, A4, 6).has_value());
  EXPECT_NE(norm_multiset_bundle(A3).size(), norm_multiset_bundle(A4).size());
}

}  // namespace
}  // namespace z2norm
