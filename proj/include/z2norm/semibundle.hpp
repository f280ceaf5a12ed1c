#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z2norm/ext_nat.hpp"
#include "z2norm/matrix.hpp"
#include "z2norm/surface.hpp"

namespace z2norm {

/// Z2 class in H2 of the semi-bundle N_A: coefficients of [K1], [K2] and,
/// when b is even, [F_b/a].
struct SemiBundleClass {
  int e1 = 0;
  int e2 = 0;
  int phi = 0;
  bool operator==(const SemiBundleClass&) const = default;
};

struct SemiH2Structure {
  bool b_even;
  std::vector<std::string> generators;

  std::size_t order() const { return b_even ? 8 : 4; }
};

SemiH2Structure h2_structure_semi(const GL2Matrix& A);

std::uint64_t z2_norm_semi(const GL2Matrix& A, const SemiBundleClass& cls);

struct SemiNormEntry {
  SemiBundleClass cls;
  std::uint64_t norm;
  SurfaceDescription realizer;
};

std::vector<SemiNormEntry> norm_table_semi(const GL2Matrix& A, const ReportOptions& opts = {});

std::vector<std::uint64_t> norm_multiset_semi(const GL2Matrix& A);

ExtNat mog_semi(const GL2Matrix& A);

std::uint64_t meg_semi(const GL2Matrix& A);

}  // namespace z2norm
