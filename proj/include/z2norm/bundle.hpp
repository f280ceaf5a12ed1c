#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2norm/ext_nat.hpp"
#include "z2norm/matrix.hpp"
#include "z2norm/surface.hpp"
#include "z2norm/tree_action.hpp"

namespace z2norm {

/// Z2 class in H2 of the mapping torus M_A: t is the coefficient of the
/// fiber class tau, (j, k) the pairings with gamma_mu and gamma_lambda.
struct BundleClass {
  int t = 0;
  int j = 0;
  int k = 0;
  bool operator==(const BundleClass&) const = default;
};

/// The five cases, keyed on A mod 2.
enum class H2Case { Transitive, Fixes10, Fixes01, Fixes11, IdentityMod2 };

std::string to_string(H2Case c);

struct H2Structure {
  H2Case kind;
  std::vector<std::pair<int, int>> valid_jk;  // always starts with (0, 0)
  std::vector<std::string> generators;
  bool identifies_11 = false;  // [F_1/1] = [F_0/1] + [F_1/0], IdentityMod2 only

  std::size_t order() const { return 2 * valid_jk.size(); }
  bool contains(int j, int k) const;
};

H2Structure h2_structure(const GL2Matrix& A);

/// Throws DomainError naming the valid (j, k) set when cls does not exist.
std::uint64_t z2_norm_bundle(const GL2Matrix& A, const BundleClass& cls);

struct BundleNormEntry {
  BundleClass cls;
  std::uint64_t norm;
  SurfaceDescription realizer;
  bool derived_identification = false;
};

std::vector<BundleNormEntry> norm_table_bundle(const GL2Matrix& A, const ReportOptions& opts = {});

/// Norms of every class, ascending. Cheap: no realizers.
std::vector<std::uint64_t> norm_multiset_bundle(const GL2Matrix& A);

/// Minimum odd genus: 2 + the least odd translation length, else infinity.
ExtNat mog_bundle(const GL2Matrix& A);

/// Minimum even genus: 2 when A reverses orientation or is conjugate to
/// [[-1,0],[n,-1]] (det 1 and trace -2), 4 otherwise.
std::uint64_t meg_bundle(const GL2Matrix& A);

enum class GeometryClass { EuclideanPeriodic, Nil, SolAnosov };

std::string to_string(GeometryClass g);

GeometryClass classify_geometry(const GL2Matrix& A);

/// Least k with A^k = I (always one of 1, 2, 3, 4, 6), else infinity.
ExtNat order(const GL2Matrix& A);

/// Index 1..7 of the conjugacy class among the periodic representatives.
std::optional<int> periodic_class(const GL2Matrix& A);

/// The representative A_k, k in 1..7.
GL2Matrix periodic_representative(int k);

}  // namespace z2norm
