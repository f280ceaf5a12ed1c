#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2norm/slope.hpp"

namespace z2norm {

enum class SurfaceKind { Empty, TorusFiber, Torus, KleinBottle, NonOrientable, Sum };

std::string to_string(SurfaceKind k);

/// Combinatorial description of a surface realizing a homology class.
///
/// For NonOrientable the genus is g of Pi_g; its certificate, when present,
/// is a curve-complex geodesic of g - 2 edges. Long certificates are dropped
/// and flagged `elided` instead.
struct SurfaceDescription {
  SurfaceKind kind = SurfaceKind::Empty;
  std::string label;
  std::optional<std::uint64_t> genus;
  std::optional<std::vector<Slope>> certificate;
  bool elided = false;
  std::vector<SurfaceDescription> components;  // Sum only
};

/// -chi of the described surface, summed over components; Pi_g counts g - 2.
std::uint64_t z2_norm_of(const SurfaceDescription& s);

/// Pi_g realizer from a geodesic; elides the path beyond `cap` edges.
SurfaceDescription non_orientable_from_path(std::string label, std::uint64_t edges,
                                            std::optional<std::vector<Slope>> path, std::size_t cap);

struct ReportOptions {
  std::size_t certificate_cap = 10000;
};

}  // namespace z2norm
